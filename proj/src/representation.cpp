#include "menger/representation.hpp"

#include <algorithm>

namespace menger {

namespace {

// v-regularity of an equivalence via single-coordinate replacement by the
// class representative; equivalent to the simultaneous form thanks to
// symmetry and transitivity.
bool equivalence_v_regular(const MengerAlgebra& alg,
                           const EquivalenceRelation& E) {
  std::vector<int> reps = E.representatives();
  for (int i = 1; i <= alg.arity; ++i)
    for (int x = 0; x < alg.size; ++x) {
      int r = reps[E.class_of[x]];
      if (r == x) continue;
      for (int u = 0; u < alg.size; ++u) {
        Tuple ctx(alg.arity - 1, 0);
        bool more = true;
        while (more) {
          if (E.class_of[substitute_at(alg, u, ctx, i, x)] !=
              E.class_of[substitute_at(alg, u, ctx, i, r)])
            return false;
          more = alg.arity > 1 && next_tuple(ctx, alg.size);
        }
      }
    }
  return true;
}

}  // namespace

SimplestRep simplest_representation(const MengerAlgebra& alg,
                                    const EquivalenceRelation& E,
                                    const std::vector<int>& W,
                                    VerifyMode verify) {
  if (E.size != alg.size) throw InputError("equivalence size mismatch");
  if (!equivalence_v_regular(alg, E))
    throw InputError("equivalence is not v-regular");

  int w_class = -1;
  if (!W.empty()) {
    std::vector<char> inW = indicator(W, alg.size);
    w_class = E.class_of[W[0]];
    for (int x = 0; x < alg.size; ++x)
      if (inW[x] != (E.class_of[x] == w_class))
        throw InputError("W is not a class of the given equivalence");
    PropResult ideal = subset_l_ideal(alg, inW);
    if (!ideal.holds) throw InputError("W is not an l-ideal");
  }

  SimplestRep out;
  out.classes = E;
  out.w_class = w_class;
  out.class_point.assign(E.num_classes, -1);
  int points = 0;
  for (int c = 0; c < E.num_classes; ++c)
    if (c != w_class) out.class_point[c] = points++;

  const std::vector<int> reps = E.representatives();
  std::vector<int> point_class(points);
  for (int c = 0; c < E.num_classes; ++c)
    if (out.class_point[c] >= 0) point_class[out.class_point[c]] = c;

  out.rep.source_size = alg.size;
  out.rep.arity = alg.arity;
  out.rep.carrier = std::max(points, 1);
  out.rep.images.assign(alg.size,
                        NPlaceFunction{out.rep.carrier, alg.arity, {}});

  bool do_verify = verify == VerifyMode::on ||
                   (verify == VerifyMode::automatic && alg.size <= 12);
  const std::vector<std::vector<int>> cls = E.classes();

  for (int g = 0; g < alg.size; ++g) {
    Tuple args(alg.arity, 0);
    if (points == 0) continue;  // empty index set: every image is empty
    do {
      std::vector<int> xs(alg.arity);
      for (int k = 0; k < alg.arity; ++k) xs[k] = reps[point_class[args[k]]];
      int c = E.class_of[alg.apply(g, xs)];
      if (do_verify) {
        // Full containment g[H_{a_1}...H_{a_n}] within one class.
        Tuple pick(alg.arity, 0);
        do {
          std::vector<int> hs(alg.arity);
          bool valid = true;
          for (int k = 0; k < alg.arity && valid; ++k) {
            const auto& members = cls[point_class[args[k]]];
            if (pick[k] >= static_cast<int>(members.size()))
              valid = false;
            else
              hs[k] = members[pick[k]];
          }
          if (valid && E.class_of[alg.apply(g, hs)] != c) {
            throw IntegrityError(
                "class containment fails for element " + std::to_string(g) +
                " at point tuple " + format_set(args));
          }
        } while (next_tuple(pick, alg.size));
      }
      if (c != w_class) out.rep.images[g].graph.emplace(args, out.class_point[c]);
    } while (next_tuple(args, points));
  }
  return out;
}

bool RepReport::ok(bool need_meet) const {
  if (composition.status != CheckStatus::pass) return false;
  if (projection.status != CheckStatus::pass) return false;
  if (need_meet && meet_compat.status != CheckStatus::pass) return false;
  return true;
}

RepReport verify_representation(const MengerAlgebra& alg,
                                const Representation& rep) {
  if (rep.source_size != alg.size || rep.arity != alg.arity)
    throw InputError("representation does not match the algebra");
  RepReport report;

  {
    bool done = false;
    for (int x = 0; x < alg.size && !done; ++x) {
      Tuple ys(alg.arity, 0);
      do {
        std::vector<NPlaceFunction> gs;
        gs.reserve(alg.arity);
        for (int y : ys) gs.push_back(rep.images[y]);
        if (compose_menger(rep.images[x], gs) !=
            rep.images[alg.apply(x, ys)]) {
          report.composition.status = CheckStatus::fail;
          report.composition.witness = {{"x", x}};
          for (std::size_t k = 0; k < ys.size(); ++k)
            report.composition.witness.emplace_back(
                "y" + std::to_string(k + 1), ys[k]);
          done = true;
          break;
        }
      } while (next_tuple(ys, alg.size));
    }
  }

  for (int i = 1; i <= alg.arity &&
                  report.projection.status == CheckStatus::pass; ++i)
    for (int g = 0; g < alg.size; ++g) {
      if (rep.images[alg.pr(i, g)] != project(rep.images[g], i)) {
        report.projection.status = CheckStatus::fail;
        report.projection.witness = {{"i", i}, {"g", g}};
        break;
      }
    }

  if (!alg.meet) {
    report.meet_compat.status = CheckStatus::not_applicable;
  } else {
    for (int a = 0; a < alg.size &&
                    report.meet_compat.status == CheckStatus::pass; ++a)
      for (int b = 0; b < alg.size; ++b) {
        if (rep.images[alg.meet_of(a, b)] !=
            meet(rep.images[a], rep.images[b])) {
          report.meet_compat.status = CheckStatus::fail;
          report.meet_compat.witness = {{"g1", a}, {"g2", b}};
          break;
        }
      }
  }
  return report;
}

std::vector<int> representation_stabilizer(const Representation& rep, int a) {
  if (a < 0 || a >= rep.carrier) throw InputError("point out of range");
  Tuple diag(rep.arity, a);
  std::vector<int> out;
  for (int g = 0; g < rep.source_size; ++g) {
    auto v = rep.images[g].eval(diag);
    if (v && *v == a) out.push_back(g);
  }
  return out;
}

std::vector<int> sum_offsets(std::span<const Representation> parts) {
  std::vector<int> off(parts.size(), 0);
  for (std::size_t k = 1; k < parts.size(); ++k)
    off[k] = off[k - 1] + parts[k - 1].carrier;
  return off;
}

Representation sum_representations(std::span<const Representation> parts) {
  if (parts.empty()) throw InputError("sum of zero representations");
  for (const auto& p : parts)
    if (p.source_size != parts[0].source_size || p.arity != parts[0].arity)
      throw InputError("summands disagree on source algebra");

  std::vector<int> off = sum_offsets(parts);
  Representation out;
  out.source_size = parts[0].source_size;
  out.arity = parts[0].arity;
  out.carrier = off.back() + parts.back().carrier;
  out.images.assign(out.source_size,
                    NPlaceFunction{out.carrier, out.arity, {}});
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (int g = 0; g < out.source_size; ++g)
      for (const auto& [args, value] : parts[k].images[g].graph) {
        Tuple shifted(args);
        for (int& a : shifted) a += off[k];
        out.images[g].graph.emplace(shifted, value + off[k]);
      }
  return out;
}

Representation identity_representation(const FunctionSystem& sys) {
  std::string missing;
  if (!system_is_closed(sys, &missing))
    throw InputError("system not closed: missing " + missing);
  Representation out;
  out.source_size = static_cast<int>(sys.functions.size());
  out.arity = sys.arity;
  out.carrier = sys.carrier;
  out.images = sys.functions;
  return out;
}

}  // namespace menger
