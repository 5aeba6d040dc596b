#include "menger/stabilizers.hpp"

#include <algorithm>

namespace menger {

namespace {

// Accumulates condition results; short-circuits unless auditing.
struct Collector {
  Verdict verdict;
  bool audit = false;
  bool done = false;

  explicit Collector(bool full_audit) : audit(full_audit) {
    verdict.pass = true;
  }

  bool should_stop() const { return done && !audit; }

  void fail(const std::string& name, WitnessVars witness) {
    if (!done) {
      verdict.pass = false;
      verdict.failed_condition = name;
      verdict.witness = std::move(witness);
      done = true;
    }
    verdict.all_failures.push_back(name);
  }

  void check(const std::string& name, const PropResult& res) {
    if (should_stop()) return;
    if (!res.holds) fail(name, res.witness);
  }
};

PropResult proj_into(const MengerAlgebra& alg, const std::vector<char>& from,
                     const std::vector<char>& into) {
  for (int i = 1; i <= alg.arity; ++i)
    for (int x = 0; x < alg.size; ++x)
      if (from[x] && !into[alg.pr(i, x)])
        return {false, {{"i", i}, {"x", x}}};
  return {};
}

// t carries H into U along equal diagonal values: x,y in H and t(x) in U
// imply t(y) in U.
PropResult transfer_condition(const TransformSet& T, const std::vector<int>& H,
                              const std::vector<char>& inH,
                              const std::vector<char>& inU) {
  (void)inH;
  for (int x : H)
    for (int y : H)
      for (std::size_t k = 0; k < T.maps.size(); ++k)
        if (inU[T.maps[k][x]] && !inU[T.maps[k][y]])
          return {false, {{"x", x}, {"y", y}, {"t", static_cast<int>(k)}}};
  return {};
}

// x = y[R_1 x ... R_n x] in U and u[w-bar|_i y] in A imply
// u[w-bar|_i x] in A, including the empty-symbol case.
PropResult substitution_condition(const MengerAlgebra& alg,
                                  const BinaryRelation& le,
                                  const std::vector<char>& inU,
                                  const std::vector<char>& inA) {
  for (int x = 0; x < alg.size; ++x) {
    if (!inU[x]) continue;
    for (int y = 0; y < alg.size; ++y) {
      if (!le.at(x, y)) continue;
      if (inA[y] && !inA[x]) return {false, {{"x", x}, {"y", y}}};
      for (int i = 1; i <= alg.arity; ++i)
        for (int u = 0; u < alg.size; ++u) {
          Tuple ctx(alg.arity - 1, 0);
          bool more = true;
          while (more) {
            if (inA[substitute_at(alg, u, ctx, i, y)] &&
                !inA[substitute_at(alg, u, ctx, i, x)]) {
              WitnessVars w = {{"x", x}, {"y", y}, {"i", i}, {"u", u}};
              for (std::size_t k = 0; k < ctx.size(); ++k)
                w.emplace_back("w" + std::to_string(k + 1), ctx[k]);
              return {false, w};
            }
            more = alg.arity > 1 && next_tuple(ctx, alg.size);
          }
        }
    }
  }
  return {};
}

void require_subset(const std::vector<int>& H, const std::vector<char>& inU,
                    const std::string& what) {
  for (int x : H)
    if (!inU[x]) throw InputError(what + " must contain H (missing " +
                                  std::to_string(x) + ")");
}

}  // namespace

Verdict check_theorem1(const MengerAlgebra& alg, const TransformSet& T,
                       const std::vector<int>& H, const std::vector<int>& U,
                       bool full_audit) {
  if (H.empty()) throw InputError("H must be nonempty");
  std::vector<char> inH = indicator(H, alg.size);
  std::vector<char> inU = indicator(U, alg.size);
  require_subset(H, inU, "U");
  std::vector<char> inComp(alg.size);
  for (int x = 0; x < alg.size; ++x) inComp[x] = !inU[x];

  Collector col(full_audit);
  col.check("quasi-stable", subset_quasi_stable(alg, inH));
  col.check("l-unitary", subset_l_unitary(alg, inH));
  if (!col.should_stop()) {
    WitnessVars w;
    if (!is_normal_v_complex(alg, T, H, &w)) col.fail("normal-v-complex", w);
  }
  col.check("proj-U-in-H", proj_into(alg, inU, inH));
  col.check("proj-complement", proj_into(alg, inComp, inComp));
  if (!col.should_stop())
    col.check("f-1", transfer_condition(T, H, inH, inU));
  if (!col.should_stop()) {
    BinaryRelation le = zeta(alg);
    col.check("f-2", substitution_condition(alg, le, inU, inH));
    if (!col.should_stop())
      col.check("f-3", substitution_condition(alg, le, inU, inU));
  }
  return col.verdict;
}

Verdict check_theorem2(const MengerAlgebra& alg, const TransformSet& T,
                       const std::vector<int>& H, bool full_audit) {
  if (H.empty()) throw InputError("H must be nonempty");
  std::vector<char> inH = indicator(H, alg.size);

  Collector col(full_audit);
  col.check("quasi-stable", subset_quasi_stable(alg, inH));
  col.check("l-unitary", subset_l_unitary(alg, inH));
  if (!col.should_stop()) {
    WitnessVars w;
    if (!is_normal_v_complex(alg, T, H, &w)) col.fail("normal-v-complex", w);
  }
  col.check("proj-H", proj_into(alg, inH, inH));
  if (col.should_stop()) return col.verdict;

  ChClosure closure = ch_closure(alg, T, H, H);
  col.verdict.U = closure.closure;
  col.verdict.stages = closure.stages;
  std::vector<char> inU = indicator(closure.closure, alg.size);
  col.check("f-22", substitution_condition(alg, zeta(alg), inU, inH));
  return col.verdict;
}

Verdict check_theorem3(const MengerAlgebra& alg, const TransformSet& T,
                       const std::vector<int>& H, int m_max, bool full_audit) {
  if (H.empty()) throw InputError("H must be nonempty");
  if (m_max < 1) throw InputError("stage bound must be >= 1");
  std::vector<char> inH = indicator(H, alg.size);

  Collector col(full_audit);
  col.check("quasi-stable", subset_quasi_stable(alg, inH));
  col.check("l-unitary", subset_l_unitary(alg, inH));
  if (!col.should_stop()) {
    WitnessVars w;
    if (!is_normal_v_complex(alg, T, H, &w)) col.fail("normal-v-complex", w);
  }
  col.check("proj-H", proj_into(alg, inH, inH));
  if (col.should_stop()) return col.verdict;

  BinaryRelation le = zeta(alg);
  for (int m = 1; m <= m_max && !col.should_stop(); ++m) {
    // A_m: premise membership decided by the stage-m condition system.
    std::vector<char> inStage(alg.size, 0);
    for (int x = 0; x < alg.size; ++x)
      inStage[x] = stage_condition(alg, T, H, H, m, x, m_max);
    PropResult res = substitution_condition(alg, le, inStage, inH);
    if (!res.holds) {
      res.witness.emplace_back("m", m);
      col.fail("A_" + std::to_string(m), res.witness);
    }
  }
  return col.verdict;
}

Verdict check_theorem4(const MengerAlgebra& alg, const std::vector<int>& H,
                       const std::vector<int>& U, bool full_audit) {
  if (!alg.meet) throw InputError("theorem 4 needs a meet table");
  if (H.empty()) throw InputError("H must be nonempty");
  std::vector<char> inH = indicator(H, alg.size);
  std::vector<char> inU = indicator(U, alg.size);
  require_subset(H, inU, "U");
  std::vector<char> inComp(alg.size);
  for (int x = 0; x < alg.size; ++x) inComp[x] = !inU[x];

  Collector col(full_audit);
  col.check("quasi-stable", subset_quasi_stable(alg, inH));
  col.check("meet-stable", subset_meet_stable(alg, inH));
  col.check("v-unitary", subset_v_unitary(alg, inH));
  col.check("proj-U-in-H", proj_into(alg, inU, inH));
  col.check("proj-complement", proj_into(alg, inComp, inComp));
  if (!col.should_stop()) {
    PropResult res;
    for (int x = 0; x < alg.size && res.holds; ++x) {
      if (!inU[x]) continue;
      for (int y = 0; y < alg.size; ++y)
        if (inH[y] && !inH[alg.apply_rdiag(y, x)]) {
          res = {false, {{"x", x}, {"y", y}}};
          break;
        }
    }
    col.check("T4-1", res);
  }
  if (!col.should_stop()) {
    PropResult res;
    for (int x = 0; x < alg.size && res.holds; ++x) {
      if (!inU[x]) continue;
      for (int y = 0; y < alg.size; ++y)
        if (inU[y] && !inU[alg.apply_rdiag(y, x)]) {
          res = {false, {{"x", x}, {"y", y}}};
          break;
        }
    }
    col.check("T4-1a", res);
  }
  return col.verdict;
}

Verdict check_theorem5(const MengerAlgebra& alg, const std::vector<int>& H,
                       bool full_audit) {
  if (!alg.meet) throw InputError("theorem 5 needs a meet table");
  if (H.empty()) throw InputError("H must be nonempty");
  std::vector<char> inH = indicator(H, alg.size);

  Collector col(full_audit);
  col.check("stable", subset_stable(alg, inH));
  col.check("meet-stable", subset_meet_stable(alg, inH));
  col.check("v-unitary", subset_v_unitary(alg, inH));
  col.check("proj-H", proj_into(alg, inH, inH));
  if (col.should_stop()) return col.verdict;

  // U_0: the chi-image of H.
  BinaryRelation sq = chi(alg);
  std::vector<int> U0;
  for (int x = 0; x < alg.size; ++x)
    for (int h : H)
      if (sq.at(h, x)) {
        U0.push_back(x);
        break;
      }
  col.verdict.U0 = U0;

  Verdict t4 = check_theorem4(alg, H, U0, full_audit);
  if (!t4.pass) {
    col.fail("via-T4:" + t4.failed_condition, t4.witness);
    for (const auto& f : t4.all_failures)
      if (col.verdict.all_failures.empty() ||
          col.verdict.all_failures.back() != "via-T4:" + f)
        col.verdict.all_failures.push_back("via-T4:" + f);
  }
  return col.verdict;
}

std::optional<std::vector<int>> find_theorem1_domain(
    const MengerAlgebra& alg, const TransformSet& T,
    const std::vector<int>& H) {
  if (alg.size > 14)
    throw CapExceeded("exhaustive U search is limited to |G| <= 14");
  std::vector<int> rest = complement_of(H, alg.size);
  const std::uint64_t total = std::uint64_t(1) << rest.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> U = H;
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (mask & (std::uint64_t(1) << k)) U.push_back(rest[k]);
    std::sort(U.begin(), U.end());
    if (check_theorem1(alg, T, H, U).pass) return U;
  }
  return std::nullopt;
}

StabilizerWitness build_witness(const MengerAlgebra& alg,
                                const TransformSet& T,
                                const std::vector<int>& H, WitnessMode mode) {
  if (H.empty()) throw InputError("H must be nonempty");

  EquivalenceRelation E;
  std::vector<int> U;
  if (mode == WitnessMode::theorem2) {
    Verdict v = check_theorem2(alg, T, H);
    if (!v.pass)
      throw InputError("checker rejected H at " + v.failed_condition);
    U = *v.U;
    E = intersect_equivalences(subset_equivalence(alg, T, H),
                               subset_equivalence(alg, T, U));
  } else {
    Verdict v = check_theorem5(alg, H);
    if (!v.pass)
      throw InputError("checker rejected H at " + v.failed_condition);
    U = *v.U0;
    E = meet_equivalence(alg, U);
  }

  std::vector<int> W = complement_of(U, alg.size);
  SimplestRep sr = simplest_representation(alg, E, W, VerifyMode::automatic);

  StabilizerWitness out;
  out.rep = std::move(sr.rep);
  out.classes = sr.classes;
  out.w_set = W;

  int h_class = E.class_of[H[0]];
  std::vector<int> h_members;
  for (int x = 0; x < alg.size; ++x)
    if (E.class_of[x] == h_class) h_members.push_back(x);
  std::vector<int> sortedH = H;
  std::sort(sortedH.begin(), sortedH.end());
  if (h_members != sortedH)
    throw IntegrityError("H is not a single equivalence class");
  out.point = sr.class_point[h_class];
  if (out.point < 0) throw IntegrityError("H landed in the discarded class");

  if (representation_stabilizer(out.rep, out.point) != sortedH)
    throw IntegrityError("witness stabilizer does not reproduce H");
  RepReport rep_ok = verify_representation(alg, out.rep);
  if (!rep_ok.ok(mode == WitnessMode::theorem4))
    throw IntegrityError("witness representation fails verification");
  return out;
}

}  // namespace menger
