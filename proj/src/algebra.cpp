#include "menger/algebra.hpp"

#include <algorithm>
#include <set>

namespace menger {

int MengerAlgebra::apply(int x, std::span<const int> ys) const {
  std::size_t idx = static_cast<std::size_t>(x);
  for (int y : ys) idx = idx * size + y;
  return op[idx];
}

int MengerAlgebra::pr(int i, int x) const {
  if (i < 1 || i > arity) throw InputError("projection index out of range");
  return proj[i - 1][x];
}

int MengerAlgebra::meet_of(int x, int y) const {
  if (!meet) throw InputError("algebra has no meet table");
  return (*meet)[std::size_t(x) * size + y];
}

int MengerAlgebra::apply_diag(int x, int y) const {
  std::vector<int> ys(arity, y);
  return apply(x, ys);
}

int MengerAlgebra::apply_rdiag(int x, int y) const {
  std::vector<int> ys(arity);
  for (int i = 1; i <= arity; ++i) ys[i - 1] = pr(i, y);
  return apply(x, ys);
}

void MengerAlgebra::validate() const {
  if (size < 1) throw InputError("algebra size must be >= 1");
  if (arity < 1) throw InputError("arity must be >= 1");
  std::uint64_t want = pow_sat(size, static_cast<std::uint64_t>(arity) + 1);
  if (op.size() != want) throw InputError("op table has wrong cardinality");
  for (int v : op)
    if (v < 0 || v >= size) throw InputError("op table entry out of range");
  if (static_cast<int>(proj.size()) != arity)
    throw InputError("need one projection table per coordinate");
  for (const auto& table : proj) {
    if (static_cast<int>(table.size()) != size)
      throw InputError("projection table has wrong length");
    for (int v : table)
      if (v < 0 || v >= size) throw InputError("projection entry out of range");
  }
  if (meet) {
    if (meet->size() != std::size_t(size) * size)
      throw InputError("meet table has wrong cardinality");
    for (int v : *meet)
      if (v < 0 || v >= size) throw InputError("meet entry out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    throw InputError("label count does not match size");
}

std::string MengerAlgebra::label(int x) const {
  if (!labels.empty()) return labels[x];
  return "g" + std::to_string(x);
}

int MengerAlgebra::label_index(const std::string& name) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == name) return static_cast<int>(k);
  return -1;
}

bool AxiomReport::all_pass() const {
  for (const auto& a : axioms)
    if (a.status == CheckStatus::fail) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

namespace {

WitnessVars tuple_witness(const std::string& stem, const Tuple& t) {
  WitnessVars w;
  for (std::size_t k = 0; k < t.size(); ++k)
    w.emplace_back(stem + std::to_string(k + 1), t[k]);
  return w;
}

// A1: x[y-bar][z-bar] = x[y1[z-bar] ... yn[z-bar]].
// Fast scan first (grouped by z-bar); on failure rescan in plain
// lexicographic (x, y-bar, z-bar) order for the least witness.
AxiomResult check_a1(const MengerAlgebra& alg) {
  AxiomResult res{"A1", CheckStatus::pass, {}};
  const int g = alg.size;
  const int n = alg.arity;
  bool bad = false;
  const int gn = static_cast<int>(pow_sat(g, n));

  // Dedupe the right-translation maps rho_Y: x -> x[y-bar]. A1 says
  // rho_Z after rho_Y equals rho_W with w_k = rho_Z(y_k), so the sweep
  // over (z-bar, y-bar) reduces to id comparisons between O(D^2)
  // composites of the D distinct maps.
  std::vector<int> row_id(gn);
  std::vector<std::vector<int>> rows;
  std::map<std::vector<int>, int> index;
  {
    std::vector<int> row(g);
    for (int Y = 0; Y < gn; ++Y) {
      for (int x = 0; x < g; ++x) row[x] = alg.op[std::size_t(x) * gn + Y];
      auto [it, fresh] = index.try_emplace(row, int(rows.size()));
      if (fresh) rows.push_back(row);
      row_id[Y] = it->second;
    }
  }
  const int D = static_cast<int>(rows.size());
  std::vector<int> digits(std::size_t(gn) * n);
  std::vector<int> pw(n);
  pw[n - 1] = 1;
  for (int k = n - 2; k >= 0; --k) pw[k] = pw[k + 1] * g;
  {
    Tuple ys(n, 0);
    for (int Y = 0; Y < gn; ++Y) {
      for (int k = 0; k < n; ++k) digits[std::size_t(Y) * n + k] = ys[k];
      next_tuple(ys, g);
    }
  }
  const bool dense = std::uint64_t(D) * D <= (std::uint64_t(1) << 24);
  std::vector<int> comp;
  if (dense) comp.assign(std::size_t(D) * D, -2);
  std::map<std::pair<int, int>, int> comp_sparse;
  std::vector<int> scratch(g);
  auto compose_id = [&](int rz, int ry) {
    if (dense) {
      int& slot = comp[std::size_t(rz) * D + ry];
      if (slot != -2) return slot;
      for (int x = 0; x < g; ++x) scratch[x] = rows[rz][rows[ry][x]];
      auto it = index.find(scratch);
      return slot = (it == index.end() ? -1 : it->second);
    }
    auto [it, fresh] = comp_sparse.try_emplace({rz, ry}, -2);
    if (!fresh) return it->second;
    for (int x = 0; x < g; ++x) scratch[x] = rows[rz][rows[ry][x]];
    auto found = index.find(scratch);
    return it->second = (found == index.end() ? -1 : found->second);
  };
  for (int Z = 0; Z < gn && !bad; ++Z) {
    const int rz = row_id[Z];
    const std::vector<int>& colz = rows[rz];
    for (int Y = 0; Y < gn; ++Y) {
      int W = 0;
      const int* dy = &digits[std::size_t(Y) * n];
      for (int k = 0; k < n; ++k) W += colz[dy[k]] * pw[k];
      if (compose_id(rz, row_id[Y]) != row_id[W]) {
        bad = true;
        break;
      }
    }
  }
  if (!bad) return res;

  for (int x = 0; x < g; ++x) {
    Tuple ys(n, 0);
    do {
      Tuple zs2(n, 0);
      do {
        std::vector<int> inner(n);
        for (int k = 0; k < n; ++k) inner[k] = alg.apply(ys[k], zs2);
        if (alg.apply(alg.apply(x, ys), zs2) != alg.apply(x, inner)) {
          res.status = CheckStatus::fail;
          res.witness.emplace_back("x", x);
          auto wy = tuple_witness("y", ys);
          auto wz = tuple_witness("z", zs2);
          res.witness.insert(res.witness.end(), wy.begin(), wy.end());
          res.witness.insert(res.witness.end(), wz.begin(), wz.end());
          return res;
        }
      } while (next_tuple(zs2, g));
    } while (next_tuple(ys, g));
  }
  return res;  // unreachable
}

}  // namespace

AxiomReport check_axioms(const MengerAlgebra& alg) {
  alg.validate();
  const int g = alg.size;
  const int n = alg.arity;
  const int gn = static_cast<int>(pow_sat(g, n));
  AxiomReport report;

  // shared lookup tables for the quantifier sweeps
  std::vector<int> rd(std::size_t(g) * g);  // rd[x][y] = x[R_1 y ... R_n y]
  {
    Tuple ys(n, 0);
    for (int x = 0; x < g; ++x)
      for (int y = 0; y < g; ++y) {
        for (int i = 1; i <= n; ++i) ys[i - 1] = alg.proj[i - 1][y];
        rd[std::size_t(x) * g + y] = alg.apply(x, ys);
      }
  }
  std::vector<int> pw(n);
  pw[n - 1] = 1;
  for (int k = n - 2; k >= 0; --k) pw[k] = pw[k + 1] * g;

  report.axioms.push_back(check_a1(alg));

  {  // A2: x[R_1 x ... R_n x] = x
    AxiomResult res{"A2", CheckStatus::pass, {}};
    for (int x = 0; x < g; ++x) {
      if (alg.apply_rdiag(x, x) != x) {
        res.status = CheckStatus::fail;
        res.witness = {{"x", x}};
        break;
      }
    }
    report.axioms.push_back(res);
  }

  {  // A3: x[u-bar|_i z][R-bar y] = x[u-bar|_i z[R-bar y]]
    AxiomResult res{"A3", CheckStatus::pass, {}};
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const int pwi = pw[i - 1];
      for (int x = 0; x < g && ok; ++x) {
        const std::size_t base = std::size_t(x) * gn;
        for (int F = 0; F < gn && ok; ++F) {
          const int z = (F / pwi) % g;
          const int s1 = alg.op[base + F];
          for (int y = 0; y < g; ++y) {
            if (rd[std::size_t(s1) * g + y] !=
                alg.op[base + F + (rd[std::size_t(z) * g + y] - z) * pwi]) {
              ok = false;
              break;
            }
          }
        }
      }
    }
    if (!ok)
    for (int i = 1; i <= n && res.status == CheckStatus::pass; ++i) {
      for (int x = 0; x < g && res.status == CheckStatus::pass; ++x) {
        Tuple ctx(n - 1, 0);
        bool more = true;
        while (more && res.status == CheckStatus::pass) {
          for (int z = 0; z < g && res.status == CheckStatus::pass; ++z) {
            for (int y = 0; y < g; ++y) {
              int lhs = alg.apply_rdiag(substitute_at(alg, x, ctx, i, z), y);
              int rhs = substitute_at(alg, x, ctx, i, alg.apply_rdiag(z, y));
              if (lhs != rhs) {
                res.status = CheckStatus::fail;
                res.witness = {{"i", i}, {"x", x}};
                auto wc = tuple_witness("u", ctx);
                res.witness.insert(res.witness.end(), wc.begin(), wc.end());
                res.witness.emplace_back("z", z);
                res.witness.emplace_back("y", y);
                break;
              }
            }
          }
          more = n > 1 && next_tuple(ctx, g);
        }
      }
    }
    report.axioms.push_back(res);
  }

  {  // A4: R_i(x[R-bar y]) = (R_i x)[R-bar y]
    AxiomResult res{"A4", CheckStatus::pass, {}};
    for (int i = 1; i <= n && res.status == CheckStatus::pass; ++i)
      for (int x = 0; x < g && res.status == CheckStatus::pass; ++x)
        for (int y = 0; y < g; ++y) {
          if (alg.pr(i, alg.apply_rdiag(x, y)) !=
              alg.apply_rdiag(alg.pr(i, x), y)) {
            res.status = CheckStatus::fail;
            res.witness = {{"i", i}, {"x", x}, {"y", y}};
            break;
          }
        }
    report.axioms.push_back(res);
  }

  {  // A5: x[R-bar y][R-bar z] = x[R-bar z][R-bar y]
    AxiomResult res{"A5", CheckStatus::pass, {}};
    for (int x = 0; x < g && res.status == CheckStatus::pass; ++x)
      for (int y = 0; y < g && res.status == CheckStatus::pass; ++y)
        for (int z = 0; z < g; ++z) {
          if (alg.apply_rdiag(alg.apply_rdiag(x, y), z) !=
              alg.apply_rdiag(alg.apply_rdiag(x, z), y)) {
            res.status = CheckStatus::fail;
            res.witness = {{"x", x}, {"y", y}, {"z", z}};
            break;
          }
        }
    report.axioms.push_back(res);
  }

  {  // A6: R_i(x[y-bar]) = R_i((R_k x)[y-bar])
    AxiomResult res{"A6", CheckStatus::pass, {}};
    for (int i = 1; i <= n && res.status == CheckStatus::pass; ++i)
      for (int k = 1; k <= n && res.status == CheckStatus::pass; ++k)
        for (int x = 0; x < g && res.status == CheckStatus::pass; ++x) {
          Tuple ys(n, 0);
          do {
            if (alg.pr(i, alg.apply(x, ys)) !=
                alg.pr(i, alg.apply(alg.pr(k, x), ys))) {
              res.status = CheckStatus::fail;
              res.witness = {{"i", i}, {"k", k}, {"x", x}};
              auto wy = tuple_witness("y", ys);
              res.witness.insert(res.witness.end(), wy.begin(), wy.end());
              break;
            }
          } while (next_tuple(ys, g));
        }
    report.axioms.push_back(res);
  }

  {  // A7: (R_i x)[y-bar] = y_i[R-bar (x[y-bar])]
    AxiomResult res{"A7", CheckStatus::pass, {}};
    for (int i = 1; i <= n && res.status == CheckStatus::pass; ++i)
      for (int x = 0; x < g && res.status == CheckStatus::pass; ++x) {
        Tuple ys(n, 0);
        do {
          int lhs = alg.apply(alg.pr(i, x), ys);
          int rhs = alg.apply_rdiag(ys[i - 1], alg.apply(x, ys));
          if (lhs != rhs) {
            res.status = CheckStatus::fail;
            res.witness = {{"i", i}, {"x", x}};
            auto wy = tuple_witness("y", ys);
            res.witness.insert(res.witness.end(), wy.begin(), wy.end());
            break;
          }
        } while (next_tuple(ys, g));
      }
    report.axioms.push_back(res);
  }

  if (!alg.meet) {
    for (const char* name : {"A8", "A9", "A10", "semilattice"})
      report.axioms.push_back({name, CheckStatus::not_applicable, {}});
    return report;
  }

  {  // A8: x meet (y[R-bar z]) = (x meet y)[R-bar z]
    AxiomResult res{"A8", CheckStatus::pass, {}};
    for (int x = 0; x < g && res.status == CheckStatus::pass; ++x)
      for (int y = 0; y < g && res.status == CheckStatus::pass; ++y)
        for (int z = 0; z < g; ++z) {
          if (alg.meet_of(x, alg.apply_rdiag(y, z)) !=
              alg.apply_rdiag(alg.meet_of(x, y), z)) {
            res.status = CheckStatus::fail;
            res.witness = {{"x", x}, {"y", y}, {"z", z}};
            break;
          }
        }
    report.axioms.push_back(res);
  }

  {  // A9: x meet y = x[R-bar (x meet y)]
    AxiomResult res{"A9", CheckStatus::pass, {}};
    for (int x = 0; x < g && res.status == CheckStatus::pass; ++x)
      for (int y = 0; y < g; ++y) {
        int m = alg.meet_of(x, y);
        if (m != alg.apply_rdiag(x, m)) {
          res.status = CheckStatus::fail;
          res.witness = {{"x", x}, {"y", y}};
          break;
        }
      }
    report.axioms.push_back(res);
  }

  {  // A10: (x meet y)[z-bar] = x[z-bar] meet y[z-bar]
    AxiomResult res{"A10", CheckStatus::pass, {}};
    bool ok = true;
    const std::vector<int>& mt = *alg.meet;
    for (int x = 0; x < g && ok; ++x)
      for (int y = 0; y < g && ok; ++y) {
        const std::size_t mrow = std::size_t(mt[std::size_t(x) * g + y]) * gn;
        const std::size_t xrow = std::size_t(x) * gn;
        const std::size_t yrow = std::size_t(y) * gn;
        for (int Z = 0; Z < gn; ++Z) {
          if (alg.op[mrow + Z] !=
              mt[std::size_t(alg.op[xrow + Z]) * g + alg.op[yrow + Z]]) {
            ok = false;
            break;
          }
        }
      }
    if (!ok)
    for (int x = 0; x < g && res.status == CheckStatus::pass; ++x)
      for (int y = 0; y < g && res.status == CheckStatus::pass; ++y) {
        Tuple zs(n, 0);
        do {
          if (alg.apply(alg.meet_of(x, y), zs) !=
              alg.meet_of(alg.apply(x, zs), alg.apply(y, zs))) {
            res.status = CheckStatus::fail;
            res.witness = {{"x", x}, {"y", y}};
            auto wz = tuple_witness("z", zs);
            res.witness.insert(res.witness.end(), wz.begin(), wz.end());
            break;
          }
        } while (next_tuple(zs, g));
      }
    report.axioms.push_back(res);
  }

  {  // (G, meet) must be a semilattice.
    AxiomResult res{"semilattice", CheckStatus::pass, {}};
    for (int x = 0; x < g && res.status == CheckStatus::pass; ++x) {
      if (alg.meet_of(x, x) != x) {
        res.status = CheckStatus::fail;
        res.witness = {{"x", x}};
        break;
      }
      for (int y = 0; y < g && res.status == CheckStatus::pass; ++y) {
        if (alg.meet_of(x, y) != alg.meet_of(y, x)) {
          res.status = CheckStatus::fail;
          res.witness = {{"x", x}, {"y", y}};
          break;
        }
        for (int z = 0; z < g; ++z) {
          if (alg.meet_of(alg.meet_of(x, y), z) !=
              alg.meet_of(x, alg.meet_of(y, z))) {
            res.status = CheckStatus::fail;
            res.witness = {{"x", x}, {"y", y}, {"z", z}};
            break;
          }
        }
      }
    }
    report.axioms.push_back(res);
  }

  return report;
}

MengerAlgebra abstractify(const FunctionSystem& sys) {
  std::string missing;
  const int g = static_cast<int>(sys.functions.size());
  const int n = sys.arity;

  MengerAlgebra alg;
  alg.size = g;
  alg.arity = n;
  alg.labels = sys.names;
  alg.op.assign(static_cast<std::size_t>(pow_sat(g, n + 1)), 0);
  alg.proj.assign(n, std::vector<int>(g, 0));

  for (int x = 0; x < g; ++x) {
    for (int i = 1; i <= n; ++i) {
      int idx = sys.index_of(project(sys.functions[x], i));
      if (idx < 0)
        throw InputError("system not closed: missing R_" + std::to_string(i) +
                         "(" + sys.names[x] + ")");
      alg.proj[i - 1][x] = idx;
    }
    Tuple ys(n, 0);
    std::size_t row = static_cast<std::size_t>(x) * pow_sat(g, n);
    do {
      std::vector<NPlaceFunction> gs;
      gs.reserve(n);
      for (int j : ys) gs.push_back(sys.functions[j]);
      int idx = sys.index_of(compose_menger(sys.functions[x], gs));
      if (idx < 0)
        throw InputError("system not closed: missing composite " +
                         sys.names[x] + format_set(ys));
      alg.op[row++] = idx;
    } while (next_tuple(ys, g));
  }

  if (sys.with_meet) {
    std::vector<int> table(static_cast<std::size_t>(g) * g, 0);
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b) {
        int idx = sys.index_of(meet(sys.functions[a], sys.functions[b]));
        if (idx < 0)
          throw InputError("system not closed: missing meet of " +
                           sys.names[a] + " and " + sys.names[b]);
        table[std::size_t(a) * g + b] = idx;
      }
    alg.meet = std::move(table);
  }
  return alg;
}

int substitute_at(const MengerAlgebra& alg, std::optional<int> u,
                  std::span<const int> context, int i, int z) {
  if (!u) return z;  // empty symbol
  if (i < 1 || i > alg.arity) throw InputError("substitution slot out of range");
  if (static_cast<int>(context.size()) != alg.arity - 1)
    throw InputError("context must have n-1 entries");
  std::vector<int> args(alg.arity);
  for (int k = 0, c = 0; k < alg.arity; ++k)
    args[k] = (k == i - 1) ? z : context[c++];
  return alg.apply(*u, args);
}

bool BinaryRelation::contains(const BinaryRelation& other) const {
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (other.bits[k] && !bits[k]) return false;
  return true;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (at(x, y)) out.emplace_back(x, y);
  return out;
}

BinaryRelation zeta(const MengerAlgebra& alg) {
  BinaryRelation rel(alg.size);
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      rel.set(x, y, alg.apply_rdiag(y, x) == x);
  return rel;
}

BinaryRelation chi(const MengerAlgebra& alg) {
  BinaryRelation z = zeta(alg);
  BinaryRelation rel(alg.size);
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      rel.set(x, y, z.at(alg.pr(1, x), alg.pr(1, y)));
  return rel;
}

namespace {

// Deduped tables of the unary maps x -> x[z-bar].  The regularity
// conditions quantify over all inner tuples, but only the distinct
// translation tables matter, and there are usually far fewer of them
// than tuples.
std::vector<std::vector<int>> right_translation_tables(
    const MengerAlgebra& alg) {
  const int g = alg.size;
  std::size_t gn = 1;
  for (int k = 0; k < alg.arity; ++k) gn *= g;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::vector<int> m(g);
  for (std::size_t F = 0; F < gn; ++F) {
    for (int x = 0; x < g; ++x) m[x] = alg.op[x * gn + F];
    if (seen.insert(m).second) out.push_back(m);
  }
  return out;
}

// Deduped tables of x -> u[.. x ..] with x in slot i.
std::vector<std::vector<int>> substitution_tables(const MengerAlgebra& alg,
                                                  int i) {
  const int g = alg.size;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::vector<int> m(g);
  for (int u = 0; u < g; ++u) {
    Tuple ctx(alg.arity - 1, 0);
    bool more = true;
    while (more) {
      for (int x = 0; x < g; ++x) m[x] = substitute_at(alg, u, ctx, i, x);
      if (seen.insert(m).second) out.push_back(m);
      more = alg.arity > 1 && next_tuple(ctx, g);
    }
  }
  return out;
}

bool preserved_by(const std::vector<std::vector<int>>& tables,
                  const BinaryRelation& rel,
                  const std::vector<std::pair<int, int>>& ps) {
  for (const auto& t : tables)
    for (const auto& [x, y] : ps)
      if (!rel.at(t[x], t[y])) return false;
  return true;
}

}  // namespace

bool rel_stable(const MengerAlgebra& alg, const BinaryRelation& rel) {
  // For a quasi-order the defining implication factors through the
  // one-place regularities: chain x[x-bar] <= y[x-bar] <= ... <= y[y-bar],
  // replacing the head and then one inner argument at a time.
  if (rel_reflexive(rel) && rel_transitive(rel)) {
    if (!rel_l_regular(alg, rel)) return false;
    for (int i = 1; i <= alg.arity; ++i)
      if (!rel_i_regular(alg, rel, i)) return false;
    return true;
  }
  auto ps = rel.pairs();
  const int n = alg.arity;
  std::vector<std::size_t> pick(n, 0);
  for (const auto& [x, y] : ps) {
    std::fill(pick.begin(), pick.end(), 0);
    bool more = !ps.empty();
    while (more) {
      std::vector<int> xs(n), ys(n);
      for (int k = 0; k < n; ++k) {
        xs[k] = ps[pick[k]].first;
        ys[k] = ps[pick[k]].second;
      }
      if (!rel.at(alg.apply(x, xs), alg.apply(y, ys))) return false;
      // advance pick
      int k = n - 1;
      for (; k >= 0; --k) {
        if (++pick[k] < ps.size()) break;
        pick[k] = 0;
      }
      more = k >= 0;
    }
  }
  return true;
}

bool rel_l_regular(const MengerAlgebra& alg, const BinaryRelation& rel) {
  return preserved_by(right_translation_tables(alg), rel, rel.pairs());
}

bool rel_v_regular(const MengerAlgebra& alg, const BinaryRelation& rel) {
  // Same factoring as in rel_stable, one inner slot at a time.
  if (rel_reflexive(rel) && rel_transitive(rel)) {
    for (int i = 1; i <= alg.arity; ++i)
      if (!rel_i_regular(alg, rel, i)) return false;
    return true;
  }
  auto ps = rel.pairs();
  const int n = alg.arity;
  std::vector<std::size_t> pick(n, 0);
  bool more = !ps.empty();
  while (more) {
    std::vector<int> xs(n), ys(n);
    for (int k = 0; k < n; ++k) {
      xs[k] = ps[pick[k]].first;
      ys[k] = ps[pick[k]].second;
    }
    for (int z = 0; z < alg.size; ++z)
      if (!rel.at(alg.apply(z, xs), alg.apply(z, ys))) return false;
    int k = n - 1;
    for (; k >= 0; --k) {
      if (++pick[k] < ps.size()) break;
      pick[k] = 0;
    }
    more = k >= 0;
  }
  return true;
}

bool rel_i_regular(const MengerAlgebra& alg, const BinaryRelation& rel, int i) {
  return preserved_by(substitution_tables(alg, i), rel, rel.pairs());
}

bool rel_v_negative(const MengerAlgebra& alg, const BinaryRelation& rel) {
  for (int x = 0; x < alg.size; ++x) {
    Tuple ys(alg.arity, 0);
    do {
      int c = alg.apply(x, ys);
      for (int i = 0; i < alg.arity; ++i)
        if (!rel.at(c, ys[i])) return false;
    } while (next_tuple(ys, alg.size));
  }
  return true;
}

bool rel_reflexive(const BinaryRelation& rel) {
  for (int x = 0; x < rel.size; ++x)
    if (!rel.at(x, x)) return false;
  return true;
}

bool rel_antisymmetric(const BinaryRelation& rel) {
  for (int x = 0; x < rel.size; ++x)
    for (int y = x + 1; y < rel.size; ++y)
      if (rel.at(x, y) && rel.at(y, x)) return false;
  return true;
}

bool rel_transitive(const BinaryRelation& rel) {
  for (int x = 0; x < rel.size; ++x)
    for (int y = 0; y < rel.size; ++y) {
      if (!rel.at(x, y)) continue;
      for (int z = 0; z < rel.size; ++z)
        if (rel.at(y, z) && !rel.at(x, z)) return false;
    }
  return true;
}

RelationProps relation_props(const MengerAlgebra& alg,
                             const BinaryRelation& rel) {
  if (rel.size != alg.size) throw InputError("relation size mismatch");
  RelationProps p;
  p.stable = rel_stable(alg, rel);
  p.l_regular = rel_l_regular(alg, rel);
  p.v_regular = rel_v_regular(alg, rel);
  p.v_negative = rel_v_negative(alg, rel);
  p.reflexive = rel_reflexive(rel);
  p.antisymmetric = rel_antisymmetric(rel);
  p.transitive = rel_transitive(rel);
  p.i_regular.resize(alg.arity);
  for (int i = 1; i <= alg.arity; ++i)
    p.i_regular[i - 1] = rel_i_regular(alg, rel, i);
  return p;
}

PropResult subset_quasi_stable(const MengerAlgebra& alg,
                               const std::vector<char>& H) {
  for (int x = 0; x < alg.size; ++x)
    if (H[x] && !H[alg.apply_diag(x, x)]) return {false, {{"x", x}}};
  return {};
}

PropResult subset_meet_quasi_stable(const MengerAlgebra& alg,
                                    const std::vector<char>& H) {
  for (int x = 0; x < alg.size; ++x)
    if (H[x] && !H[alg.meet_of(alg.apply_diag(x, x), x)])
      return {false, {{"x", x}}};
  return {};
}

PropResult subset_stable(const MengerAlgebra& alg, const std::vector<char>& H) {
  for (int x = 0; x < alg.size; ++x) {
    if (!H[x]) continue;
    Tuple ys(alg.arity, 0);
    do {
      bool all = true;
      for (int y : ys) all = all && H[y];
      if (all && !H[alg.apply(x, ys)]) {
        auto w = tuple_witness("y", ys);
        w.insert(w.begin(), {"x", x});
        return {false, w};
      }
    } while (next_tuple(ys, alg.size));
  }
  return {};
}

PropResult subset_meet_stable(const MengerAlgebra& alg,
                              const std::vector<char>& H) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      if (H[x] && H[y] && !H[alg.meet_of(x, y)])
        return {false, {{"x", x}, {"y", y}}};
  return {};
}

PropResult subset_l_unitary(const MengerAlgebra& alg,
                            const std::vector<char>& H) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      if (H[alg.apply_diag(x, y)] && H[y] && !H[x])
        return {false, {{"x", x}, {"y", y}}};
  return {};
}

PropResult subset_v_unitary(const MengerAlgebra& alg,
                            const std::vector<char>& H) {
  for (int x = 0; x < alg.size; ++x) {
    Tuple ys(alg.arity, 0);
    do {
      bool all = true;
      for (int y : ys) all = all && H[y];
      if (all && H[alg.apply(x, ys)] && !H[x]) {
        auto w = tuple_witness("y", ys);
        w.insert(w.begin(), {"x", x});
        return {false, w};
      }
    } while (next_tuple(ys, alg.size));
  }
  return {};
}

PropResult subset_l_ideal(const MengerAlgebra& alg,
                          const std::vector<char>& H) {
  for (int x = 0; x < alg.size; ++x) {
    Tuple ys(alg.arity, 0);
    do {
      bool any = false;
      for (int y : ys) any = any || H[y];
      if (any && !H[alg.apply(x, ys)]) {
        auto w = tuple_witness("y", ys);
        w.insert(w.begin(), {"x", x});
        return {false, w};
      }
    } while (next_tuple(ys, alg.size));
  }
  return {};
}

SubsetReport subset_props(const MengerAlgebra& alg, const std::vector<int>& H) {
  if (H.empty()) throw InputError("subset must be nonempty");
  std::vector<char> in = indicator(H, alg.size);
  SubsetReport rep;
  rep.quasi_stable = subset_quasi_stable(alg, in);
  rep.stable = subset_stable(alg, in);
  rep.l_unitary = subset_l_unitary(alg, in);
  rep.v_unitary = subset_v_unitary(alg, in);
  rep.l_ideal = subset_l_ideal(alg, in);
  if (alg.meet) {
    rep.meet_checked = true;
    rep.meet_quasi_stable = subset_meet_quasi_stable(alg, in);
    rep.meet_stable = subset_meet_stable(alg, in);
  }
  return rep;
}

PropResult check_order_laws(const MengerAlgebra& alg) {
  BinaryRelation le = zeta(alg);
  BinaryRelation sq = chi(alg);
  const int g = alg.size;
  const int n = alg.arity;

  // x <= y implies R_i x <= R_i y
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) {
      if (!le.at(x, y)) continue;
      for (int i = 1; i <= n; ++i)
        if (!le.at(alg.pr(i, x), alg.pr(i, y)))
          return {false, {{"law", 1}, {"x", x}, {"y", y}, {"i", i}}};
    }
  // x sq y iff R_i x <= R_i y for all i
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) {
      bool all = true;
      for (int i = 1; i <= n; ++i) all = all && le.at(alg.pr(i, x), alg.pr(i, y));
      if (all != sq.at(x, y)) return {false, {{"law", 2}, {"x", x}, {"y", y}}};
    }
  // x sq y iff x[R-bar y] = x
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y)
      if ((alg.apply_rdiag(x, y) == x) != sq.at(x, y))
        return {false, {{"law", 3}, {"x", x}, {"y", y}}};
  // (R_i x)[y-bar] <= y_i
  for (int i = 1; i <= n; ++i)
    for (int x = 0; x < g; ++x) {
      Tuple ys(n, 0);
      do {
        if (!le.at(alg.apply(alg.pr(i, x), ys), ys[i - 1]))
          return {false, {{"law", 4}, {"i", i}, {"x", x}}};
      } while (next_tuple(ys, g));
    }
  // x[R_1 y_1 ... R_n y_n] <= x
  for (int x = 0; x < g; ++x) {
    Tuple ys(n, 0);
    do {
      std::vector<int> args(n);
      for (int i = 1; i <= n; ++i) args[i - 1] = alg.pr(i, ys[i - 1]);
      if (!le.at(alg.apply(x, args), x))
        return {false, {{"law", 5}, {"x", x}}};
    } while (next_tuple(ys, g));
  }
  // R_i x = R_i R_k x
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int x = 0; x < g; ++x)
        if (alg.pr(i, x) != alg.pr(i, alg.pr(k, x)))
          return {false, {{"law", 6}, {"i", i}, {"k", k}, {"x", x}}};
  return {};
}

}  // namespace menger
