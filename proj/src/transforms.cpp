#include "menger/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace menger {

namespace {

struct MapHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

TransformSet tn_closure(const MengerAlgebra& alg, std::size_t cap) {
  const int g = alg.size;
  const int n = alg.arity;
  TransformSet T;
  T.size = g;

  std::unordered_set<std::vector<int>, MapHash> seen;
  std::vector<int> ident(g);
  for (int x = 0; x < g; ++x) ident[x] = x;
  T.maps.push_back(ident);
  seen.insert(ident);

  auto add = [&](std::vector<int>&& m) {
    if (!seen.insert(m).second) return;
    if (T.maps.size() >= cap)
      throw CapExceeded("transform set exceeded cap of " + std::to_string(cap));
    T.maps.push_back(std::move(m));
  };

  // The single-step rules x -> a[..x..] and x -> R_i x don't depend on the
  // transform being extended, so tabulate them once, in lexicographic
  // (a, context, i) order followed by the projections, dropping duplicate
  // tables.  Composing a deduped rule list in the same order yields the
  // same transform order as wrapping with every rule would.
  std::vector<std::vector<int>> rules;
  {
    std::unordered_set<std::vector<int>, MapHash> rule_seen;
    auto add_rule = [&](std::vector<int>&& r) {
      if (rule_seen.insert(r).second) rules.push_back(std::move(r));
    };
    for (int a = 0; a < g; ++a) {
      Tuple ctx(n - 1, 0);
      bool more = true;
      while (more) {
        for (int i = 1; i <= n; ++i) {
          std::vector<int> r(g);
          for (int x = 0; x < g; ++x) r[x] = substitute_at(alg, a, ctx, i, x);
          add_rule(std::move(r));
        }
        more = n > 1 && next_tuple(ctx, g);
      }
    }
    for (int i = 1; i <= n; ++i) {
      std::vector<int> r(g);
      for (int x = 0; x < g; ++x) r[x] = alg.pr(i, x);
      add_rule(std::move(r));
    }
  }

  std::vector<int> m(g);
  for (std::size_t head = 0; head < T.maps.size(); ++head) {
    std::vector<int> t = T.maps[head];  // copy: maps may reallocate
    for (const auto& r : rules) {
      for (int x = 0; x < g; ++x) m[x] = r[t[x]];
      add(std::vector<int>(m));
    }
  }
  return T;
}

EquivalenceRelation EquivalenceRelation::from_class_ids(
    const std::vector<int>& raw) {
  EquivalenceRelation e;
  e.size = static_cast<int>(raw.size());
  e.class_of.assign(e.size, -1);
  std::map<int, int> renum;
  for (int x = 0; x < e.size; ++x) {
    auto [it, fresh] = renum.emplace(raw[x], e.num_classes);
    if (fresh) ++e.num_classes;
    e.class_of[x] = it->second;
  }
  return e;
}

std::vector<std::vector<int>> EquivalenceRelation::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (int x = 0; x < size; ++x) out[class_of[x]].push_back(x);
  return out;
}

std::vector<int> EquivalenceRelation::representatives() const {
  std::vector<int> reps(num_classes, -1);
  for (int x = size - 1; x >= 0; --x) reps[class_of[x]] = x;
  return reps;
}

BinaryRelation EquivalenceRelation::as_relation() const {
  BinaryRelation rel(size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      rel.set(x, y, class_of[x] == class_of[y]);
  return rel;
}

bool is_normal_v_complex(const MengerAlgebra& alg, const TransformSet& T,
                         const std::vector<int>& H, WitnessVars* witness) {
  if (H.empty()) throw InputError("subset must be nonempty");
  std::vector<char> in = indicator(H, alg.size);
  for (int x : H)
    for (int y : H)
      for (std::size_t k = 0; k < T.maps.size(); ++k) {
        const auto& t = T.maps[k];
        if (in[t[x]] && !in[t[y]]) {
          if (witness)
            *witness = {{"x", x}, {"y", y}, {"t", static_cast<int>(k)}};
          return false;
        }
      }
  return true;
}

EquivalenceRelation subset_equivalence(const MengerAlgebra& alg,
                                       const TransformSet& T,
                                       const std::vector<int>& S) {
  std::vector<char> in = indicator(S, alg.size);
  std::map<std::vector<char>, int> sig_class;
  std::vector<int> raw(alg.size);
  for (int x = 0; x < alg.size; ++x) {
    std::vector<char> sig(T.maps.size());
    for (std::size_t k = 0; k < T.maps.size(); ++k) sig[k] = in[T.maps[k][x]];
    auto [it, fresh] =
        sig_class.emplace(std::move(sig), static_cast<int>(sig_class.size()));
    raw[x] = it->second;
  }
  return EquivalenceRelation::from_class_ids(raw);
}

EquivalenceRelation intersect_equivalences(const EquivalenceRelation& e1,
                                           const EquivalenceRelation& e2) {
  if (e1.size != e2.size) throw InputError("equivalence size mismatch");
  std::vector<int> raw(e1.size);
  for (int x = 0; x < e1.size; ++x)
    raw[x] = e1.class_of[x] * e2.num_classes + e2.class_of[x];
  return EquivalenceRelation::from_class_ids(raw);
}

namespace {

struct StepTables {
  BinaryRelation le, sq;
  std::vector<char> premise;  // (a,b) with a <= b or a,b in H

  StepTables(const MengerAlgebra& alg, const std::vector<char>& inH)
      : le(zeta(alg)), sq(chi(alg)), premise(std::size_t(alg.size) * alg.size) {
    for (int a = 0; a < alg.size; ++a)
      for (int b = 0; b < alg.size; ++b)
        premise[std::size_t(a) * alg.size + b] =
            le.at(a, b) || (inH[a] && inH[b]);
  }
  bool prem(int a, int b) const { return premise[std::size_t(a) * le.size + b]; }
};

std::vector<int> ch_step_impl(const MengerAlgebra& alg, const TransformSet& T,
                              const StepTables& tab,
                              const std::vector<char>& inX) {
  std::vector<char> out(alg.size, 0);
  for (int a = 0; a < alg.size; ++a) {
    if (!inX[a]) continue;
    for (int b = 0; b < alg.size; ++b) {
      if (!tab.prem(a, b)) continue;
      for (const auto& t : T.maps) {
        if (!inX[t[b]]) continue;
        int ta = t[a];
        for (int c = 0; c < alg.size; ++c)
          if (tab.sq.at(ta, c)) out[c] = 1;
      }
    }
  }
  std::vector<int> res;
  for (int c = 0; c < alg.size; ++c)
    if (out[c]) res.push_back(c);
  return res;
}

}  // namespace

std::vector<int> ch_step(const MengerAlgebra& alg, const TransformSet& T,
                         const std::vector<int>& H, const std::vector<int>& X) {
  if (H.empty() || X.empty()) throw InputError("H and X must be nonempty");
  StepTables tab(alg, indicator(H, alg.size));
  return ch_step_impl(alg, T, tab, indicator(X, alg.size));
}

ChClosure ch_closure(const MengerAlgebra& alg, const TransformSet& T,
                     const std::vector<int>& H, const std::vector<int>& X) {
  if (H.empty() || X.empty()) throw InputError("H and X must be nonempty");
  StepTables tab(alg, indicator(H, alg.size));
  ChClosure out;
  std::vector<int> cur = X;
  std::sort(cur.begin(), cur.end());
  out.stages.push_back(cur);
  while (true) {
    std::vector<int> next = ch_step_impl(alg, T, tab, indicator(cur, alg.size));
    if (next == cur) break;
    out.stages.push_back(next);
    cur = std::move(next);
  }
  out.closure = cur;
  return out;
}

namespace {

// Depth-first search over the condition tree: the node at depth d with
// target c needs a,b,t with the H-or-order premise and t(a) sq c; an
// internal node then needs satisfiable subtrees for targets a and t(b),
// a depth-m node needs a in X and t(b) in X instead.
bool stage_sat(const MengerAlgebra& alg, const TransformSet& T,
               const StepTables& tab, const std::vector<char>& inX, int m,
               int depth, int target) {
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b) {
      if (!tab.prem(a, b)) continue;
      for (const auto& t : T.maps) {
        if (!tab.sq.at(t[a], target)) continue;
        if (depth == m) {
          if (inX[a] && inX[t[b]]) return true;
        } else {
          if (stage_sat(alg, T, tab, inX, m, depth + 1, a) &&
              stage_sat(alg, T, tab, inX, m, depth + 1, t[b]))
            return true;
        }
      }
    }
  return false;
}

}  // namespace

bool stage_condition(const MengerAlgebra& alg, const TransformSet& T,
                     const std::vector<int>& H, const std::vector<int>& X,
                     int m, int g, int m_guard) {
  if (m < 1) throw InputError("stage index must be >= 1");
  if (m > m_guard)
    throw CapExceeded("stage index " + std::to_string(m) +
                      " exceeds guard " + std::to_string(m_guard));
  if (H.empty() || X.empty()) throw InputError("H and X must be nonempty");
  if (g < 0 || g >= alg.size) throw InputError("element out of range");
  StepTables tab(alg, indicator(H, alg.size));
  return stage_sat(alg, T, tab, indicator(X, alg.size), m, 1, g);
}

EquivalenceRelation meet_equivalence(const MengerAlgebra& alg,
                                     const std::vector<int>& U) {
  if (!alg.meet) throw InputError("algebra has no meet table");
  std::vector<char> inU = indicator(U, alg.size);
  const int g = alg.size;
  BinaryRelation rel(g);
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y)
      rel.set(x, y, inU[alg.meet_of(x, y)] || (!inU[x] && !inU[y]));

  for (int x = 0; x < g; ++x)
    if (!rel.at(x, x))
      throw IntegrityError("relation not reflexive at " + std::to_string(x));
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y)
      if (rel.at(x, y) != rel.at(y, x))
        throw IntegrityError("relation not symmetric at (" +
                             std::to_string(x) + "," + std::to_string(y) + ")");
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) {
      if (!rel.at(x, y)) continue;
      for (int z = 0; z < g; ++z)
        if (rel.at(y, z) && !rel.at(x, z))
          throw IntegrityError("relation not transitive on (" +
                               std::to_string(x) + "," + std::to_string(y) +
                               "," + std::to_string(z) + ")");
    }

  std::vector<int> raw(g, -1);
  for (int x = 0; x < g; ++x) {
    if (raw[x] >= 0) continue;
    raw[x] = x;
    for (int y = x + 1; y < g; ++y)
      if (rel.at(x, y)) raw[y] = x;
  }
  return EquivalenceRelation::from_class_ids(raw);
}

}  // namespace menger
