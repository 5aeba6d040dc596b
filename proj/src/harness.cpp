#include "menger/harness.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace menger {

namespace {

std::uint64_t tuple_count(const GenParams& p) {
  return pow_sat(p.carrier_size, p.arity);
}

// All partial functions over the carrier, in lexicographic graph order;
// encoded as a value in {0..carrier} per tuple, carrier = undefined.
std::vector<NPlaceFunction> all_partial_functions(const GenParams& p) {
  std::uint64_t tuples = tuple_count(p);
  std::uint64_t total = pow_sat(p.carrier_size + 1, tuples);
  if (total > 1000000)
    throw CapExceeded("partial-function space too large to enumerate");

  std::vector<Tuple> keys;
  Tuple t(p.arity, 0);
  do keys.push_back(t);
  while (next_tuple(t, p.carrier_size));

  std::vector<NPlaceFunction> out;
  std::vector<int> code(keys.size(), 0);  // 0 = undefined, v+1 = value v
  bool more = true;
  while (more) {
    NPlaceFunction f{p.carrier_size, p.arity, {}};
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (code[k] > 0) f.graph[keys[k]] = code[k] - 1;
    out.push_back(std::move(f));
    more = false;
    for (std::size_t k = code.size(); k-- > 0;) {
      if (++code[k] <= p.carrier_size) {
        more = true;
        break;
      }
      code[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NPlaceFunction> sorted_graphs(const FunctionSystem& sys) {
  std::vector<NPlaceFunction> g = sys.functions;
  std::sort(g.begin(), g.end());
  return g;
}

void check(CrosscheckReport& rep, bool ok, const FunctionSystem& sys,
           const std::vector<int>& H, const std::string& what) {
  if (ok) return;
  rep.ok = false;
  rep.issues.push_back(what);
  rep.bundles.push_back({sys, H, what});
}

}  // namespace

std::vector<FunctionSystem> enumerate_systems(const GenParams& params) {
  if (params.carrier_size < 1 || params.arity < 1 ||
      params.max_generators < 1)
    throw InputError("carrier_size, arity and max_generators must be >= 1");
  if (params.mode != GenMode::exhaustive)
    throw InputError("enumerate_systems needs exhaustive mode");

  std::vector<NPlaceFunction> pool = all_partial_functions(params);
  const std::size_t n = pool.size();
  std::uint64_t subsets = 0;
  {
    // sum of C(n, k) for k = 1..max_generators, saturating
    std::uint64_t binom = 1;
    for (int k = 1; k <= params.max_generators && k <= int(n); ++k) {
      binom = binom * (n - k + 1) / k;
      subsets += binom;
      if (subsets > params.instance_cap)
        throw CapExceeded("generator subset count exceeds instance cap");
    }
  }

  std::vector<FunctionSystem> out;
  std::set<std::vector<NPlaceFunction>> seen;
  std::vector<std::size_t> pick;
  // lexicographic subsets of sizes 1..max_generators
  auto emit = [&](const std::vector<std::size_t>& idx) {
    std::vector<NPlaceFunction> gens;
    for (std::size_t i : idx) gens.push_back(pool[i]);
    FunctionSystem sys;
    try {
      sys = close_system(params.carrier_size, params.arity, std::move(gens),
                         params.with_meet, params.closure_cap);
    } catch (const CapExceeded&) {
      return;  // skip runaway closures rather than abort the sweep
    }
    if (seen.insert(sorted_graphs(sys)).second) out.push_back(std::move(sys));
  };
  for (int k = 1; k <= params.max_generators && k <= int(n); ++k) {
    pick.assign(k, 0);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      emit(pick);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

FunctionSystem random_system(const GenParams& params, int* resamples) {
  if (params.carrier_size < 1 || params.arity < 1 ||
      params.max_generators < 1)
    throw InputError("carrier_size, arity and max_generators must be >= 1");
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<int> draw(0, params.carrier_size);

  std::vector<Tuple> keys;
  Tuple t(params.arity, 0);
  do keys.push_back(t);
  while (next_tuple(t, params.carrier_size));

  int tries = 0;
  while (true) {
    std::vector<NPlaceFunction> gens;
    for (int g = 0; g < params.max_generators; ++g) {
      NPlaceFunction f{params.carrier_size, params.arity, {}};
      for (const Tuple& key : keys) {
        int v = draw(rng);
        if (v < params.carrier_size) f.graph[key] = v;
      }
      gens.push_back(std::move(f));
    }
    try {
      FunctionSystem sys =
          close_system(params.carrier_size, params.arity, std::move(gens),
                       params.with_meet, params.closure_cap);
      if (resamples) *resamples = tries;
      return sys;
    } catch (const CapExceeded&) {
      if (++tries > 1000)
        throw CapExceeded("random_system: 1000 consecutive closure cap hits");
    }
  }
}

CrosscheckReport crosscheck_instance(const FunctionSystem& sys) {
  CrosscheckReport rep;
  std::string missing;
  if (!system_is_closed(sys, &missing))
    throw InputError("system not closed: missing " + missing);

  MengerAlgebra alg = abstractify(sys);
  AxiomReport axioms = check_axioms(alg);
  check(rep, axioms.all_pass(), sys, {}, "axiom failure");
  if (!rep.ok) return rep;  // nothing downstream is meaningful

  TransformSet T = tn_closure(alg);

  // (iv) relation and order laws
  BinaryRelation le = zeta(alg);
  BinaryRelation sq = chi(alg);
  RelationProps zp = relation_props(alg, le);
  RelationProps cp = relation_props(alg, sq);
  check(rep, zp.stable && zp.reflexive && zp.antisymmetric && zp.transitive,
        sys, {}, "zeta is not a stable order");
  check(rep,
        cp.l_regular && cp.v_negative && cp.reflexive && cp.transitive &&
            sq.contains(le),
        sys, {}, "chi is not an l-regular v-negative quasi-order above zeta");
  check(rep, check_order_laws(alg).holds, sys, {}, "order law failure");

  // (ii) necessity at every carrier point
  for (int a = 0; a < sys.carrier; ++a) {
    std::vector<int> H = semantic_stabilizer(sys, a);
    if (H.empty()) continue;
    if (!check_theorem2(alg, T, H).pass)
      check(rep, false, sys, H,
            "theorem 2 rejects the stabilizer of point " + std::to_string(a));
    if (sys.with_meet && !check_theorem5(alg, H).pass)
      check(rep, false, sys, H,
            "theorem 5 rejects the stabilizer of point " + std::to_string(a));
  }

  // (iii) sufficiency round-trips over all nonempty subsets
  if (alg.size <= 12) {
    const std::uint64_t total = std::uint64_t(1) << alg.size;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::vector<int> H;
      for (int x = 0; x < alg.size; ++x)
        if (mask & (std::uint64_t(1) << x)) H.push_back(x);
      ++rep.subsets_checked;
      if (check_theorem2(alg, T, H).pass) {
        ++rep.passing_theorem2;
        try {
          StabilizerWitness w = build_witness(alg, T, H, WitnessMode::theorem2);
          check(rep, representation_stabilizer(w.rep, w.point) == H, sys, H,
                "theorem-2 witness stabilizer mismatch");
        } catch (const std::exception& e) {
          check(rep, false, sys, H,
                std::string("theorem-2 witness failed: ") + e.what());
        }
      }
      if (sys.with_meet && check_theorem5(alg, H).pass) {
        ++rep.passing_theorem5;
        try {
          StabilizerWitness w = build_witness(alg, T, H, WitnessMode::theorem4);
          check(rep, representation_stabilizer(w.rep, w.point) == H, sys, H,
                "theorem-4 witness stabilizer mismatch");
        } catch (const std::exception& e) {
          check(rep, false, sys, H,
                std::string("theorem-4 witness failed: ") + e.what());
        }
      }
    }
  }
  return rep;
}

}  // namespace menger
