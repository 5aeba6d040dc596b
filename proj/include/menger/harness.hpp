#pragma once

#include "menger/stabilizers.hpp"

namespace menger {

enum class GenMode { exhaustive, random_mode };

struct GenParams {
  int carrier_size = 2;
  int arity = 1;
  int max_generators = 2;
  bool with_meet = false;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::exhaustive;
  std::size_t instance_cap = 100000;
  std::size_t closure_cap = 20000;
};

/// All closed systems generated by subsets of at most max_generators
/// partial functions, deduplicated by closure equality. Deterministic.
std::vector<FunctionSystem> enumerate_systems(const GenParams& params);

/// Seeded reproducible system: max_generators random partial functions,
/// closed. Closure-cap hits are resampled; the count lands in *resamples.
FunctionSystem random_system(const GenParams& params, int* resamples = nullptr);

struct CounterexampleBundle {
  FunctionSystem system;  // minimized generating set, re-closed
  std::vector<int> H;     // offending subset (element indices), may be empty
  std::string what;
};

struct CrosscheckReport {
  bool ok = true;
  std::vector<std::string> issues;
  std::vector<CounterexampleBundle> bundles;
  int subsets_checked = 0;
  int passing_theorem2 = 0;
  int passing_theorem5 = 0;
};

/// End-to-end audit of one closed system: axioms, necessity at every
/// point, sufficiency round-trips over all subsets (|G| <= 12), and the
/// relation/order laws.
CrosscheckReport crosscheck_instance(const FunctionSystem& sys);

}  // namespace menger
