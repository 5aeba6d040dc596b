#pragma once

#include "menger/representation.hpp"

namespace menger {

struct Verdict {
  bool pass = false;
  std::string failed_condition;  // empty iff pass
  WitnessVars witness;
  std::optional<std::vector<int>> U;
  std::optional<std::vector<std::vector<int>>> stages;
  std::optional<std::vector<int>> U0;
  std::optional<int> point;
  std::vector<std::string> all_failures;  // populated in full-audit mode
};

/// Stabilizer test against an explicitly supplied domain set U.
Verdict check_theorem1(const MengerAlgebra& alg, const TransformSet& T,
                       const std::vector<int>& H, const std::vector<int>& U,
                       bool full_audit = false);

/// Stabilizer test with U manufactured as the C_H-closure of H.
Verdict check_theorem2(const MengerAlgebra& alg, const TransformSet& T,
                       const std::vector<int>& H, bool full_audit = false);

/// Stage-condition variant: the closure membership of the A_m premises is
/// decided by the unfolded condition system rather than by ch_closure.
Verdict check_theorem3(const MengerAlgebra& alg, const TransformSet& T,
                       const std::vector<int>& H, int m_max,
                       bool full_audit = false);

/// Meet-algebra stabilizer test against a supplied U.
Verdict check_theorem4(const MengerAlgebra& alg, const std::vector<int>& H,
                       const std::vector<int>& U, bool full_audit = false);

/// Meet-algebra stabilizer test; on success the chi-image of H is taken
/// as U and re-verified through the theorem-4 conditions.
Verdict check_theorem5(const MengerAlgebra& alg, const std::vector<int>& H,
                       bool full_audit = false);

/// Exhaustive search for a U accepted by check_theorem1; |G| <= 14 only.
std::optional<std::vector<int>> find_theorem1_domain(const MengerAlgebra& alg,
                                                     const TransformSet& T,
                                                     const std::vector<int>& H);

enum class WitnessMode { theorem2, theorem4 };

struct StabilizerWitness {
  Representation rep;
  int point = -1;
  EquivalenceRelation classes;
  std::vector<int> w_set;  // elements of the distinguished class
};

/// Builds the representation realizing H as a stabilizer and re-verifies
/// H = H^a_P; throws if the corresponding checker rejects H.
StabilizerWitness build_witness(const MengerAlgebra& alg,
                                const TransformSet& T,
                                const std::vector<int>& H, WitnessMode mode);

}  // namespace menger
