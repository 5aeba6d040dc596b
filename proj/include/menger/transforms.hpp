#pragma once

#include <vector>

#include "menger/algebra.hpp"

namespace menger {

/// The extensional polynomial transformations of G: total unary
/// self-maps reachable from the identity by wrapping with a[b-bar|_i .]
/// or R_i(.). Each map is stored as its image array.
struct TransformSet {
  int size = 0;
  std::vector<std::vector<int>> maps;  // insertion (breadth-first) order
};

TransformSet tn_closure(const MengerAlgebra& alg, std::size_t cap = 100000);

/// Partition of {0..size-1}; class ids are dense and ordered by least
/// member.
struct EquivalenceRelation {
  int size = 0;
  int num_classes = 0;
  std::vector<int> class_of;

  /// Renumbers arbitrary class ids into canonical form.
  static EquivalenceRelation from_class_ids(const std::vector<int>& raw);
  std::vector<std::vector<int>> classes() const;
  std::vector<int> representatives() const;  // least member per class
  BinaryRelation as_relation() const;
  bool operator==(const EquivalenceRelation&) const = default;
};

/// x,y in H and t(x) in H imply t(y) in H, for every t in T.
bool is_normal_v_complex(const MengerAlgebra& alg, const TransformSet& T,
                         const std::vector<int>& H,
                         WitnessVars* witness = nullptr);

/// x ~ y iff for every t in T: t(x) in S iff t(y) in S.
EquivalenceRelation subset_equivalence(const MengerAlgebra& alg,
                                       const TransformSet& T,
                                       const std::vector<int>& S);

/// Common refinement.
EquivalenceRelation intersect_equivalences(const EquivalenceRelation& e1,
                                           const EquivalenceRelation& e2);

/// One closure step: all c for which some a,b,t satisfy
/// (a <= b or a,b in H), t(a) sq c, a in X and t(b) in X.
std::vector<int> ch_step(const MengerAlgebra& alg, const TransformSet& T,
                         const std::vector<int>& H, const std::vector<int>& X);

struct ChClosure {
  std::vector<int> closure;                // the fixpoint
  std::vector<std::vector<int>> stages;    // stages[0] = X
};

ChClosure ch_closure(const MengerAlgebra& alg, const TransformSet& T,
                     const std::vector<int>& H, const std::vector<int>& X);

/// Direct satisfiability search over the unfolded stage-m condition
/// system (2^m - 1 variable triples); independent of ch_closure.
bool stage_condition(const MengerAlgebra& alg, const TransformSet& T,
                     const std::vector<int>& H, const std::vector<int>& X,
                     int m, int g, int m_guard = 3);

/// g1 ~ g2 iff g1 meet g2 in U, or both outside U. Verified to be an
/// equivalence; throws IntegrityError naming a violating triple if not.
EquivalenceRelation meet_equivalence(const MengerAlgebra& alg,
                                     const std::vector<int>& U);

}  // namespace menger
