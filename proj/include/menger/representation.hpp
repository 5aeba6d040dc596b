#pragma once

#include "menger/transforms.hpp"

namespace menger {

/// A map from algebra elements to n-place functions over a common
/// finite carrier; images need not be distinct.
struct Representation {
  int source_size = 0;
  int arity = 1;
  int carrier = 1;
  std::vector<NPlaceFunction> images;  // indexed by algebra element
};

enum class VerifyMode { automatic, on, off };  // automatic: on for |G| <= 12

struct SimplestRep {
  Representation rep;
  EquivalenceRelation classes;
  int w_class = -1;               // class id of W, -1 when W is empty
  std::vector<int> class_point;   // class id -> carrier point (-1 for W)
};

/// P_(E,W): the action of G on the E-classes distinct from W. W must be
/// empty or an E-class that is an l-ideal; E must be v-regular.
SimplestRep simplest_representation(const MengerAlgebra& alg,
                                    const EquivalenceRelation& E,
                                    const std::vector<int>& W,
                                    VerifyMode verify = VerifyMode::automatic);

struct RepCheck {
  CheckStatus status = CheckStatus::pass;
  WitnessVars witness;
};

struct RepReport {
  RepCheck composition;  // P(g[g1..gn]) = P(g)[P(g1)..P(gn)]
  RepCheck projection;   // P(R_i g) = R_i P(g), domains included
  RepCheck meet_compat;  // P(g1 meet g2) = P(g1) meet P(g2)
  bool ok(bool need_meet) const;
};

RepReport verify_representation(const MengerAlgebra& alg,
                                const Representation& rep);

/// Elements whose image fixes the diagonal point (a,...,a).
std::vector<int> representation_stabilizer(const Representation& rep, int a);

/// Disjoint-carrier sum; part k's points are shifted by the total size
/// of the carriers before it (see sum_offsets).
Representation sum_representations(std::span<const Representation> parts);
std::vector<int> sum_offsets(std::span<const Representation> parts);

/// Each element of a closed concrete system maps to itself.
Representation identity_representation(const FunctionSystem& sys);

}  // namespace menger
