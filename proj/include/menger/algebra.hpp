#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "menger/nplace.hpp"

namespace menger {

/// Finite abstract algebra (G, o, R_1..R_n [, meet]) given by total
/// operation tables over element indices 0..size-1.
struct MengerAlgebra {
  int size = 1;
  int arity = 1;
  std::vector<int> op;                   // size^(arity+1), row-major (x, y1..yn)
  std::vector<std::vector<int>> proj;    // arity tables of length size
  std::optional<std::vector<int>> meet;  // size*size when present
  std::vector<std::string> labels;       // optional element names

  int apply(int x, std::span<const int> ys) const;
  int pr(int i, int x) const;  // i is 1-based
  int meet_of(int x, int y) const;
  /// x[y1..yn] with every inner argument equal to y.
  int apply_diag(int x, int y) const;
  /// x[R_1 y ... R_n y].
  int apply_rdiag(int x, int y) const;
  void validate() const;
  std::string label(int x) const;
  int label_index(const std::string& name) const;  // -1 if absent
};

using WitnessVars = std::vector<std::pair<std::string, int>>;

enum class CheckStatus { pass, fail, not_applicable };

struct AxiomResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  WitnessVars witness;  // first (lexicographically least) violation
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;
  bool all_pass() const;
  const AxiomResult* find(const std::string& name) const;
};

/// Exhaustive verification of A1-A7, and A8-A10 plus the semilattice
/// laws for the meet when it is present (status not_applicable otherwise).
AxiomReport check_axioms(const MengerAlgebra& alg);

/// Tables of a closed concrete system; element i of the result is
/// sys.functions[i] and labels carry the function names.
MengerAlgebra abstractify(const FunctionSystem& sys);

/// u[w-bar |_i z]: context has n-1 entries, z is inserted at slot i.
/// An absent u means the empty symbol, for which the result is z itself.
int substitute_at(const MengerAlgebra& alg, std::optional<int> u,
                  std::span<const int> context, int i, int z);

struct BinaryRelation {
  int size = 0;
  std::vector<char> bits;

  explicit BinaryRelation(int n = 0) : size(n), bits(std::size_t(n) * n, 0) {}
  bool at(int x, int y) const { return bits[std::size_t(x) * size + y] != 0; }
  void set(int x, int y, bool v = true) { bits[std::size_t(x) * size + y] = v; }
  bool contains(const BinaryRelation& other) const;
  std::vector<std::pair<int, int>> pairs() const;
  bool operator==(const BinaryRelation&) const = default;
};

/// (x,y) related iff x = y[R_1 x ... R_n x]  (the restriction order).
BinaryRelation zeta(const MengerAlgebra& alg);
/// (x,y) related iff (R_1 x, R_1 y) is a zeta pair (the domain quasi-order).
BinaryRelation chi(const MengerAlgebra& alg);

// Individual relation predicates.  Stability and v-regularity of a
// quasi-order factor through the one-slot regularities; for other
// relations the literal exhaustive reading of the implication is used.
bool rel_stable(const MengerAlgebra&, const BinaryRelation&);
bool rel_l_regular(const MengerAlgebra&, const BinaryRelation&);
bool rel_v_regular(const MengerAlgebra&, const BinaryRelation&);
bool rel_i_regular(const MengerAlgebra&, const BinaryRelation&, int i);
bool rel_v_negative(const MengerAlgebra&, const BinaryRelation&);
bool rel_reflexive(const BinaryRelation&);
bool rel_antisymmetric(const BinaryRelation&);
bool rel_transitive(const BinaryRelation&);

struct RelationProps {
  bool stable, l_regular, v_regular, v_negative;
  bool reflexive, antisymmetric, transitive;
  std::vector<char> i_regular;  // per coordinate, 1-based shifted by one
};

RelationProps relation_props(const MengerAlgebra& alg, const BinaryRelation& rel);

struct PropResult {
  bool holds = true;
  WitnessVars witness;
};

struct SubsetReport {
  PropResult quasi_stable, meet_quasi_stable, stable, meet_stable;
  PropResult l_unitary, v_unitary, l_ideal;
  bool meet_checked = false;  // meet flags evaluated only when meet exists
};

SubsetReport subset_props(const MengerAlgebra& alg, const std::vector<int>& H);

// Subset property predicates with witness reporting, usable standalone.
PropResult subset_quasi_stable(const MengerAlgebra&, const std::vector<char>& H);
PropResult subset_meet_quasi_stable(const MengerAlgebra&, const std::vector<char>& H);
PropResult subset_stable(const MengerAlgebra&, const std::vector<char>& H);
PropResult subset_meet_stable(const MengerAlgebra&, const std::vector<char>& H);
PropResult subset_l_unitary(const MengerAlgebra&, const std::vector<char>& H);
PropResult subset_v_unitary(const MengerAlgebra&, const std::vector<char>& H);
PropResult subset_l_ideal(const MengerAlgebra&, const std::vector<char>& H);

/// The six order laws relating zeta, chi and the projections; assumes the
/// algebra satisfies A1-A7.
PropResult check_order_laws(const MengerAlgebra& alg);

}  // namespace menger
