#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "menger/common.hpp"

namespace menger {

struct Carrier {
  int size = 1;
  auto operator<=>(const Carrier&) const = default;
};

/// A partial map from n-tuples over {0..carrier-1} to {0..carrier-1},
/// stored as an explicit sparse graph. A tuple absent from the graph
/// means the function is undefined there; the empty graph is the
/// nowhere-defined function.
struct NPlaceFunction {
  int carrier = 1;
  int arity = 1;
  std::map<Tuple, int> graph;

  bool defined_at(const Tuple& args) const { return graph.count(args) != 0; }
  std::optional<int> eval(const Tuple& args) const;
  void validate() const;  // throws InputError on out-of-range keys/values

  auto operator<=>(const NPlaceFunction&) const = default;
};

/// f[g_1...g_n]: defined at a-bar iff every g_i is defined there and the
/// tuple of inner values lies in the domain of f.
NPlaceFunction compose_menger(const NPlaceFunction& f,
                              std::span<const NPlaceFunction> gs);

/// R_i f: same domain as f, value is the i-th argument (i is 1-based).
NPlaceFunction project(const NPlaceFunction& f, int i);

/// Set-theoretic intersection of graphs.
NPlaceFunction meet(const NPlaceFunction& f, const NPlaceFunction& g);

/// A duplicate-free list of n-place functions closed under Menger
/// composition and every projection (and pairwise meet if with_meet).
struct FunctionSystem {
  int carrier = 1;
  int arity = 1;
  bool with_meet = false;
  std::vector<NPlaceFunction> functions;
  std::vector<std::string> names;

  int index_of(const NPlaceFunction& f) const;  // -1 if absent
  int index_of_name(const std::string& name) const;
};

/// Least closed superset of the generators. Element order is the
/// insertion order of a worklist seeded by the generators sorted
/// lexicographically on their graphs.
FunctionSystem close_system(int carrier, int arity,
                            std::vector<NPlaceFunction> generators,
                            bool with_meet, std::size_t cap = 20000,
                            std::vector<std::string> names = {});

/// Checks closure under composition, projections, and meet if claimed.
bool system_is_closed(const FunctionSystem& sys,
                      std::string* missing = nullptr);

/// Indices of the members f with f(a,...,a) = a.
std::vector<int> semantic_stabilizer(const FunctionSystem& sys, int a);

/// Indices of the members whose domain contains (a,...,a).
std::vector<int> semantic_domain_class(const FunctionSystem& sys, int a);

}  // namespace menger
