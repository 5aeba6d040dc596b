#pragma once

#include "menger/json_io.hpp"

namespace fx {

using namespace menger;

// Total unary function over {0,1} given by its two values.
inline NPlaceFunction unary(std::vector<int> vals, int carrier = 2) {
  NPlaceFunction f{carrier, 1, {}};
  for (int a = 0; a < int(vals.size()); ++a)
    if (vals[a] >= 0) f.graph[{a}] = vals[a];
  return f;
}

inline NPlaceFunction id2() { return unary({0, 1}); }
inline NPlaceFunction c0() { return unary({0, 0}); }
inline NPlaceFunction c1() { return unary({1, 1}); }
inline NPlaceFunction e0() { return unary({0, -1}); }  // {0 -> 0}

inline FunctionSystem sys1() {
  return close_system(2, 1, {id2(), c0(), c1()}, false);
}

inline FunctionSystem sys1m() {
  return close_system(2, 1, {id2(), c0(), c1()}, true);
}

inline int idx(const FunctionSystem& s, const NPlaceFunction& f) {
  int i = s.index_of(f);
  if (i < 0) throw std::runtime_error("fixture function not in system");
  return i;
}

// ABS1 = abstractify(SYS1); element order is c0, id, c1 (sorted graphs).
inline MengerAlgebra abs1() { return abstractify(sys1()); }
inline MengerAlgebra abs1m() { return abstractify(sys1m()); }

}  // namespace fx
