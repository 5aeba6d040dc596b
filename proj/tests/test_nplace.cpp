#include <doctest.h>

#include "fixtures.hpp"

using namespace menger;

TEST_CASE("composition follows the definedness rule") {
  // f defined only where the inner values land in its domain
  NPlaceFunction f = fx::e0();            // {0 -> 0}
  NPlaceFunction g = fx::unary({1, 0});   // swap
  std::vector<NPlaceFunction> gs{g};
  NPlaceFunction h = compose_menger(f, gs);
  CHECK(h.graph == std::map<Tuple, int>{{{1}, 0}});

  gs[0] = fx::unary({-1, 0});  // {1 -> 0}
  h = compose_menger(f, gs);
  CHECK(h.graph == std::map<Tuple, int>{{{1}, 0}});

  gs[0] = fx::unary({-1, -1});  // nowhere defined
  CHECK(compose_menger(f, gs).graph.empty());
}

TEST_CASE("binary composition matches a hand oracle") {
  // f(x,y) = x on the diagonal only
  NPlaceFunction f{2, 2, {{{0, 0}, 0}, {{1, 1}, 1}}};
  NPlaceFunction g1{2, 2, {{{0, 1}, 1}, {{1, 0}, 1}}};
  NPlaceFunction g2{2, 2, {{{0, 1}, 1}, {{0, 0}, 0}}};
  std::vector<NPlaceFunction> gs{g1, g2};
  NPlaceFunction h = compose_menger(f, gs);
  // only (0,1) is in both inner domains; values (1,1) in dom f
  CHECK(h.graph == std::map<Tuple, int>{{{0, 1}, 1}});
}

TEST_CASE("projection keeps the domain and returns the argument") {
  NPlaceFunction f{2, 2, {{{0, 1}, 1}, {{1, 0}, 0}}};
  NPlaceFunction p1 = project(f, 1);
  NPlaceFunction p2 = project(f, 2);
  CHECK(p1.graph == std::map<Tuple, int>{{{0, 1}, 0}, {{1, 0}, 1}});
  CHECK(p2.graph == std::map<Tuple, int>{{{0, 1}, 1}, {{1, 0}, 0}});
  CHECK_THROWS_AS(project(f, 3), InputError);
}

TEST_CASE("meet is graph intersection") {
  NPlaceFunction m = meet(fx::id2(), fx::c0());
  CHECK(m == fx::e0());
  CHECK(meet(fx::c0(), fx::c1()).graph.empty());
}

TEST_CASE("SYS1 closes to exactly three functions") {
  FunctionSystem s = fx::sys1();
  CHECK(s.functions.size() == 3);
  CHECK(s.index_of(fx::id2()) >= 0);
  CHECK(s.index_of(fx::c0()) >= 0);
  CHECK(s.index_of(fx::c1()) >= 0);
  CHECK(system_is_closed(s));
}

TEST_CASE("SYS1 with meet closes to the eight known functions") {
  FunctionSystem s = fx::sys1m();
  CHECK(s.functions.size() == 8);
  for (const NPlaceFunction& f :
       {fx::id2(), fx::c0(), fx::c1(), fx::e0(), fx::unary({-1, 1}),
        fx::unary({1, -1}), fx::unary({-1, 0}), fx::unary({-1, -1})})
    CHECK(s.index_of(f) >= 0);
  CHECK(system_is_closed(s));
}

TEST_CASE("empty generator list is rejected") {
  CHECK_THROWS_AS(close_system(2, 1, {}, false), InputError);
}

TEST_CASE("closure is deduplicated and order-deterministic") {
  FunctionSystem a = close_system(2, 1, {fx::c0(), fx::id2(), fx::c1()}, false);
  FunctionSystem b = close_system(2, 1, {fx::c1(), fx::c0(), fx::id2()}, false);
  CHECK(a.functions == b.functions);
}

TEST_CASE("semantic stabilizers of the fixtures") {
  FunctionSystem s = fx::sys1();
  CHECK(semantic_stabilizer(s, 0) ==
        std::vector<int>{fx::idx(s, fx::c0()), fx::idx(s, fx::id2())});
  std::vector<int> h1 = semantic_stabilizer(s, 1);
  CHECK(h1.size() == 2);
  CHECK(indicator(h1, 3)[fx::idx(s, fx::id2())]);
  CHECK(indicator(h1, 3)[fx::idx(s, fx::c1())]);

  FunctionSystem sm = fx::sys1m();
  std::vector<int> h0 = semantic_stabilizer(sm, 0);
  CHECK(h0.size() == 3);
  auto in = indicator(h0, 8);
  CHECK(in[fx::idx(sm, fx::id2())]);
  CHECK(in[fx::idx(sm, fx::c0())]);
  CHECK(in[fx::idx(sm, fx::e0())]);
}

TEST_CASE("semantic domain class of SYS1-with-meet at 1 has five members") {
  FunctionSystem sm = fx::sys1m();
  std::vector<int> u = semantic_domain_class(sm, 1);
  CHECK(u.size() == 5);
  auto in = indicator(u, 8);
  CHECK(in[fx::idx(sm, fx::id2())]);
  CHECK(in[fx::idx(sm, fx::c0())]);
  CHECK(in[fx::idx(sm, fx::c1())]);
  CHECK(in[fx::idx(sm, fx::unary({-1, 1}))]);
  CHECK(in[fx::idx(sm, fx::unary({-1, 0}))]);
  CHECK_FALSE(in[fx::idx(sm, fx::e0())]);

  // stabilizer is always inside the domain class
  for (int a = 0; a < 2; ++a) {
    auto dom = indicator(semantic_domain_class(sm, a), 8);
    for (int x : semantic_stabilizer(sm, a)) CHECK(dom[x]);
  }
}

TEST_CASE("out-of-range point is rejected") {
  CHECK_THROWS_AS(semantic_stabilizer(fx::sys1(), 2), InputError);
}
