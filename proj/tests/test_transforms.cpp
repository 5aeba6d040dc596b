#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace menger;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("T_1 of ABS1 has the four expected maps") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0()),
      ic1 = fx::idx(s, fx::c1());
  TransformSet T = tn_closure(alg);
  REQUIRE(T.maps.size() == 4);
  CHECK(T.maps[0] == std::vector<int>{0, 1, 2});  // identity first
  std::vector<std::vector<int>> expect{
      {0, 1, 2},
      std::vector<int>(3, ic0),
      std::vector<int>(3, ic1),
      std::vector<int>(3, iid)};  // x -> R1(x)
  for (const auto& m : expect)
    CHECK(std::count(T.maps.begin(), T.maps.end(), m) == 1);
}

TEST_CASE("one-element algebra has only the identity transform") {
  MengerAlgebra alg;
  alg.size = 1;
  alg.arity = 1;
  alg.op = {0};
  alg.proj = {{0}};
  TransformSet T = tn_closure(alg);
  CHECK(T.maps == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("tn_closure is idempotent under its own rules") {
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  for (const auto& t : T.maps) {
    for (int a = 0; a < alg.size; ++a) {
      std::vector<int> wrapped(alg.size), proj(alg.size);
      for (int x = 0; x < alg.size; ++x) {
        wrapped[x] = alg.apply_diag(a, t[x]);
        proj[x] = alg.pr(1, t[x]);
      }
      CHECK(std::count(T.maps.begin(), T.maps.end(), wrapped) == 1);
      CHECK(std::count(T.maps.begin(), T.maps.end(), proj) == 1);
    }
  }
}

TEST_CASE("normal v-complex test on ABS1") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0()),
      ic1 = fx::idx(s, fx::c1());
  CHECK(is_normal_v_complex(alg, T, {iid, ic0}));
  CHECK(is_normal_v_complex(alg, T, {ic0, ic1}));
  CHECK(is_normal_v_complex(alg, T, {0, 1, 2}));
  CHECK_THROWS_AS(is_normal_v_complex(alg, T, {}), InputError);
}

TEST_CASE("subset equivalence classes on ABS1") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0()),
      ic1 = fx::idx(s, fx::c1());

  EquivalenceRelation e = subset_equivalence(alg, T, {iid, ic0});
  CHECK(e.num_classes == 2);
  CHECK(e.class_of[iid] == e.class_of[ic0]);
  CHECK(e.class_of[ic1] != e.class_of[iid]);

  CHECK(subset_equivalence(alg, T, {0, 1, 2}).num_classes == 1);
  CHECK(subset_equivalence(alg, T, {}).num_classes == 1);
}

TEST_CASE("intersection of equivalences") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0());

  EquivalenceRelation e = subset_equivalence(alg, T, {iid, ic0});
  EquivalenceRelation all = subset_equivalence(alg, T, {0, 1, 2});
  CHECK(intersect_equivalences(e, e) == e);
  CHECK(intersect_equivalences(e, all) == e);

  EquivalenceRelation ident = EquivalenceRelation::from_class_ids({0, 1, 2});
  CHECK(intersect_equivalences(e, ident) == ident);
}

TEST_CASE("ch_step grows and contains its input") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0()),
      ic1 = fx::idx(s, fx::c1());
  std::vector<int> H = sorted({iid, ic0});

  std::vector<int> step = ch_step(alg, T, H, H);
  for (int x : H) CHECK(indicator(step, 3)[x]);
  CHECK(indicator(step, 3)[ic1]);  // chi is full, so c1 joins at once
  CHECK_THROWS_AS(ch_step(alg, T, {}, H), InputError);
  CHECK_THROWS_AS(ch_step(alg, T, H, {}), InputError);
}

TEST_CASE("ch_closure of the ABS1 stabilizer reaches G at stage 1") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0())});

  ChClosure c = ch_closure(alg, T, H, H);
  CHECK(c.closure == std::vector<int>{0, 1, 2});
  REQUIRE(c.stages.size() >= 2);
  CHECK(c.stages[0] == H);
  CHECK(c.stages[1] == std::vector<int>{0, 1, 2});
  // monotone stages
  for (std::size_t m = 1; m < c.stages.size(); ++m)
    for (int x : c.stages[m - 1]) CHECK(indicator(c.stages[m], 3)[x]);

  std::vector<int> all{0, 1, 2};
  ChClosure trivial = ch_closure(alg, T, all, all);
  CHECK(trivial.closure == all);
  CHECK(trivial.stages[0] == all);
}

TEST_CASE("stage_condition matches the closure stages on the fixtures") {
  for (const MengerAlgebra& alg : {fx::abs1(), fx::abs1m()}) {
    TransformSet T = tn_closure(alg);
    const std::uint64_t total = std::uint64_t(1) << alg.size;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::vector<int> H;
      for (int x = 0; x < alg.size; ++x)
        if (mask & (std::uint64_t(1) << x)) H.push_back(x);
      ChClosure c = ch_closure(alg, T, H, H);
      for (int m = 1; m <= 2; ++m) {
        std::vector<int> stage =
            c.stages[std::min<std::size_t>(m, c.stages.size() - 1)];
        auto in = indicator(stage, alg.size);
        for (int g = 0; g < alg.size; ++g)
          CHECK(stage_condition(alg, T, H, H, m, g, 2) == bool(in[g]));
      }
    }
  }
}

TEST_CASE("stage_condition at m=1 is exactly one ch_step") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0())});
  auto in = indicator(ch_step(alg, T, H, H), 3);
  for (int g = 0; g < 3; ++g)
    CHECK(stage_condition(alg, T, H, H, 1, g) == bool(in[g]));
  CHECK(stage_condition(alg, T, H, H, 1, fx::idx(s, fx::c1())));
  CHECK_THROWS_AS(stage_condition(alg, T, H, H, 0, 0), InputError);
}

TEST_CASE("meet equivalence partitions") {
  MengerAlgebra alg = fx::abs1m();
  std::vector<int> all(alg.size);
  for (int x = 0; x < alg.size; ++x) all[x] = x;
  CHECK(meet_equivalence(alg, all).num_classes == 1);
  CHECK(meet_equivalence(alg, {}).num_classes == 1);

  // U = chi-image of H for H = {id, c0, e0}: elements defined at 0
  FunctionSystem s = fx::sys1m();
  BinaryRelation sq = chi(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0()),
                               fx::idx(s, fx::e0())});
  std::vector<int> U;
  for (int x = 0; x < alg.size; ++x)
    for (int h : H)
      if (sq.at(h, x)) {
        U.push_back(x);
        break;
      }
  CHECK(U.size() == 5);
  EquivalenceRelation e = meet_equivalence(alg, U);
  // G minus U is one class
  std::vector<int> outside = complement_of(U, alg.size);
  REQUIRE(outside.size() == 3);
  CHECK(e.class_of[outside[0]] == e.class_of[outside[1]]);
  CHECK(e.class_of[outside[1]] == e.class_of[outside[2]]);
  // H forms a class separated from the rest of U
  CHECK(e.class_of[H[0]] == e.class_of[H[1]]);
  CHECK(e.class_of[H[1]] == e.class_of[H[2]]);
  CHECK(e.class_of[H[0]] != e.class_of[outside[0]]);
}
