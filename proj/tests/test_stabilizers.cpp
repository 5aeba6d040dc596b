#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace menger;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> all_of(const MengerAlgebra& alg) {
  std::vector<int> v(alg.size);
  for (int x = 0; x < alg.size; ++x) v[x] = x;
  return v;
}

}  // namespace

TEST_CASE("theorem 2 accepts the ABS1 stabilizer and reports U = G") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0())});

  Verdict v = check_theorem2(alg, T, H);
  CHECK(v.pass);
  REQUIRE(v.U.has_value());
  CHECK(*v.U == all_of(alg));
  REQUIRE(v.stages.has_value());
  CHECK((*v.stages)[0] == H);
}

TEST_CASE("theorem 2 rejects {c0, c1} at l-unitarity") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::c0()), fx::idx(s, fx::c1())});

  Verdict v = check_theorem2(alg, T, H);
  CHECK_FALSE(v.pass);
  CHECK(v.failed_condition == "l-unitary");
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("theorem 1 with H = U = G passes") {
  for (const MengerAlgebra& alg : {fx::abs1(), fx::abs1m()}) {
    TransformSet T = tn_closure(alg);
    Verdict v = check_theorem1(alg, T, all_of(alg), all_of(alg));
    CHECK(v.pass);
  }
}

TEST_CASE("theorem 2 pass implies theorem 1 pass with U = C_H[H]") {
  for (const MengerAlgebra& alg : {fx::abs1(), fx::abs1m()}) {
    TransformSet T = tn_closure(alg);
    const std::uint64_t total = std::uint64_t(1) << alg.size;
    int implications = 0;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::vector<int> H;
      for (int x = 0; x < alg.size; ++x)
        if (mask & (std::uint64_t(1) << x)) H.push_back(x);
      Verdict t2 = check_theorem2(alg, T, H);
      if (!t2.pass) continue;
      ++implications;
      CHECK(check_theorem1(alg, T, H, *t2.U).pass);
    }
    CHECK(implications > 0);
  }
}

TEST_CASE("theorem 4 rejects {c0} for every admissible U") {
  FunctionSystem s = fx::sys1m();
  MengerAlgebra alg = fx::abs1m();
  int ic0 = fx::idx(s, fx::c0());
  std::vector<int> rest = complement_of({ic0}, alg.size);
  const std::uint64_t total = std::uint64_t(1) << rest.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> U{ic0};
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (mask & (std::uint64_t(1) << k)) U.push_back(rest[k]);
    Verdict v = check_theorem4(alg, {ic0}, sorted(U));
    CHECK_FALSE(v.pass);
    CHECK_FALSE(v.witness.empty());
  }
}

TEST_CASE("theorem 4 needs a meet table") {
  MengerAlgebra alg = fx::abs1();
  CHECK_THROWS_AS(check_theorem4(alg, {0}, {0}), InputError);
  CHECK_THROWS_AS(check_theorem5(alg, {0}), InputError);
}

TEST_CASE("theorem 5 accepts {id, c0, e0} with the domain class as U0") {
  FunctionSystem s = fx::sys1m();
  MengerAlgebra alg = fx::abs1m();
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0()),
                               fx::idx(s, fx::e0())});
  Verdict v = check_theorem5(alg, H);
  CHECK(v.pass);
  REQUIRE(v.U0.has_value());
  CHECK(*v.U0 == semantic_domain_class(s, 0));
}

TEST_CASE("theorem 5 rejects {id, c0} at meet-stability") {
  FunctionSystem s = fx::sys1m();
  MengerAlgebra alg = fx::abs1m();
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0())});
  Verdict v = check_theorem5(alg, H);
  CHECK_FALSE(v.pass);
  CHECK(v.failed_condition == "meet-stable");
}

TEST_CASE("theorem 5 accepts H = G with U0 = G") {
  MengerAlgebra alg = fx::abs1m();
  Verdict v = check_theorem5(alg, all_of(alg));
  CHECK(v.pass);
  CHECK(*v.U0 == all_of(alg));
}

TEST_CASE("theorem 5 pass implies theorem 4 pass with U0") {
  MengerAlgebra alg = fx::abs1m();
  const std::uint64_t total = std::uint64_t(1) << alg.size;
  int implications = 0;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<int> H;
    for (int x = 0; x < alg.size; ++x)
      if (mask & (std::uint64_t(1) << x)) H.push_back(x);
    Verdict t5 = check_theorem5(alg, H);
    if (!t5.pass) continue;
    ++implications;
    CHECK(check_theorem4(alg, H, *t5.U0).pass);
  }
  CHECK(implications > 0);
}

TEST_CASE("theorem 3 agrees with theorem 2 on the fixtures") {
  for (const MengerAlgebra& alg : {fx::abs1(), fx::abs1m()}) {
    TransformSet T = tn_closure(alg);
    const std::uint64_t total = std::uint64_t(1) << alg.size;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::vector<int> H;
      for (int x = 0; x < alg.size; ++x)
        if (mask & (std::uint64_t(1) << x)) H.push_back(x);
      Verdict t2 = check_theorem2(alg, T, H);
      Verdict t3 = check_theorem3(alg, T, H, 3);
      CHECK(t2.pass == t3.pass);
    }
  }
}

TEST_CASE("full audit lists every failed condition") {
  FunctionSystem s = fx::sys1m();
  MengerAlgebra alg = fx::abs1m();
  TransformSet T = tn_closure(alg);
  int ic0 = fx::idx(s, fx::c0()), ic1 = fx::idx(s, fx::c1());
  Verdict v = check_theorem2(alg, T, {ic0, ic1}, true);
  CHECK_FALSE(v.pass);
  CHECK(v.all_failures.size() >= 1);
  CHECK(v.failed_condition == v.all_failures[0]);
}

TEST_CASE("exhaustive U search for theorem 1") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0())});
  auto U = find_theorem1_domain(alg, T, H);
  REQUIRE(U.has_value());
  CHECK(check_theorem1(alg, T, H, *U).pass);
  CHECK_FALSE(
      find_theorem1_domain(alg, T,
                           sorted({fx::idx(s, fx::c0()), fx::idx(s, fx::c1())}))
          .has_value());
}

TEST_CASE("witness construction realizes H as a stabilizer") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0())});

  StabilizerWitness w = build_witness(alg, T, H, WitnessMode::theorem2);
  CHECK(representation_stabilizer(w.rep, w.point) == H);
  CHECK(verify_representation(alg, w.rep).ok(false));
  CHECK(w.w_set.empty());  // U = G, nothing is discarded
}

TEST_CASE("witness construction in meet mode") {
  FunctionSystem s = fx::sys1m();
  MengerAlgebra alg = fx::abs1m();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::id2()), fx::idx(s, fx::c0()),
                               fx::idx(s, fx::e0())});
  StabilizerWitness w = build_witness(alg, T, H, WitnessMode::theorem4);
  CHECK(representation_stabilizer(w.rep, w.point) == H);
  CHECK(verify_representation(alg, w.rep).ok(true));
  CHECK(w.w_set == complement_of(semantic_domain_class(s, 0), alg.size));
}

TEST_CASE("witness refuses a rejected H") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  std::vector<int> H = sorted({fx::idx(s, fx::c0()), fx::idx(s, fx::c1())});
  CHECK_THROWS_AS(build_witness(alg, T, H, WitnessMode::theorem2), InputError);
}
