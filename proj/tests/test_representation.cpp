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

TEST_CASE("simplest representation of ABS1 over the stabilizer classes") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0()),
      ic1 = fx::idx(s, fx::c1());

  EquivalenceRelation E = subset_equivalence(alg, T, {iid, ic0});
  SimplestRep sr = simplest_representation(alg, E, {}, VerifyMode::on);
  REQUIRE(sr.rep.carrier == 2);
  CHECK(sr.w_class == -1);

  int alpha = sr.class_point[E.class_of[iid]];  // class {id, c0}
  int beta = sr.class_point[E.class_of[ic1]];   // class {c1}
  CHECK(sr.rep.images[iid].graph ==
        std::map<Tuple, int>{{{alpha}, alpha}, {{beta}, beta}});
  CHECK(sr.rep.images[ic0].graph ==
        std::map<Tuple, int>{{{alpha}, alpha}, {{beta}, alpha}});
  CHECK(sr.rep.images[ic1].graph ==
        std::map<Tuple, int>{{{alpha}, beta}, {{beta}, beta}});

  RepReport rr = verify_representation(alg, sr.rep);
  CHECK(rr.ok(false));
  CHECK(rr.meet_compat.status == CheckStatus::not_applicable);

  CHECK(representation_stabilizer(sr.rep, alpha) == sorted({iid, ic0}));
  CHECK(representation_stabilizer(sr.rep, beta) == sorted({iid, ic1}));
}

TEST_CASE("single-class partition collapses to a one-point carrier") {
  MengerAlgebra alg = fx::abs1();
  EquivalenceRelation all = EquivalenceRelation::from_class_ids({0, 0, 0});
  SimplestRep sr = simplest_representation(alg, all, {}, VerifyMode::on);
  CHECK(sr.rep.carrier == 1);
  for (const auto& img : sr.rep.images)
    CHECK(img.graph == std::map<Tuple, int>{{{0}, 0}});
}

TEST_CASE("precondition violations are rejected") {
  MengerAlgebra alg = fx::abs1();
  FunctionSystem s = fx::sys1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0());
  EquivalenceRelation E = subset_equivalence(alg, T, {iid, ic0});
  // W must be a whole class
  CHECK_THROWS_AS(simplest_representation(alg, E, {iid}, VerifyMode::off),
                  InputError);
  // {id, c0} is not an l-ideal: c1[id] = c1 leaves the set
  CHECK_THROWS_AS(
      simplest_representation(alg, E, sorted({iid, ic0}), VerifyMode::off),
      InputError);
}

TEST_CASE("corrupting an image breaks the homomorphism identity") {
  MengerAlgebra alg = fx::abs1();
  FunctionSystem s = fx::sys1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0()),
      ic1 = fx::idx(s, fx::c1());
  EquivalenceRelation E = subset_equivalence(alg, T, {iid, ic0});
  SimplestRep sr = simplest_representation(alg, E, {});
  // rebind P(c0) at the {c1}-class point: c0[c1] = c0 no longer matches
  int beta = sr.class_point[E.class_of[ic1]];
  sr.rep.images[ic0].graph[{beta}] = beta;
  RepReport rr = verify_representation(alg, sr.rep);
  CHECK_FALSE(rr.ok(false));
  CHECK(rr.composition.status == CheckStatus::fail);
  CHECK_FALSE(rr.composition.witness.empty());
}

TEST_CASE("identity representation of a concrete system verifies") {
  for (const FunctionSystem& s : {fx::sys1(), fx::sys1m()}) {
    Representation rep = identity_representation(s);
    MengerAlgebra alg = abstractify(s);
    RepReport rr = verify_representation(alg, rep);
    CHECK(rr.ok(s.with_meet));
    for (int a = 0; a < s.carrier; ++a)
      CHECK(representation_stabilizer(rep, a) == semantic_stabilizer(s, a));
  }
}

TEST_CASE("disjoint sums shift points and preserve stabilizers") {
  FunctionSystem s = fx::sys1();
  MengerAlgebra alg = fx::abs1();
  TransformSet T = tn_closure(alg);
  int iid = fx::idx(s, fx::id2()), ic0 = fx::idx(s, fx::c0());
  EquivalenceRelation E = subset_equivalence(alg, T, {iid, ic0});
  SimplestRep sr = simplest_representation(alg, E, {});

  Representation ident = identity_representation(s);
  std::vector<Representation> parts{ident, sr.rep};
  std::vector<int> offs = sum_offsets(parts);
  REQUIRE(offs == std::vector<int>{0, 2});
  Representation total = sum_representations(parts);
  CHECK(total.carrier == 4);

  RepReport rr = verify_representation(alg, total);
  CHECK(rr.ok(false));
  int alpha = sr.class_point[E.class_of[iid]];
  CHECK(representation_stabilizer(total, offs[1] + alpha) ==
        sorted({iid, ic0}));
  for (int a = 0; a < 2; ++a)
    CHECK(representation_stabilizer(total, a) == semantic_stabilizer(s, a));
}
