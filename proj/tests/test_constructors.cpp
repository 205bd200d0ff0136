#include "doctest.h"

#include "oracles.hpp"
#include "toricsec/constructors.hpp"
#include "toricsec/error.hpp"
#include "toricsec/fibration.hpp"

using namespace toricsec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ToricError& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::MalformedFan;
}

FibrationData hirzebruch_fibration(Int a) {
  return validate_fibration(hirzebruch_fan(a), projective_space_fan(1), IntMatrix{{1, 0}});
}

/// (O, O(pt)) on the fiber with the point on fiber ray `ray`.
Collection fiber_pair(const FibrationData& fd, std::size_t ray) {
  return Collection(fd.fiber, {TorusDivisor::zero(fd.fiber), TorusDivisor::prime(fd.fiber, ray)});
}

}  // namespace

TEST_SUITE("constructors") {
  TEST_CASE("standard fans match hand-written ones") {
    CHECK(*projective_space_fan(1) == *fixtures::p1());
    CHECK(fans_isomorphic(*projective_space_fan(2), *fixtures::p2()));
    CHECK(fans_isomorphic(*projective_space_fan(3), *fixtures::p3()));
    for (Int a = 0; a <= 3; ++a) CHECK(*hirzebruch_fan(a) == *fixtures::hirzebruch(a));
    CHECK(fans_isomorphic(*product_fan(*fixtures::p1(), *fixtures::p1()), *fixtures::p1xp1()));
    CHECK(fans_isomorphic(*product_fan(*fixtures::p1(), *fixtures::p2()), *fixtures::p1xp2()));
  }

  TEST_CASE("beilinson") {
    const Construction b1 = beilinson(1);
    CHECK(b1.collection.size() == 2);
    CHECK(b1.collection[1].coeffs() == IntVector{1, 0});
    for (int n = 1; n <= 4; ++n) {
      const Construction b = beilinson(n);
      CHECK(b.collection.size() == static_cast<std::size_t>(n + 1));
      CHECK(b.fan->num_max_cones() == static_cast<std::size_t>(n + 1));
      CHECK(check_strongly_exceptional(b.collection).pass);
      CHECK(k0_length_check(b.collection));
    }
    CHECK_THROWS(beilinson(0));
  }

  TEST_CASE("product order puts the second factor outermost") {
    const Construction p = product(beilinson(1).collection, beilinson(2).collection);
    REQUIRE(p.collection.size() == 6);
    const FanPtr p1 = projective_space_fan(1);
    const FanPtr p2 = projective_space_fan(2);
    for (Int j = 0; j <= 2; ++j)
      for (Int i = 0; i <= 1; ++i)
        CHECK(p.collection[j * 2 + i] ==
              box_product(p.fan, TorusDivisor::prime(p1, 0, i), TorusDivisor::prime(p2, 0, j)));
    CHECK(check_strongly_exceptional(p.collection).pass);
    CHECK(k0_length_check(p.collection));
  }

  TEST_CASE("product with a single bundle is the pulled-back collection") {
    const Collection b = beilinson(2).collection;
    const FanPtr p1 = projective_space_fan(1);
    const Construction p = product(b, Collection(p1, {TorusDivisor::zero(p1)}));
    const ToricMorphism proj(p.fan, b.fan_ptr(), IntMatrix{{1, 0, 0}, {0, 1, 0}});
    REQUIRE(p.collection.size() == b.size());
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(linearly_equivalent(p.collection[i], pullback(proj, b[i])));
  }

  TEST_CASE("product rejects non strongly exceptional input") {
    const FanPtr p1 = projective_space_fan(1);
    const Collection bad(p1, {TorusDivisor::prime(p1, 0), TorusDivisor::zero(p1)});
    CHECK(code_of([&] { product(bad, beilinson(1).collection); }) == ErrorCode::InputNotStronglyExceptional);
  }

  TEST_CASE("hirzebruch fibrations") {
    for (Int a = 0; a <= 3; ++a) {
      const FibrationData fd = hirzebruch_fibration(a);
      CHECK(fd.locally_trivial_certified);
      CHECK(fd.uncovered_base_cones.empty());
      CHECK(fd.fiber->rank() == 1);
      CHECK(fd.fiber->rays() == std::vector<IntVector>{{1}, {-1}});
      CHECK(fd.fiber_to_total == std::vector<std::size_t>{1, 3});
      CHECK(fans_isomorphic(*fd.fiber, *projective_space_fan(1)));
    }
  }

  TEST_CASE("coordinate projection of a product") {
    const FibrationData fd = validate_fibration(fixtures::p1xp1(), fixtures::p1(), IntMatrix{{1, 0}});
    CHECK(fd.locally_trivial_certified);
    CHECK(fans_isomorphic(*fd.fiber, *fixtures::p1()));
    const FibrationData fd3 = validate_fibration(fixtures::p1xp2(), fixtures::p1(), IntMatrix{{1, 0, 0}});
    CHECK(fd3.locally_trivial_certified);
    CHECK(fd3.fiber->rank() == 2);
    CHECK(fd3.fiber->num_max_cones() == 3);
  }

  TEST_CASE("P2 is not a fibration over P1") {
    CHECK(code_of([] { validate_fibration(fixtures::p2(), fixtures::p1(), IntMatrix{{1, 0}}); }) ==
          ErrorCode::ConeNotMapped);
  }

  TEST_CASE("fibration validation errors") {
    CHECK(code_of([] { validate_fibration(fixtures::p2(), fixtures::p1(), IntMatrix{{1, 0, 0}}); }) ==
          ErrorCode::MalformedMorphism);
    CHECK(code_of([] { validate_fibration(fixtures::p1xp1(), fixtures::p1(), IntMatrix{{0, 0}}); }) ==
          ErrorCode::MalformedMorphism);
    const FanPtr half = validate_fan({1, {{1}}, {{0}}});
    CHECK(code_of([&] { validate_fibration(fixtures::p1xp1(), half, IntMatrix{{1, 0}}); }) ==
          ErrorCode::IncompleteFan);
  }

  TEST_CASE("fibration collection on F1") {
    const FibrationData fd = hirzebruch_fibration(1);
    const Collection base = beilinson(1).collection;
    const Collection c = fibration_collection(fd, fiber_pair(fd, 0), base, TorusDivisor::zero(fd.base));
    REQUIRE(c.size() == 4);
    CHECK(c[0].coeffs() == IntVector{0, 0, 0, 0});
    CHECK(c[1].coeffs() == IntVector{1, 0, 0, 0});
    CHECK(c[2].coeffs() == IntVector{0, 1, 0, 0});
    CHECK(c[3].coeffs() == IntVector{1, 1, 0, 0});
    CHECK(code_of([&] { fibration_collection(fd, beilinson(2).collection, base, TorusDivisor::zero(fd.base)); }) ==
          ErrorCode::DivisorFanMismatch);
    CHECK(code_of([&] { fibration_collection(fd, fiber_pair(fd, 0), fiber_pair(fd, 0), TorusDivisor::zero(fd.total)); }) ==
          ErrorCode::DivisorFanMismatch);
  }

  TEST_CASE("block twist uses k times D for block k") {
    const FibrationData fd = hirzebruch_fibration(2);
    const Collection base = beilinson(1).collection;
    const TorusDivisor d = TorusDivisor::prime(fd.base, 0, 3);
    const Collection c = fibration_collection(fd, fiber_pair(fd, 1), base, d);
    for (std::size_t k = 1; k <= 2; ++k)
      for (std::size_t j = 1; j <= 2; ++j) {
        const TorusDivisor expected = pullback(fd.projection, base[j - 1] + static_cast<Int>(k) * d) +
                                      lift_fiber_divisor(fd, fiber_pair(fd, 1)[k - 1]);
        CHECK(c[(k - 1) * 2 + (j - 1)] == expected);
      }
  }

  TEST_CASE("trivial fiber collection gives pulled-back base bundles") {
    const FibrationData fd = hirzebruch_fibration(1);
    const Collection base = beilinson(1).collection;
    const Collection c =
        fibration_collection(fd, Collection(fd.fiber, {TorusDivisor::zero(fd.fiber)}), base, TorusDivisor::zero(fd.base));
    REQUIRE(c.size() == 2);
    for (std::size_t j = 0; j < 2; ++j) CHECK(c[j] == pullback(fd.projection, base[j]));
  }

  TEST_CASE("trivial product fibration agrees with the product constructor") {
    const Collection b1 = beilinson(1).collection;
    const Collection b2 = beilinson(2).collection;
    // Total space P2 x P1 fibred over P2; the fiber collection is the outer index.
    const Construction prod = product(b2, b1);
    const FibrationData fd = validate_fibration(prod.fan, b2.fan_ptr(), IntMatrix{{1, 0, 0}, {0, 1, 0}});
    REQUIRE(fans_isomorphic(*fd.fiber, *b1.fan_ptr()));
    const Collection fiber(fd.fiber, {TorusDivisor::zero(fd.fiber), TorusDivisor(fd.fiber, b1[1].coeffs())});
    const Collection c = fibration_collection(fd, fiber, b2, TorusDivisor::zero(fd.base));
    REQUIRE(c.size() == prod.collection.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(linearly_equivalent(c[i], prod.collection[i]));
  }

  TEST_CASE("identity fibration over itself reproduces beilinson") {
    for (int n = 1; n <= 3; ++n) {
      const Construction b = beilinson(n);
      const FibrationData fd = validate_fibration(b.fan, b.fan, IntMatrix::identity(n));
      CHECK(fd.fiber->rank() == 0);
      CHECK(fd.locally_trivial_certified);
      const Collection point(fd.fiber, {TorusDivisor::zero(fd.fiber)});
      const Collection c = fibration_collection(fd, point, b.collection, TorusDivisor::zero(fd.base));
      CHECK(c == b.collection);
    }
  }

  TEST_CASE("twist search on hirzebruch surfaces") {
    const Collection base = beilinson(1).collection;
    for (Int a = 0; a <= 3; ++a) {
      CAPTURE(a);
      const FibrationData fd = hirzebruch_fibration(a);
      const TorusDivisor ample = TorusDivisor::prime(fd.base, 0);
      const TwistSearchResult pos = twist_search(fd, fiber_pair(fd, 1), base, ample);
      CHECK(pos.k == 0);
      CHECK(pos.twist.is_zero());
      CHECK(pos.report.pass);
      CHECK(pos.collection.size() == 4);
      CHECK(k0_length_check(pos.collection));
      // The other fiber point lifts to the negative section, which needs k = a.
      const TwistSearchResult neg = twist_search(fd, fiber_pair(fd, 0), base, ample);
      CHECK(neg.k == a);
      CHECK(neg.report.pass);
    }
  }

  TEST_CASE("verified collections have the block structure") {
    const Collection base = beilinson(1).collection;
    for (Int a = 0; a <= 3; ++a) {
      const FibrationData fd = hirzebruch_fibration(a);
      const TwistSearchResult r = twist_search(fd, fiber_pair(fd, 0), base, TorusDivisor::prime(fd.base, 0));
      const auto q = hom_quiver(r.collection);
      for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t t = 0; t < 4; ++t)
          if (t / 2 < s / 2) CHECK(q[s][t] == 0);
      CHECK(check_strongly_exceptional(r.collection).pass);
    }
  }

  TEST_CASE("twist search on a product") {
    const Construction prod = product(beilinson(2).collection, beilinson(1).collection);
    const FibrationData fd = validate_fibration(prod.fan, projective_space_fan(2), IntMatrix{{1, 0, 0}, {0, 1, 0}});
    const Collection fiber(fd.fiber, {TorusDivisor::zero(fd.fiber), TorusDivisor(fd.fiber, {1, 0})});
    const TwistSearchResult r =
        twist_search(fd, fiber, beilinson(2).collection, TorusDivisor::prime(fd.base, 0));
    CHECK(r.k == 0);
    CHECK(r.collection.size() == 6);
    CHECK(k0_length_check(r.collection));
  }

  TEST_CASE("twist search errors") {
    const FibrationData fd = hirzebruch_fibration(2);
    const Collection base = beilinson(1).collection;
    CHECK(code_of([&] { twist_search(fd, fiber_pair(fd, 0), base, TorusDivisor::zero(fd.base)); }) ==
          ErrorCode::NotAmple);
    CHECK_THROWS_AS(twist_search(fd, fiber_pair(fd, 0), base, TorusDivisor::prime(fd.base, 0), -1),
                    std::invalid_argument);
    try {
      twist_search(fd, fiber_pair(fd, 0), base, TorusDivisor::prime(fd.base, 0), 0);
      FAIL("expected SearchExhausted");
    } catch (const SearchExhaustedError& e) {
      CHECK(e.code() == ErrorCode::SearchExhausted);
      CHECK(e.k_max() == 0);
      CHECK(e.best_k() == 0);
      CHECK_FALSE(e.best_report().pass);
      CHECK_FALSE(e.best_report().violations.empty());
    }
  }

  TEST_CASE("find ample") {
    for (const auto& [name, fan] : fixtures::all()) {
      CAPTURE(name);
      auto a = find_ample(fan);
      REQUIRE(a);
      CHECK(is_ample(*a));
    }
    CHECK(find_ample(fixtures::p2())->coeffs() == IntVector{0, 0, 1});
  }

  TEST_CASE("length law") {
    for (Int a = 0; a <= 3; ++a) {
      const FibrationData fd = hirzebruch_fibration(a);
      CHECK(fd.total->num_max_cones() == fd.fiber->num_max_cones() * fd.base->num_max_cones());
      const Collection c =
          fibration_collection(fd, fiber_pair(fd, 1), beilinson(1).collection, TorusDivisor::zero(fd.base));
      CHECK(c.size() == 4);
      CHECK(k0_length_check(c));
    }
  }
}
