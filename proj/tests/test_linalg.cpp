#include "doctest.h"

#include <random>

#include "toricsec/linalg.hpp"

using namespace toricsec;

TEST_SUITE("linalg") {
  TEST_CASE("determinant of small matrices") {
    CHECK(determinant(IntMatrix{{1, 0}, {0, 1}}) == 1);
    CHECK(determinant(IntMatrix{{1, 1}, {1, 2}}) == 1);
    CHECK(determinant(IntMatrix{{1, 0}, {1, 2}}) == 2);
    CHECK(determinant(IntMatrix{{2, 3, 1}, {4, 1, 0}, {0, 5, 7}}) == -50);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  }

  TEST_CASE("adjugate times matrix is det times identity") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> dist(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + trial % 4;
      IntMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
      IntMatrix expected = IntMatrix::identity(n);
      const Int d = determinant(m);
      for (std::size_t i = 0; i < n; ++i) expected(i, i) = d;
      CHECK(adjugate(m) * m == expected);
    }
  }

  TEST_CASE("unimodular inverse") {
    const IntMatrix m{{2, 1}, {1, 1}};
    auto inv = inverse_unimodular(m);
    REQUIRE(inv);
    CHECK(*inv * m == IntMatrix::identity(2));
    CHECK_FALSE(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  }

  TEST_CASE("rank") {
    CHECK(rank(IntMatrix(0, 3)) == 0);
    CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(rank(IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
    CHECK(rank(IntMatrix{{1, 0}, {0, 1}, {1, 1}}) == 2);
  }

  TEST_CASE("rank survives int64 overflow in elimination") {
    const Int big = Int(1) << 40;
    const IntMatrix m{{big, big + 1, 3}, {big + 7, big - 5, 11}, {2 * big + 7, 2 * big - 4, 14}};
    CHECK(rank(m) == 2);
  }

  TEST_CASE("kernel basis is saturated and spans the kernel") {
    const IntMatrix m{{2, 4, 6}};
    const IntMatrix k = kernel_basis(m);
    CHECK(k.rows() == 3);
    CHECK(k.cols() == 2);
    for (std::size_t c = 0; c < k.cols(); ++c) {
      const IntVector col = k.column(c);
      CHECK(m.apply(col) == IntVector{0});
    }
    // Saturation: the 2x2 minors have gcd 1.
    IntVector minors;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) minors.push_back(k(a, 0) * k(b, 1) - k(b, 0) * k(a, 1));
    CHECK(gcd_of(minors) == 1);
  }

  TEST_CASE("kernel of a projection") {
    const IntMatrix k = kernel_basis(IntMatrix{{1, 0}});
    REQUIRE(k.cols() == 1);
    const IntVector col = k.column(0);
    CHECK(col[0] == 0);
    CHECK((col[1] == 1 || col[1] == -1));
  }

  TEST_CASE("homogeneous feasibility") {
    const std::vector<IntVector> none;
    // h with h_x > 0 and h_y > 0.
    std::vector<IntVector> pos{{1, 0}, {0, 1}};
    CHECK(homogeneous_feasible(2, none, pos));
    // h_x > 0 and -h_x > 0 is infeasible.
    std::vector<IntVector> contra{{1, 0}, {-1, 0}};
    CHECK_FALSE(homogeneous_feasible(2, none, contra));
    // h_x = 0 with h_x + h_y > 0 and h_y - h_x > 0.
    std::vector<IntVector> zero{{1, 0}};
    std::vector<IntVector> pos2{{1, 1}, {-1, 1}};
    CHECK(homogeneous_feasible(2, zero, pos2));
    std::vector<IntVector> pos3{{1, 1}, {-1, -1}};
    CHECK_FALSE(homogeneous_feasible(2, zero, pos3));
  }

  TEST_CASE("gcd and dot") {
    CHECK(gcd_of(IntVector{4, -6, 10}) == 2);
    CHECK(gcd_of(IntVector{0, 0}) == 0);
    CHECK(dot(IntVector{1, 2, 3}, IntVector{4, -5, 6}) == 12);
  }
}
