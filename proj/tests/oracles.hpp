#pragma once

// Reference values computed without the cohomology engine: closed-form
// binomials on P^n and brute-force lattice-point counts for global sections.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "toricsec/divisor.hpp"
#include "toricsec/fan.hpp"

namespace oracle {

using toricsec::Int;
using toricsec::IntVector;

inline Int binomial(Int n, Int k) {
  if (k < 0 || n < k) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// h^p(P^n, O(d)).
inline std::vector<Int> projective_space(int n, Int d) {
  std::vector<Int> h(n + 1, 0);
  if (d >= 0) h[0] = binomial(n + d, n);
  if (d <= -n - 1) h[n] = binomial(-d - 1, n);
  return h;
}

/// #{m in [-bound, bound]^n : <m, v_rho> >= -a_rho for all rho}.
inline Int sections(const std::vector<IntVector>& rays, const IntVector& coeffs, int rank, Int bound) {
  Int count = 0;
  IntVector m(rank, -bound);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < rays.size() && ok; ++r) {
      Int s = 0;
      for (int i = 0; i < rank; ++i) s += m[i] * rays[r][i];
      ok = s >= -coeffs[r];
    }
    if (ok) ++count;
    int i = 0;
    while (i < rank && m[i] == bound) m[i++] = -bound;
    if (i == rank) break;
    ++m[i];
  }
  return count;
}

/// Sum over i + j = k of a_i * b_j.
inline std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace oracle

namespace fixtures {

using toricsec::FanPtr;
using toricsec::RawFan;

inline RawFan p1_raw() { return {1, {{1}, {-1}}, {{0}, {1}}}; }
inline RawFan p2_raw() { return {2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}}; }
inline RawFan p3_raw() {
  return {3,
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}
inline RawFan hirzebruch_raw(toricsec::Int a) {
  return {2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
}
inline RawFan p1xp1_raw() {
  return {2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
}
inline RawFan p1xp2_raw() {
  return {3,
          {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}},
          {{0, 2, 3}, {0, 3, 4}, {0, 2, 4}, {1, 2, 3}, {1, 3, 4}, {1, 2, 4}}};
}

inline FanPtr p1() { return toricsec::validate_fan(p1_raw()); }
inline FanPtr p2() { return toricsec::validate_fan(p2_raw()); }
inline FanPtr p3() { return toricsec::validate_fan(p3_raw()); }
inline FanPtr hirzebruch(toricsec::Int a) { return toricsec::validate_fan(hirzebruch_raw(a)); }
inline FanPtr p1xp1() { return toricsec::validate_fan(p1xp1_raw()); }
inline FanPtr p1xp2() { return toricsec::validate_fan(p1xp2_raw()); }

/// The fixture set: P1, P2, P3, P1xP1, F0..F3.
inline std::vector<std::pair<std::string, FanPtr>> all() {
  return {{"P1", p1()}, {"P2", p2()}, {"P3", p3()}, {"P1xP1", p1xp1()},
          {"F0", hirzebruch(0)}, {"F1", hirzebruch(1)}, {"F2", hirzebruch(2)}, {"F3", hirzebruch(3)}};
}

inline constexpr std::uint64_t kSeed = 20240611;

/// Divisors with coefficients drawn uniformly from [lo, hi].
inline std::vector<toricsec::TorusDivisor> random_divisors(const FanPtr& fan, std::size_t count, std::mt19937_64& rng,
                                                           toricsec::Int lo = -5, toricsec::Int hi = 5) {
  std::uniform_int_distribution<toricsec::Int> dist(lo, hi);
  std::vector<toricsec::TorusDivisor> out;
  for (std::size_t i = 0; i < count; ++i) {
    toricsec::IntVector c(fan->num_rays());
    for (auto& x : c) x = dist(rng);
    out.emplace_back(fan, std::move(c));
  }
  return out;
}

}  // namespace fixtures
