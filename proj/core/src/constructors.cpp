#include "toricsec/constructors.hpp"

#include <algorithm>

namespace toricsec {

FanPtr projective_space_fan(int n) {
  if (n < 1) throw ToricError(ErrorCode::MalformedFan, "projective space needs n >= 1");
  RawFan raw;
  raw.rank = n;
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    raw.rays.push_back(std::move(e));
  }
  raw.rays.emplace_back(static_cast<std::size_t>(n), -1);
  // Omit one ray at a time, starting from the last.
  for (int omit = n; omit >= 0; --omit) {
    std::vector<Int> cone;
    for (int r = 0; r <= n; ++r) {
      if (r != omit) cone.push_back(r);
    }
    raw.max_cones.push_back(std::move(cone));
  }
  return validate_fan(raw);
}

FanPtr hirzebruch_fan(Int a) {
  RawFan raw{2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  return validate_fan(raw);
}

FanPtr product_fan(const Fan& first, const Fan& second) {
  const auto n1 = static_cast<std::size_t>(first.rank());
  const auto n2 = static_cast<std::size_t>(second.rank());
  if (n1 + n2 == 0) return Fan::point();
  RawFan raw;
  raw.rank = static_cast<int>(n1 + n2);
  for (const auto& v : first.rays()) {
    IntVector w(n1 + n2, 0);
    std::copy(v.begin(), v.end(), w.begin());
    raw.rays.push_back(std::move(w));
  }
  for (const auto& v : second.rays()) {
    IntVector w(n1 + n2, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(n1));
    raw.rays.push_back(std::move(w));
  }
  const auto offset = static_cast<Int>(first.num_rays());
  for (const auto& s : first.max_cones()) {
    for (const auto& t : second.max_cones()) {
      std::vector<Int> cone(s.begin(), s.end());
      for (std::size_t r : t) cone.push_back(static_cast<Int>(r) + offset);
      raw.max_cones.push_back(std::move(cone));
    }
  }
  return validate_fan(raw);
}

TorusDivisor box_product(const FanPtr& product, const TorusDivisor& first, const TorusDivisor& second) {
  IntVector coeffs = first.coeffs();
  coeffs.insert(coeffs.end(), second.coeffs().begin(), second.coeffs().end());
  return TorusDivisor(product, std::move(coeffs));
}

Construction beilinson(int n) {
  FanPtr fan = projective_space_fan(n);
  std::vector<TorusDivisor> bundles;
  for (int d = 0; d <= n; ++d) bundles.push_back(TorusDivisor::prime(fan, 0, d));
  return {fan, Collection(fan, std::move(bundles))};
}

Construction product(const Collection& first, const Collection& second, const CheckOptions& options) {
  if (!check_strongly_exceptional(first, options).pass) {
    throw ToricError(ErrorCode::InputNotStronglyExceptional, "first factor collection");
  }
  if (!check_strongly_exceptional(second, options).pass) {
    throw ToricError(ErrorCode::InputNotStronglyExceptional, "second factor collection");
  }
  FanPtr fan = product_fan(first.fan(), second.fan());
  std::vector<TorusDivisor> bundles;
  for (const auto& f : second.bundles()) {
    for (const auto& e : first.bundles()) bundles.push_back(box_product(fan, e, f));
  }
  return {fan, Collection(fan, std::move(bundles))};
}

Collection fibration_collection(const FibrationData& fibration, const Collection& fiber_collection,
                                const Collection& base_collection, const TorusDivisor& twist) {
  if (!same_fan(fibration.base, base_collection.fan_ptr())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "base collection is not on the base fan");
  }
  if (!same_fan(fibration.base, twist.fan_ptr())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "twist divisor is not on the base fan");
  }
  if (!same_fan(fibration.fiber, fiber_collection.fan_ptr()) &&
      !fans_isomorphic(*fibration.fiber, fiber_collection.fan())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "fiber collection is not on the fiber fan");
  }
  std::vector<TorusDivisor> lifts;
  for (const auto& l : fiber_collection.bundles()) lifts.push_back(lift_fiber_divisor(fibration, l));

  std::vector<TorusDivisor> bundles;
  bundles.reserve(fiber_collection.size() * base_collection.size());
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    const TorusDivisor block_twist = static_cast<Int>(k + 1) * twist;
    for (const auto& e : base_collection.bundles()) {
      bundles.push_back(pullback(fibration.projection, e + block_twist) + lifts[k]);
    }
  }
  return Collection(fibration.total, std::move(bundles));
}

TwistSearchResult twist_search(const FibrationData& fibration, const Collection& fiber_collection,
                               const Collection& base_collection, const TorusDivisor& ample,
                               Int k_max, const CheckOptions& options) {
  if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");
  if (!same_fan(fibration.base, ample.fan_ptr())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "ample divisor is not on the base fan");
  }
  if (!is_ample(ample)) throw ToricError(ErrorCode::NotAmple, "twist divisor is not ample on the base");

  std::optional<CheckReport> best;
  Int best_k = 0;
  for (Int k = 0; k <= k_max; ++k) {
    const TorusDivisor d = k * ample;
    Collection c = fibration_collection(fibration, fiber_collection, base_collection, d);
    CheckReport report = check_strongly_exceptional(c, options);
    if (report.pass) return {k, d, std::move(c), std::move(report)};
    if (!best || report.violations.size() < best->violations.size()) {
      best = std::move(report);
      best_k = k;
    }
  }
  throw SearchExhaustedError(k_max, best_k, std::move(*best));
}

std::optional<TorusDivisor> find_ample(const FanPtr& fan, Int max_coeff) {
  const std::size_t n = fan->num_rays();
  const Int max_sum = max_coeff * static_cast<Int>(n);
  for (Int sum = 0; sum <= max_sum; ++sum) {
    // Lexicographic enumeration of vectors in [0, max_coeff]^n with the given sum.
    IntVector c(n, 0);
    auto recurse = [&](auto&& self, std::size_t i, Int remaining) -> std::optional<TorusDivisor> {
      if (i + 1 == n) {
        if (remaining > max_coeff) return std::nullopt;
        c[i] = remaining;
        TorusDivisor d(fan, c);
        if (is_ample(d)) return d;
        return std::nullopt;
      }
      for (Int x = 0; x <= std::min(max_coeff, remaining); ++x) {
        c[i] = x;
        if (auto d = self(self, i + 1, remaining - x)) return d;
      }
      return std::nullopt;
    };
    if (n == 0) {
      TorusDivisor d(fan, c);
      return is_ample(d) ? std::optional<TorusDivisor>(d) : std::nullopt;
    }
    if (auto d = recurse(recurse, 0, sum)) return d;
  }
  return std::nullopt;
}

}  // namespace toricsec
