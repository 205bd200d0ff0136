#include "toricsec/divisor.hpp"

#include <algorithm>

#include "toricsec/error.hpp"
#include "toricsec/fibration.hpp"

namespace toricsec {

namespace {

void require_same_fan(const TorusDivisor& a, const TorusDivisor& b) {
  if (!same_fan(a.fan_ptr(), b.fan_ptr())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "divisors live on different fans");
  }
}

// Solves <m, v_rho> = rhs_rho for the rays of maximal cone `cone`; nullopt if
// the solution is not integral.
std::optional<IntVector> solve_on_cone(const Fan& fan, std::size_t cone, const IntVector& rhs) {
  const IntMatrix& coords = fan.cone_coordinates(cone);  // adj(B^T)
  const Int det = fan.cone_determinant(cone);
  const std::size_t n = static_cast<std::size_t>(fan.rank());
  // m = B^{-1} rhs = adj(B^T)^T rhs / det
  IntVector m(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t k = 0; k < n; ++k) s += coords(k, i) * rhs[k];
    if (s % det != 0) return std::nullopt;
    m[i] = s / det;
  }
  return m;
}

}  // namespace

TorusDivisor::TorusDivisor(FanPtr fan, IntVector coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != fan_->num_rays()) {
    throw ToricError(ErrorCode::DivisorFanMismatch,
                     "divisor has " + std::to_string(coeffs_.size()) + " coefficients but the fan has " +
                         std::to_string(fan_->num_rays()) + " rays");
  }
}

TorusDivisor TorusDivisor::zero(FanPtr fan) {
  const std::size_t n = fan->num_rays();
  return TorusDivisor(std::move(fan), IntVector(n, 0));
}

TorusDivisor TorusDivisor::prime(FanPtr fan, std::size_t ray, Int multiple) {
  TorusDivisor d = zero(std::move(fan));
  d.coeffs_.at(ray) = multiple;
  return d;
}

bool TorusDivisor::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int x) { return x == 0; });
}

TorusDivisor TorusDivisor::operator+(const TorusDivisor& rhs) const {
  require_same_fan(*this, rhs);
  IntVector c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
  return TorusDivisor(fan_, std::move(c));
}

TorusDivisor TorusDivisor::operator-(const TorusDivisor& rhs) const { return *this + (-rhs); }

TorusDivisor TorusDivisor::operator-() const { return -1 * *this; }

TorusDivisor operator*(Int k, const TorusDivisor& d) {
  IntVector c = d.coeffs_;
  for (auto& x : c) x *= k;
  return TorusDivisor(d.fan_, std::move(c));
}

bool operator==(const TorusDivisor& a, const TorusDivisor& b) {
  return same_fan(a.fan_, b.fan_) && a.coeffs_ == b.coeffs_;
}

bool same_fan(const FanPtr& a, const FanPtr& b) { return a == b || (a && b && *a == *b); }

CartierData cartier_data(const TorusDivisor& divisor) {
  const Fan& fan = divisor.fan();
  CartierData cd{divisor.fan_ptr(), {}};
  cd.weights.reserve(fan.num_max_cones());
  for (std::size_t c = 0; c < fan.num_max_cones(); ++c) {
    IntVector rhs;
    for (std::size_t r : fan.max_cones()[c]) rhs.push_back(-divisor.coeff(r));
    auto m = solve_on_cone(fan, c, rhs);
    if (!m) {
      throw ToricError(ErrorCode::NonSmoothFan,
                       "divisor is not Cartier on cone " + std::to_string(c));
    }
    cd.weights.push_back(std::move(*m));
  }
  return cd;
}

Int support_eval(const CartierData& cd, std::span<const Int> point) {
  const auto cone = cd.fan->containing_cone(point);
  if (!cone) throw ToricError(ErrorCode::PointOutsideFan, "point lies in no maximal cone");
  return dot(cd.weights[*cone], point);
}

bool is_ample(const TorusDivisor& divisor) {
  const Fan& fan = divisor.fan();
  const CartierData cd = cartier_data(divisor);
  for (std::size_t c = 0; c < fan.num_max_cones(); ++c) {
    for (std::size_t r = 0; r < fan.num_rays(); ++r) {
      if (fan.cone_mask(c) & (RayMask{1} << r)) continue;
      if (dot(cd.weights[c], fan.ray(r)) <= -divisor.coeff(r)) return false;
    }
  }
  return true;
}

std::optional<IntVector> linearly_equivalent(const TorusDivisor& d1, const TorusDivisor& d2) {
  require_same_fan(d1, d2);
  const Fan& fan = d1.fan();
  IntVector rhs;
  for (std::size_t r : fan.max_cones()[0]) rhs.push_back(d1.coeff(r) - d2.coeff(r));
  auto m = solve_on_cone(fan, 0, rhs);
  if (!m) return std::nullopt;
  for (std::size_t r = 0; r < fan.num_rays(); ++r) {
    if (dot(*m, fan.ray(r)) != d1.coeff(r) - d2.coeff(r)) return std::nullopt;
  }
  return m;
}

TorusDivisor canonical_divisor(const FanPtr& fan) {
  return TorusDivisor(fan, IntVector(fan->num_rays(), -1));
}

ToricMorphism::ToricMorphism(FanPtr source, FanPtr target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != static_cast<std::size_t>(target_->rank()) ||
      matrix_.cols() != static_cast<std::size_t>(source_->rank())) {
    throw ToricError(ErrorCode::MalformedMorphism,
                     "matrix must have " + std::to_string(target_->rank()) + " rows and " +
                         std::to_string(source_->rank()) + " columns");
  }
  for (std::size_t c = 0; c < source_->num_max_cones(); ++c) {
    std::vector<IntVector> images;
    for (std::size_t r : source_->max_cones()[c]) images.push_back(matrix_.apply(source_->ray(r)));
    std::optional<std::size_t> hit;
    for (std::size_t t = 0; t < target_->num_max_cones() && !hit; ++t) {
      if (std::all_of(images.begin(), images.end(),
                      [&](const IntVector& v) { return target_->cone_contains(t, v); })) {
        hit = t;
      }
    }
    if (!hit) {
      throw ToricError(ErrorCode::ConeNotMapped,
                       "image of source cone " + std::to_string(c) + " lies in no target cone");
    }
    cone_images_.push_back(*hit);
  }
}

TorusDivisor pullback(const ToricMorphism& morphism, const TorusDivisor& divisor) {
  if (!same_fan(morphism.target(), divisor.fan_ptr())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "divisor is not on the morphism's target fan");
  }
  const CartierData cd = cartier_data(divisor);
  const Fan& src = *morphism.source();
  IntVector coeffs(src.num_rays());
  for (std::size_t r = 0; r < src.num_rays(); ++r) {
    coeffs[r] = -support_eval(cd, morphism.matrix().apply(src.ray(r)));
  }
  return TorusDivisor(morphism.source(), std::move(coeffs));
}

TorusDivisor lift_fiber_divisor(const FibrationData& fibration, const TorusDivisor& fiber_divisor) {
  if (!same_fan(fibration.fiber, fiber_divisor.fan_ptr()) &&
      !fans_isomorphic(*fibration.fiber, fiber_divisor.fan())) {
    throw ToricError(ErrorCode::FiberRayMismatch,
                     "divisor fan does not match the fibration's fiber fan");
  }
  IntVector coeffs(fibration.total->num_rays(), 0);
  for (std::size_t i = 0; i < fibration.fiber_to_total.size(); ++i) {
    coeffs[fibration.fiber_to_total[i]] = fiber_divisor.coeff(i);
  }
  return TorusDivisor(fibration.total, std::move(coeffs));
}

TorusDivisor restrict_to_fiber(const FibrationData& fibration, const TorusDivisor& total_divisor) {
  if (!same_fan(fibration.total, total_divisor.fan_ptr())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "divisor is not on the total fan");
  }
  IntVector coeffs;
  for (std::size_t r : fibration.fiber_to_total) coeffs.push_back(total_divisor.coeff(r));
  return TorusDivisor(fibration.fiber, std::move(coeffs));
}

}  // namespace toricsec
