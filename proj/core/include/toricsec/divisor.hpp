#pragma once

// Torus-invariant divisors as line-bundle representatives. Every check in
// the library is invariant under linear equivalence, so no Picard basis is
// ever computed.

#include <optional>
#include <span>
#include <vector>

#include "toricsec/fan.hpp"
#include "toricsec/linalg.hpp"

namespace toricsec {

/// Integer combination sum_rho a_rho D_rho of the prime invariant divisors.
class TorusDivisor {
 public:
  /// Throws DivisorFanMismatch if the coefficient count differs from the ray count.
  TorusDivisor(FanPtr fan, IntVector coeffs);

  static TorusDivisor zero(FanPtr fan);
  /// multiple * D_ray
  static TorusDivisor prime(FanPtr fan, std::size_t ray, Int multiple = 1);

  const Fan& fan() const { return *fan_; }
  const FanPtr& fan_ptr() const { return fan_; }
  const IntVector& coeffs() const { return coeffs_; }
  Int coeff(std::size_t ray) const { return coeffs_[ray]; }
  bool is_zero() const;

  TorusDivisor operator+(const TorusDivisor& rhs) const;
  TorusDivisor operator-(const TorusDivisor& rhs) const;
  TorusDivisor operator-() const;
  friend TorusDivisor operator*(Int k, const TorusDivisor& d);

  friend bool operator==(const TorusDivisor& a, const TorusDivisor& b);

 private:
  FanPtr fan_;
  IntVector coeffs_;
};

/// True when both pointers name the same fan or equal fans.
bool same_fan(const FanPtr& a, const FanPtr& b);

/// Local trivialization data: one weight m_sigma per maximal cone with
/// <m_sigma, v_rho> = -a_rho for every ray rho of sigma.
struct CartierData {
  FanPtr fan;
  std::vector<IntVector> weights;
};

/// Requires a smooth fan (throws NonSmoothFan otherwise).
CartierData cartier_data(const TorusDivisor& divisor);

/// Support function psi_D(point) = <m_sigma, point> for a cone sigma
/// containing the point. Throws PointOutsideFan if no maximal cone does.
Int support_eval(const CartierData& cd, std::span<const Int> point);

/// Strict convexity of the support function: for every maximal cone sigma and
/// every ray rho outside it, <m_sigma, v_rho> > -a_rho.
bool is_ample(const TorusDivisor& divisor);

/// A weight m with a1_rho - a2_rho = <m, v_rho> for all rays, if one exists.
std::optional<IntVector> linearly_equivalent(const TorusDivisor& d1, const TorusDivisor& d2);

/// K = -sum_rho D_rho.
TorusDivisor canonical_divisor(const FanPtr& fan);

/// Lattice map between fans compatible with their cones.
class ToricMorphism {
 public:
  /// Throws MalformedMorphism on shape mismatch and ConeNotMapped if the image
  /// of some source maximal cone lies in no target maximal cone.
  ToricMorphism(FanPtr source, FanPtr target, IntMatrix matrix);

  const FanPtr& source() const { return source_; }
  const FanPtr& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }
  /// For each source maximal cone, a target maximal cone containing its image.
  const std::vector<std::size_t>& cone_images() const { return cone_images_; }

 private:
  FanPtr source_;
  FanPtr target_;
  IntMatrix matrix_;
  std::vector<std::size_t> cone_images_;
};

/// a'_rho = -psi_D(matrix * v_rho) for every source ray.
TorusDivisor pullback(const ToricMorphism& morphism, const TorusDivisor& divisor);

struct FibrationData;

/// Transports fiber coefficients onto the corresponding kernel rays of the
/// total fan; every other ray gets 0. Throws FiberRayMismatch if the divisor
/// does not live on the fibration's fiber fan.
TorusDivisor lift_fiber_divisor(const FibrationData& fibration, const TorusDivisor& fiber_divisor);

/// Inverse of the lift on kernel rays: reads off the coefficients of the
/// total-space rays that correspond to fiber rays.
TorusDivisor restrict_to_fiber(const FibrationData& fibration, const TorusDivisor& total_divisor);

}  // namespace toricsec
