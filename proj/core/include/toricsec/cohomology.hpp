#pragma once

// Exact sheaf cohomology of toric line bundles.
//
// For a divisor D = sum a_rho D_rho and a weight m in M, the m-graded piece
// of H^p(X, O(D)) has dimension dim H~^{p-1}(V_{D,m}) where V_{D,m} is the
// simplicial complex of ray sets S, contained in some cone, with
// <m, v_rho> < -a_rho for every rho in S. Reduced cohomology is taken over Q
// with the convention H~^{-1}(empty complex) = Q.
//
// Only weights inside the bounding box of the Cartier data points can
// contribute: outside their convex hull the negative region of the support
// function is a nonempty cone closed under adding a fixed direction, hence
// contractible.

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "toricsec/divisor.hpp"
#include "toricsec/fan.hpp"

namespace toricsec {

/// h^0 .. h^rank.
struct CohomologyTable {
  std::vector<Int> dims;

  std::size_t size() const { return dims.size(); }
  Int operator[](std::size_t p) const { return dims[p]; }
  bool is_zero() const;
  /// [1, 0, ..., 0]
  bool is_unit() const;
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

struct WeightBox {
  IntVector lower;
  IntVector upper;
  bool empty = false;

  std::size_t rank() const { return lower.size(); }
  /// Number of lattice points; saturates at SIZE_MAX.
  std::size_t count() const;
  bool contains(std::span<const Int> m) const;
  WeightBox enlarged(Int margin) const;
  friend bool operator==(const WeightBox&, const WeightBox&) = default;
};

/// Faces are stored as ray masks, excluding the empty face, sorted by size
/// and then by mask value.
struct SupportComplex {
  std::vector<std::size_t> vertices;
  std::vector<RayMask> faces;
  friend bool operator==(const SupportComplex&, const SupportComplex&) = default;
};

/// Memo of reduced cohomology keyed by the set of negative rays. Values only
/// depend on the fan, so one cache may serve many divisors on the same fan.
/// Not synchronized: use one cache per thread.
class ComplexCache {
 public:
  explicit ComplexCache(FanPtr fan) : fan_(std::move(fan)) {}
  const FanPtr& fan() const { return fan_; }
  /// H~^{-1} .. H~^{rank-1} of the complex on `negative` rays.
  const std::vector<Int>& reduced(RayMask negative);
  std::size_t size() const { return memo_.size(); }

 private:
  FanPtr fan_;
  std::unordered_map<RayMask, std::vector<Int>> memo_;
};

struct CohomologyOptions {
  /// Extra lattice layers added around the weight box in every direction.
  Int box_margin = 0;
  /// Optional memo for the fan of the divisor; a private one is used if null.
  ComplexCache* cache = nullptr;
};

WeightBox weight_box(const TorusDivisor& divisor);

SupportComplex support_complex(const TorusDivisor& divisor, std::span<const Int> weight);

/// The complex generated by all cone-subsets of `negative`.
SupportComplex complex_on_rays(const Fan& fan, RayMask negative);

/// Dimensions of H~^{-1} .. H~^{top} over Q (top + 2 entries).
std::vector<Int> reduced_cohomology_dims(const SupportComplex& complex, int top);

CohomologyTable cohomology_dims(const TorusDivisor& divisor, const CohomologyOptions& options = {});

/// Ext^k(from, to) = H^k(X, to - from) for line bundles.
CohomologyTable ext_dims(const TorusDivisor& from, const TorusDivisor& to,
                         const CohomologyOptions& options = {});

Int euler_char(const TorusDivisor& divisor);

}  // namespace toricsec
