#pragma once

// Simplicial fans of full-dimensional cones: the combinatorial model of a
// toric variety. Only maximal cones are stored; faces are derived on demand.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "toricsec/linalg.hpp"

namespace toricsec {

/// The ambient lattice N = Z^rank.
struct Lattice {
  int rank = 0;
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Sorted ray indices of a cone.
using Cone = std::vector<std::size_t>;

/// Bitmask over ray indices. Fans are limited to 64 rays.
using RayMask = std::uint64_t;
inline constexpr std::size_t kMaxRays = 64;

/// Unvalidated fan description, exactly as read from input.
struct RawFan {
  int rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<Int>> max_cones;
};

class Fan;
using FanPtr = std::shared_ptr<const Fan>;

/// A validated simplicial fan. Immutable; share it through FanPtr.
class Fan {
 public:
  /// The fan of a point: rank 0, no rays, one empty maximal cone. Used as the
  /// base or fiber of degenerate fibrations.
  static FanPtr point();

  const Lattice& lattice() const { return lattice_; }
  int rank() const { return lattice_.rank; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_[i]; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  std::size_t num_max_cones() const { return max_cones_.size(); }
  RayMask cone_mask(std::size_t cone) const { return cone_masks_[cone]; }

  /// Determinant of the matrix whose rows are the rays of a maximal cone.
  Int cone_determinant(std::size_t cone) const { return cone_dets_[cone]; }
  /// Adjugate of the transposed ray matrix: the coordinates of a point p in
  /// the cone's ray basis are cone_coordinates(c).apply(p) / cone_determinant(c).
  const IntMatrix& cone_coordinates(std::size_t cone) const { return cone_coords_[cone]; }

  /// Index of the first maximal cone containing `point`, if any.
  std::optional<std::size_t> containing_cone(std::span<const Int> point) const;
  bool cone_contains(std::size_t cone, std::span<const Int> point) const;

  RawFan raw() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.lattice_ == b.lattice_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
  }

 private:
  friend FanPtr validate_fan(const RawFan& raw);
  Fan() = default;

  Lattice lattice_;
  std::vector<IntVector> rays_;
  std::vector<Cone> max_cones_;
  std::vector<RayMask> cone_masks_;
  std::vector<Int> cone_dets_;
  std::vector<IntMatrix> cone_coords_;
};

/// A codimension-one face shared by two maximal cones.
struct Wall {
  Cone ray_set;
  std::pair<std::size_t, std::size_t> adjacent;
  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Checks every fan invariant and returns the validated fan. Throws ToricError
/// naming the first violated invariant: MalformedFan, NonPrimitiveRay,
/// DuplicateRay, DegenerateCone or NonFaceIntersection.
FanPtr validate_fan(const RawFan& raw);

/// Every maximal cone is generated by a lattice basis.
bool is_smooth(const Fan& fan);

/// Every codimension-one face of a maximal cone lies in exactly two maximal
/// cones and the cones are connected through walls.
bool is_complete(const Fan& fan);

/// One wall per shared codimension-one face. Throws IncompleteFan when some
/// face does not have exactly two neighbours.
std::vector<Wall> walls(const Fan& fan);

/// Throws NonSmoothFan / IncompleteFan unless the fan is both.
void require_smooth_complete(const Fan& fan);

/// Same rank and ray count, identical maximal cones, and a unimodular change
/// of basis carrying ray i of `a` to ray i of `b`.
bool fans_isomorphic(const Fan& a, const Fan& b);

}  // namespace toricsec
