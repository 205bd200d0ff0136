#pragma once

#include <cstddef>
#include <vector>

#include "toricsec/divisor.hpp"
#include "toricsec/fan.hpp"

namespace toricsec {

/// A toric morphism X -> Z together with its fiber F, read off from the
/// kernel of the lattice map.
struct FibrationData {
  FanPtr total;
  FanPtr base;
  ToricMorphism projection;
  FanPtr fiber;
  /// Columns: basis of the kernel sublattice in total-lattice coordinates.
  /// Fiber ray i equals fiber_basis * (fiber ray vector i).
  IntMatrix fiber_basis;
  /// Total-fan index of each fiber ray, increasing.
  std::vector<std::size_t> fiber_to_total;
  /// Every base maximal cone has a total cone mapping its rays bijectively
  /// onto the base cone's rays. A sufficient combinatorial stand-in for
  /// Zariski local triviality; failure means "unverified", not "false".
  bool locally_trivial_certified = false;
  std::vector<std::size_t> uncovered_base_cones;
};

/// Builds the fibration structure. Both fans must be smooth and complete.
/// Throws MalformedMorphism (shape, or matrix not of full row rank),
/// ConeNotMapped, or FiberNotSmoothComplete. A failed local-triviality
/// certificate is reported in the result, not thrown.
FibrationData validate_fibration(const FanPtr& total, const FanPtr& base, const IntMatrix& projection);

}  // namespace toricsec
