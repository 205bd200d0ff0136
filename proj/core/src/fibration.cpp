#include "toricsec/fibration.hpp"

#include <algorithm>
#include <set>

#include "toricsec/error.hpp"

namespace toricsec {

namespace {

// Integer coordinates of v in the column basis `basis` of a saturated sublattice.
IntVector sublattice_coordinates(const IntMatrix& basis, const IntVector& v) {
  const IntMatrix bt = basis.transposed();
  const IntMatrix gram = bt * basis;
  const Int det = determinant(gram);
  const IntVector rhs = bt.apply(v);
  IntVector c = adjugate(gram).apply(rhs);
  for (auto& x : c) {
    if (x % det != 0) {
      throw ToricError(ErrorCode::MalformedMorphism, "kernel ray is not in the kernel lattice");
    }
    x /= det;
  }
  return c;
}

}  // namespace

FibrationData validate_fibration(const FanPtr& total, const FanPtr& base, const IntMatrix& projection) {
  require_smooth_complete(*total);
  require_smooth_complete(*base);
  ToricMorphism phi(total, base, projection);
  const auto n = static_cast<std::size_t>(total->rank());
  const auto b = static_cast<std::size_t>(base->rank());
  if (rank(projection) != b) {
    throw ToricError(ErrorCode::MalformedMorphism, "projection matrix does not have full row rank");
  }
  const std::size_t f = n - b;

  std::vector<std::size_t> kernel_rays;
  for (std::size_t r = 0; r < total->num_rays(); ++r) {
    const IntVector img = projection.apply(total->ray(r));
    if (std::all_of(img.begin(), img.end(), [](Int x) { return x == 0; })) kernel_rays.push_back(r);
  }

  FibrationData fd{total, base, phi, Fan::point(), IntMatrix(n, 0), kernel_rays, false, {}};

  if (f > 0) {
    // Fiber cones: maximal sets of kernel rays lying in a common total cone.
    std::set<Cone> cone_set;
    for (const auto& cone : total->max_cones()) {
      Cone local;
      for (std::size_t i = 0; i < kernel_rays.size(); ++i) {
        if (std::binary_search(cone.begin(), cone.end(), kernel_rays[i])) local.push_back(i);
      }
      if (local.size() == f) cone_set.insert(local);
    }
    if (cone_set.empty()) {
      throw ToricError(ErrorCode::FiberNotSmoothComplete, "no total cone meets the kernel in a full-dimensional cone");
    }
    std::vector<Cone> fiber_cones(cone_set.begin(), cone_set.end());

    IntMatrix basis = kernel_basis(projection);
    std::vector<IntVector> coords;
    for (std::size_t r : kernel_rays) coords.push_back(sublattice_coordinates(basis, total->ray(r)));

    // Re-base the kernel on the first fiber cone so that its rays become the
    // standard basis whenever that cone is smooth.
    IntMatrix first(f, f);
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t r = 0; r < f; ++r) first(r, i) = coords[fiber_cones[0][i]][r];
    }
    if (auto inv = inverse_unimodular(first)) {
      basis = basis * first;
      for (auto& c : coords) c = inv->apply(c);
    }

    RawFan raw{static_cast<int>(f), coords, {}};
    for (const auto& cone : fiber_cones) raw.max_cones.emplace_back(cone.begin(), cone.end());
    try {
      fd.fiber = validate_fan(raw);
      require_smooth_complete(*fd.fiber);
    } catch (const ToricError& e) {
      throw ToricError(ErrorCode::FiberNotSmoothComplete, e.what());
    }
    fd.fiber_basis = std::move(basis);
  }

  for (std::size_t t = 0; t < base->num_max_cones(); ++t) {
    const Cone& target = base->max_cones()[t];
    bool covered = false;
    for (const auto& cone : total->max_cones()) {
      std::set<std::size_t> hit;
      for (std::size_t r : cone) {
        const IntVector img = projection.apply(total->ray(r));
        for (std::size_t br : target) {
          if (img == base->ray(br)) hit.insert(br);
        }
      }
      if (hit.size() == target.size()) {
        covered = true;
        break;
      }
    }
    if (!covered) fd.uncovered_base_cones.push_back(t);
  }
  fd.locally_trivial_certified = fd.uncovered_base_cones.empty();
  return fd;
}

}  // namespace toricsec
