#include "toricsec/fan.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "toricsec/error.hpp"

namespace toricsec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::DuplicateRay: return "DuplicateRay";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::NonFaceIntersection: return "NonFaceIntersection";
    case ErrorCode::IncompleteFan: return "IncompleteFan";
    case ErrorCode::NonSmoothFan: return "NonSmoothFan";
    case ErrorCode::PointOutsideFan: return "PointOutsideFan";
    case ErrorCode::FanMismatch: return "FanMismatch";
    case ErrorCode::ConeNotMapped: return "ConeNotMapped";
    case ErrorCode::MalformedMorphism: return "MalformedMorphism";
    case ErrorCode::FiberNotSmoothComplete: return "FiberNotSmoothComplete";
    case ErrorCode::FiberRayMismatch: return "FiberRayMismatch";
    case ErrorCode::DivisorFanMismatch: return "DivisorFanMismatch";
    case ErrorCode::InputNotStronglyExceptional: return "InputNotStronglyExceptional";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
  }
  return "UnknownError";
}

namespace {

std::string vec_str(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

RayMask mask_of(const Cone& cone) {
  RayMask m = 0;
  for (std::size_t r : cone) m |= RayMask{1} << r;
  return m;
}

IntMatrix cone_matrix(const std::vector<IntVector>& rays, const Cone& cone, int rank) {
  IntMatrix m(cone.size(), static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < cone.size(); ++i) {
    for (int c = 0; c < rank; ++c) m(i, c) = rays[cone[i]][c];
  }
  return m;
}

// Maps each codimension-one face mask to the maximal cones containing it.
std::map<RayMask, std::vector<std::size_t>> facet_neighbours(const Fan& fan) {
  std::map<RayMask, std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < fan.num_max_cones(); ++c) {
    const RayMask cm = fan.cone_mask(c);
    for (std::size_t r : fan.max_cones()[c]) out[cm & ~(RayMask{1} << r)];
  }
  for (auto& [face, cones] : out) {
    for (std::size_t c = 0; c < fan.num_max_cones(); ++c) {
      if ((fan.cone_mask(c) & face) == face) cones.push_back(c);
    }
  }
  return out;
}

}  // namespace

FanPtr Fan::point() {
  static const FanPtr pt = [] {
    auto f = std::shared_ptr<Fan>(new Fan());
    f->max_cones_ = {Cone{}};
    f->cone_masks_ = {0};
    f->cone_dets_ = {1};
    f->cone_coords_ = {IntMatrix(0, 0)};
    return FanPtr(std::move(f));
  }();
  return pt;
}

bool Fan::cone_contains(std::size_t cone, std::span<const Int> point) const {
  const IntVector lambda = cone_coords_[cone].apply(point);
  const Int d = cone_dets_[cone];
  return std::all_of(lambda.begin(), lambda.end(),
                     [d](Int x) { return d > 0 ? x >= 0 : x <= 0; });
}

std::optional<std::size_t> Fan::containing_cone(std::span<const Int> point) const {
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    if (cone_contains(c, point)) return c;
  }
  return std::nullopt;
}

RawFan Fan::raw() const {
  RawFan raw{rank(), rays_, {}};
  for (const auto& cone : max_cones_) raw.max_cones.emplace_back(cone.begin(), cone.end());
  return raw;
}

FanPtr validate_fan(const RawFan& raw) {
  const int n = raw.rank;
  if (n < 1) throw ToricError(ErrorCode::MalformedFan, "rank must be at least 1");
  if (raw.rays.size() > kMaxRays) {
    throw ToricError(ErrorCode::MalformedFan, "at most 64 rays are supported");
  }
  for (std::size_t i = 0; i < raw.rays.size(); ++i) {
    const auto& v = raw.rays[i];
    if (v.size() != static_cast<std::size_t>(n)) {
      throw ToricError(ErrorCode::MalformedFan,
                       "ray " + std::to_string(i) + " has length " + std::to_string(v.size()) +
                           ", expected " + std::to_string(n));
    }
    const Int g = gcd_of(v);
    if (g != 1) {
      throw ToricError(ErrorCode::NonPrimitiveRay,
                       "ray " + std::to_string(i) + " " + vec_str(v) +
                           (g == 0 ? " is zero" : " has gcd " + std::to_string(g)));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (raw.rays[j] == v) {
        throw ToricError(ErrorCode::DuplicateRay, "rays " + std::to_string(j) + " and " +
                                                      std::to_string(i) + " are both " +
                                                      vec_str(v));
      }
    }
  }
  if (raw.max_cones.empty()) throw ToricError(ErrorCode::MalformedFan, "no maximal cones");

  auto fan = std::shared_ptr<Fan>(new Fan());
  fan->lattice_ = Lattice{n};
  fan->rays_ = raw.rays;

  RayMask used = 0;
  for (std::size_t c = 0; c < raw.max_cones.size(); ++c) {
    const auto& idx = raw.max_cones[c];
    Cone cone;
    for (Int r : idx) {
      if (r < 0 || static_cast<std::size_t>(r) >= raw.rays.size()) {
        throw ToricError(ErrorCode::MalformedFan, "cone " + std::to_string(c) +
                                                      " references missing ray " +
                                                      std::to_string(r));
      }
      cone.push_back(static_cast<std::size_t>(r));
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      throw ToricError(ErrorCode::DegenerateCone,
                       "cone " + std::to_string(c) + " repeats a ray index");
    }
    if (cone.size() != static_cast<std::size_t>(n)) {
      throw ToricError(ErrorCode::DegenerateCone, "cone " + std::to_string(c) + " has " +
                                                      std::to_string(cone.size()) +
                                                      " rays, expected " + std::to_string(n));
    }
    const IntMatrix b = cone_matrix(raw.rays, cone, n);
    const Int det = determinant(b);
    if (det == 0) {
      throw ToricError(ErrorCode::DegenerateCone,
                       "cone " + std::to_string(c) + " has linearly dependent rays");
    }
    const RayMask m = mask_of(cone);
    for (std::size_t prev = 0; prev < fan->cone_masks_.size(); ++prev) {
      if (fan->cone_masks_[prev] == m) {
        throw ToricError(ErrorCode::MalformedFan, "cones " + std::to_string(prev) + " and " +
                                                      std::to_string(c) + " are equal");
      }
    }
    used |= m;
    fan->max_cones_.push_back(std::move(cone));
    fan->cone_masks_.push_back(m);
    fan->cone_dets_.push_back(det);
    fan->cone_coords_.push_back(adjugate(b.transposed()));
  }
  for (std::size_t i = 0; i < raw.rays.size(); ++i) {
    if (!(used & (RayMask{1} << i))) {
      throw ToricError(ErrorCode::MalformedFan,
                       "ray " + std::to_string(i) + " lies in no maximal cone");
    }
  }

  // Proper intersection: for simplicial cones sharing the rays C, the
  // intersection is the common face cone(C) iff some linear form vanishes on
  // C, is positive on the rest of one cone and negative on the rest of the other.
  const auto& cones = fan->max_cones_;
  for (std::size_t a = 0; a < cones.size(); ++a) {
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      std::vector<IntVector> zero, positive;
      for (std::size_t r : cones[a]) {
        if (fan->cone_masks_[b] & (RayMask{1} << r)) zero.push_back(raw.rays[r]);
        else positive.push_back(raw.rays[r]);
      }
      for (std::size_t r : cones[b]) {
        if (fan->cone_masks_[a] & (RayMask{1} << r)) continue;
        IntVector neg = raw.rays[r];
        for (auto& x : neg) x = -x;
        positive.push_back(std::move(neg));
      }
      if (!homogeneous_feasible(static_cast<std::size_t>(n), zero, positive)) {
        throw ToricError(ErrorCode::NonFaceIntersection,
                         "cones " + std::to_string(a) + " and " + std::to_string(b) +
                             " do not meet in a common face");
      }
    }
  }
  return fan;
}

bool is_smooth(const Fan& fan) {
  for (std::size_t c = 0; c < fan.num_max_cones(); ++c) {
    const Int d = fan.cone_determinant(c);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool is_complete(const Fan& fan) {
  if (fan.rank() == 0) return true;
  const auto neighbours = facet_neighbours(fan);
  for (const auto& [face, cones] : neighbours) {
    if (cones.size() != 2) return false;
  }
  // Connectivity through walls.
  std::vector<bool> seen(fan.num_max_cones(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    for (const auto& [face, cones] : neighbours) {
      if (cones[0] != c && cones[1] != c) continue;
      const std::size_t other = cones[0] == c ? cones[1] : cones[0];
      if (!seen[other]) {
        seen[other] = true;
        ++reached;
        stack.push_back(other);
      }
    }
  }
  return reached == fan.num_max_cones();
}

std::vector<Wall> walls(const Fan& fan) {
  std::vector<Wall> out;
  if (fan.rank() == 0) return out;
  const auto neighbours = facet_neighbours(fan);
  std::set<RayMask> emitted;
  for (std::size_t c = 0; c < fan.num_max_cones(); ++c) {
    for (std::size_t r : fan.max_cones()[c]) {
      const RayMask face = fan.cone_mask(c) & ~(RayMask{1} << r);
      if (!emitted.insert(face).second) continue;
      const auto& cones = neighbours.at(face);
      if (cones.size() != 2) {
        throw ToricError(ErrorCode::IncompleteFan,
                         "a face of cone " + std::to_string(c) + " has " +
                             std::to_string(cones.size()) + " neighbouring cones");
      }
      Cone rays;
      for (std::size_t i = 0; i < fan.num_rays(); ++i) {
        if (face & (RayMask{1} << i)) rays.push_back(i);
      }
      out.push_back(Wall{std::move(rays), {cones[0], cones[1]}});
    }
  }
  return out;
}

void require_smooth_complete(const Fan& fan) {
  if (!is_smooth(fan)) throw ToricError(ErrorCode::NonSmoothFan, "fan is not smooth");
  if (!is_complete(fan)) throw ToricError(ErrorCode::IncompleteFan, "fan is not complete");
}

bool fans_isomorphic(const Fan& a, const Fan& b) {
  if (a.rank() != b.rank() || a.num_rays() != b.num_rays()) return false;
  auto sorted_cones = [](const Fan& f) {
    auto cs = f.max_cones();
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  if (sorted_cones(a) != sorted_cones(b)) return false;
  if (a.rank() == 0) return true;

  // U * (rays of a's first cone as columns) = (same rays of b as columns).
  const Cone& base = a.max_cones()[0];
  const auto n = static_cast<std::size_t>(a.rank());
  IntMatrix ca(n, n), cb(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      ca(r, i) = a.ray(base[i])[r];
      cb(r, i) = b.ray(base[i])[r];
    }
  }
  const Int det = determinant(ca);
  IntMatrix scaled = cb * adjugate(ca);
  IntMatrix u(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (scaled(r, c) % det != 0) return false;
      u(r, c) = scaled(r, c) / det;
    }
  }
  const Int du = determinant(u);
  if (du != 1 && du != -1) return false;
  for (std::size_t i = 0; i < a.num_rays(); ++i) {
    if (u.apply(a.ray(i)) != b.ray(i)) return false;
  }
  return true;
}

}  // namespace toricsec
