#include "toricsec/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <unordered_set>

#include "toricsec/error.hpp"

namespace toricsec {

bool CohomologyTable::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](Int x) { return x == 0; });
}

bool CohomologyTable::is_unit() const {
  if (dims.empty() || dims[0] != 1) return false;
  return std::all_of(dims.begin() + 1, dims.end(), [](Int x) { return x == 0; });
}

std::size_t WeightBox::count() const {
  if (empty) return 0;
  std::size_t total = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const auto side = static_cast<std::size_t>(upper[i] - lower[i] + 1);
    if (total > std::numeric_limits<std::size_t>::max() / side) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= side;
  }
  return total;
}

bool WeightBox::contains(std::span<const Int> m) const {
  if (empty || m.size() != lower.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < lower[i] || m[i] > upper[i]) return false;
  }
  return true;
}

WeightBox WeightBox::enlarged(Int margin) const {
  if (empty) return *this;
  WeightBox out = *this;
  for (auto& x : out.lower) x -= margin;
  for (auto& x : out.upper) x += margin;
  return out;
}

namespace {

RayMask negative_mask(const Fan& fan, const TorusDivisor& d, std::span<const Int> m) {
  RayMask mask = 0;
  for (std::size_t r = 0; r < fan.num_rays(); ++r) {
    if (dot(m, fan.ray(r)) < -d.coeff(r)) mask |= RayMask{1} << r;
  }
  return mask;
}

// Distinct maximal faces N ∩ sigma of the complex on negative rays N.
std::vector<RayMask> generating_faces(const Fan& fan, RayMask negative) {
  std::vector<RayMask> gens;
  for (std::size_t c = 0; c < fan.num_max_cones(); ++c) {
    const RayMask g = negative & fan.cone_mask(c);
    if (g != 0) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<RayMask> maximal;
  for (RayMask g : gens) {
    const bool dominated = std::any_of(gens.begin(), gens.end(), [g](RayMask h) {
      return h != g && (h & g) == g;
    });
    if (!dominated) maximal.push_back(g);
  }
  return maximal;
}

std::vector<Int> reduced_from_faces(const std::vector<RayMask>& faces, int top) {
  // faces excludes the empty face; group by dimension.
  // Dimensions -1 .. top+1; the extra level supplies the rank of the top
  // coboundary.
  const int levels = top + 3;
  std::vector<std::vector<RayMask>> by_dim(static_cast<std::size_t>(levels));
  by_dim[0].push_back(0);
  for (RayMask f : faces) {
    const int dim = std::popcount(f) - 1;
    if (dim <= top + 1) by_dim[static_cast<std::size_t>(dim + 1)].push_back(f);
  }
  std::vector<std::map<RayMask, std::size_t>> index(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    for (std::size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = i;
  }

  // rank of the coboundary from level k to level k+1.
  std::vector<std::size_t> ranks(by_dim.size(), 0);
  for (std::size_t k = 0; k + 1 < by_dim.size(); ++k) {
    const auto& upper = by_dim[k + 1];
    const auto& lower = by_dim[k];
    if (upper.empty() || lower.empty()) continue;
    IntMatrix delta(upper.size(), lower.size());
    for (std::size_t i = 0; i < upper.size(); ++i) {
      const RayMask f = upper[i];
      Int sign = 1;
      for (RayMask rest = f; rest != 0; rest &= rest - 1) {
        const RayMask bit = rest & (~rest + 1);
        delta(i, index[k].at(f & ~bit)) = sign;
        sign = -sign;
      }
    }
    ranks[k] = rank(delta);
  }

  std::vector<Int> dims(by_dim.size() - 1);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const auto into = k == 0 ? std::size_t{0} : ranks[k - 1];
    dims[k] = static_cast<Int>(by_dim[k].size() - ranks[k] - into);
  }
  return dims;
}

std::vector<Int> reduced_for_mask(const Fan& fan, RayMask negative) {
  const int top = fan.rank() - 1;
  std::vector<Int> dims(static_cast<std::size_t>(top + 2), 0);
  if (negative == 0) {
    dims[0] = 1;
    return dims;
  }
  const auto gens = generating_faces(fan, negative);
  if (gens.size() == 1) return dims;  // a single simplex is contractible
  return reduced_from_faces(complex_on_rays(fan, negative).faces, top);
}

}  // namespace

const std::vector<Int>& ComplexCache::reduced(RayMask negative) {
  auto it = memo_.find(negative);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(negative, reduced_for_mask(*fan_, negative)).first->second;
}

WeightBox weight_box(const TorusDivisor& divisor) {
  const CartierData cd = cartier_data(divisor);
  const auto n = static_cast<std::size_t>(divisor.fan().rank());
  WeightBox box{IntVector(n, std::numeric_limits<Int>::max()),
                IntVector(n, std::numeric_limits<Int>::min()), false};
  for (const auto& m : cd.weights) {
    for (std::size_t i = 0; i < n; ++i) {
      box.lower[i] = std::min(box.lower[i], m[i]);
      box.upper[i] = std::max(box.upper[i], m[i]);
    }
  }
  return box;
}

SupportComplex complex_on_rays(const Fan& fan, RayMask negative) {
  std::unordered_set<RayMask> seen;
  for (RayMask g : generating_faces(fan, negative)) {
    for (RayMask sub = g; sub != 0; sub = (sub - 1) & g) seen.insert(sub);
  }
  SupportComplex k;
  k.faces.assign(seen.begin(), seen.end());
  std::sort(k.faces.begin(), k.faces.end(), [](RayMask a, RayMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::size_t r = 0; r < fan.num_rays(); ++r) {
    if (negative & (RayMask{1} << r)) k.vertices.push_back(r);
  }
  return k;
}

SupportComplex support_complex(const TorusDivisor& divisor, std::span<const Int> weight) {
  const Fan& fan = divisor.fan();
  if (weight.size() != static_cast<std::size_t>(fan.rank())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "weight has the wrong dimension");
  }
  return complex_on_rays(fan, negative_mask(fan, divisor, weight));
}

std::vector<Int> reduced_cohomology_dims(const SupportComplex& complex, int top) {
  return reduced_from_faces(complex.faces, top);
}

CohomologyTable cohomology_dims(const TorusDivisor& divisor, const CohomologyOptions& options) {
  const Fan& fan = divisor.fan();
  const auto n = static_cast<std::size_t>(fan.rank());
  const std::size_t nrays = fan.num_rays();
  const WeightBox box = weight_box(divisor).enlarged(options.box_margin);

  // Walk the box as an odometer, keeping <m, v_rho> + a_rho up to date, and
  // count how many weights produce each negative-ray set.
  std::unordered_map<RayMask, Int> multiplicity;
  IntVector m = box.lower;
  IntVector slack(nrays);
  for (std::size_t r = 0; r < nrays; ++r) slack[r] = dot(m, fan.ray(r)) + divisor.coeff(r);
  while (true) {
    RayMask mask = 0;
    for (std::size_t r = 0; r < nrays; ++r) {
      if (slack[r] < 0) mask |= RayMask{1} << r;
    }
    ++multiplicity[mask];

    std::size_t i = 0;
    for (; i < n; ++i) {
      if (m[i] < box.upper[i]) {
        ++m[i];
        for (std::size_t r = 0; r < nrays; ++r) slack[r] += fan.ray(r)[i];
        break;
      }
      const Int width = m[i] - box.lower[i];
      m[i] = box.lower[i];
      for (std::size_t r = 0; r < nrays; ++r) slack[r] -= width * fan.ray(r)[i];
    }
    if (i == n) break;
  }

  ComplexCache local(divisor.fan_ptr());
  ComplexCache& cache = options.cache ? *options.cache : local;
  if (!same_fan(cache.fan(), divisor.fan_ptr())) {
    throw ToricError(ErrorCode::DivisorFanMismatch, "cohomology cache belongs to another fan");
  }
  CohomologyTable table{std::vector<Int>(n + 1, 0)};
  for (const auto& [mask, count] : multiplicity) {
    const auto& reduced = cache.reduced(mask);
    for (std::size_t p = 0; p <= n; ++p) table.dims[p] += count * reduced[p];
  }
  return table;
}

CohomologyTable ext_dims(const TorusDivisor& from, const TorusDivisor& to,
                         const CohomologyOptions& options) {
  return cohomology_dims(to - from, options);
}

Int euler_char(const TorusDivisor& divisor) {
  const CohomologyTable t = cohomology_dims(divisor);
  Int chi = 0;
  for (std::size_t p = 0; p < t.size(); ++p) chi += (p % 2 == 0 ? 1 : -1) * t[p];
  return chi;
}

}  // namespace toricsec
