#pragma once

// Fans and collections realizing the known constructions: projective spaces,
// products, and block-ordered collections on fibrations with a twist search.

#include <optional>

#include "toricsec/collection.hpp"
#include "toricsec/divisor.hpp"
#include "toricsec/error.hpp"
#include "toricsec/fibration.hpp"

namespace toricsec {

struct Construction {
  FanPtr fan;
  Collection collection;
};

/// Rays e_1, ..., e_n, -(e_1 + ... + e_n); every n-subset is a cone.
FanPtr projective_space_fan(int n);

/// F_a: rays (1,0), (0,1), (-1,a), (0,-1) with the four consecutive cones.
/// Projecting onto the first coordinate exhibits it as a P^1-bundle over P^1.
FanPtr hirzebruch_fan(Int a);

/// Rays of the first factor (padded with zeros) followed by those of the
/// second; cones are all unions, first-factor cone index outermost.
FanPtr product_fan(const Fan& first, const Fan& second);

/// D1 ⊠ D2 on the product fan: coefficient lists concatenated.
TorusDivisor box_product(const FanPtr& product, const TorusDivisor& first, const TorusDivisor& second);

/// (O, O(1), ..., O(n)) on P^n with O(d) = d * D_0.
Construction beilinson(int n);

/// Box products ordered with the second factor's index outermost:
/// (E_0⊠F_0, E_1⊠F_0, ..., E_0⊠F_1, ...). Throws InputNotStronglyExceptional
/// if either factor collection fails the check.
Construction product(const Collection& first, const Collection& second,
                     const CheckOptions& options = {});

/// Block-ordered sequence on the total space: element (k, j), k = 1..u over
/// the fiber collection and j = 1..v over the base collection, is
/// pullback(E_j + k*D) + lift(L_k), stored at index (k-1)*v + (j-1).
/// Throws DivisorFanMismatch if an input lives on the wrong fan.
Collection fibration_collection(const FibrationData& fibration, const Collection& fiber_collection,
                                const Collection& base_collection, const TorusDivisor& twist);

struct TwistSearchResult {
  Int k = 0;
  TorusDivisor twist;  // k * ample
  Collection collection;
  CheckReport report;
};

/// Carries the report with the fewest violations seen during the search.
class SearchExhaustedError : public ToricError {
 public:
  SearchExhaustedError(Int k_max, Int best_k, CheckReport best_report)
      : ToricError(ErrorCode::SearchExhausted,
                   "no twist k*A with k <= " + std::to_string(k_max) +
                       " gives a strongly exceptional collection"),
        k_max_(k_max),
        best_k_(best_k),
        best_report_(std::move(best_report)) {}

  Int k_max() const { return k_max_; }
  Int best_k() const { return best_k_; }
  const CheckReport& best_report() const { return best_report_; }

 private:
  Int k_max_;
  Int best_k_;
  CheckReport best_report_;
};

inline constexpr Int kDefaultTwistBound = 10;

/// Smallest k in 0..k_max for which fibration_collection with twist k*A is
/// strongly exceptional. Throws NotAmple if A is not ample on the base and
/// SearchExhaustedError if no k works.
TwistSearchResult twist_search(const FibrationData& fibration, const Collection& fiber_collection,
                               const Collection& base_collection, const TorusDivisor& ample,
                               Int k_max = kDefaultTwistBound, const CheckOptions& options = {});

/// First ample divisor found by enumerating coefficient vectors with entries
/// in [0, max_coeff], ordered by coefficient sum and then lexicographically.
std::optional<TorusDivisor> find_ample(const FanPtr& fan, Int max_coeff = 2);

}  // namespace toricsec
