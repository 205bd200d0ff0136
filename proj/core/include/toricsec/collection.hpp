#pragma once

// Ordered collections of line bundles and the exceptionality checkers.

#include <cstddef>
#include <vector>

#include "toricsec/cohomology.hpp"
#include "toricsec/divisor.hpp"

namespace toricsec {

class Collection {
 public:
  /// Throws EmptyCollection for an empty list and DivisorFanMismatch if a
  /// bundle lives on another fan.
  Collection(FanPtr fan, std::vector<TorusDivisor> bundles);

  const Fan& fan() const { return *fan_; }
  const FanPtr& fan_ptr() const { return fan_; }
  const std::vector<TorusDivisor>& bundles() const { return bundles_; }
  const TorusDivisor& operator[](std::size_t i) const { return bundles_[i]; }
  std::size_t size() const { return bundles_.size(); }

  friend bool operator==(const Collection& a, const Collection& b) {
    return same_fan(a.fan_, b.fan_) && a.bundles_ == b.bundles_;
  }

 private:
  FanPtr fan_;
  std::vector<TorusDivisor> bundles_;
};

/// ext_table[source][target] = Ext^*(E_source, E_target).
using ExtTable = std::vector<std::vector<CohomologyTable>>;

/// A nonvanishing Ext^degree(E_source, E_target) that the definition forbids.
struct Violation {
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
  Int dimension = 0;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct CheckReport {
  bool pass = true;
  std::vector<Violation> violations;  // sorted
  ExtTable ext_table;
};

struct CheckOptions {
  /// Worker threads for the Ext table; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

/// Full Ext table over all ordered pairs. Entries are computed independently;
/// the result does not depend on the thread count.
ExtTable compute_ext_table(const Collection& c, const CheckOptions& options = {});

/// Ext^*(E_k, E_k) = [1, 0, ..., 0] for all k, and Ext^*(E_k, E_j) = 0 for j < k.
CheckReport check_exceptional(const Collection& c, const CheckOptions& options = {});
CheckReport check_exceptional(const ExtTable& table);

/// Exceptional, plus Ext^{>=1}(E_j, E_k) = 0 for j <= k.
CheckReport check_strongly_exceptional(const Collection& c, const CheckOptions& options = {});
CheckReport check_strongly_exceptional(const ExtTable& table);

/// Length equals rank K_0 = number of maximal cones. Necessary for fullness,
/// never sufficient.
bool k0_length_check(const Collection& c);

/// Entry (j, k) = dim Hom(E_j, E_k) = h^0(E_k - E_j).
std::vector<std::vector<Int>> hom_quiver(const Collection& c, const CheckOptions& options = {});

/// Tensors every bundle with M.
Collection twist(const Collection& c, const TorusDivisor& m);

}  // namespace toricsec
