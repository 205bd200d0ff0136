#include "toricsec/collection.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "toricsec/error.hpp"

namespace toricsec {

Collection::Collection(FanPtr fan, std::vector<TorusDivisor> bundles)
    : fan_(std::move(fan)), bundles_(std::move(bundles)) {
  if (bundles_.empty()) throw ToricError(ErrorCode::EmptyCollection, "collection has no bundles");
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    if (!same_fan(fan_, bundles_[i].fan_ptr())) {
      throw ToricError(ErrorCode::DivisorFanMismatch,
                       "bundle " + std::to_string(i) + " is on a different fan");
    }
  }
}

namespace {

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

}  // namespace

ExtTable compute_ext_table(const Collection& c, const CheckOptions& options) {
  const std::size_t n = c.size();
  require_smooth_complete(c.fan());
  ExtTable table(n, std::vector<CohomologyTable>(n));
  const std::size_t work = n * n;
  const unsigned threads = resolve_threads(options.threads, work);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    ComplexCache cache(c.fan_ptr());
    CohomologyOptions opts;
    opts.cache = &cache;
    for (std::size_t idx = next++; idx < work; idx = next++) {
      const std::size_t s = idx / n;
      const std::size_t t = idx % n;
      table[s][t] = ext_dims(c[s], c[t], opts);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return table;
}

CheckReport check_exceptional(const ExtTable& table) {
  CheckReport report;
  report.ext_table = table;
  const std::size_t n = table.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& self = table[k][k];
    for (std::size_t p = 0; p < self.size(); ++p) {
      const Int expected = p == 0 ? 1 : 0;
      if (self[p] != expected) {
        report.violations.push_back({k, k, static_cast<int>(p), self[p]});
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto& back = table[k][j];
      for (std::size_t p = 0; p < back.size(); ++p) {
        if (back[p] != 0) report.violations.push_back({k, j, static_cast<int>(p), back[p]});
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.pass = report.violations.empty();
  return report;
}

CheckReport check_exceptional(const Collection& c, const CheckOptions& options) {
  return check_exceptional(compute_ext_table(c, options));
}

CheckReport check_strongly_exceptional(const ExtTable& table) {
  CheckReport report = check_exceptional(table);
  const std::size_t n = table.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const auto& fwd = table[j][k];
      for (std::size_t p = 1; p < fwd.size(); ++p) {
        if (fwd[p] != 0) report.violations.push_back({j, k, static_cast<int>(p), fwd[p]});
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.pass = report.violations.empty();
  return report;
}

CheckReport check_strongly_exceptional(const Collection& c, const CheckOptions& options) {
  return check_strongly_exceptional(compute_ext_table(c, options));
}

bool k0_length_check(const Collection& c) { return c.size() == c.fan().num_max_cones(); }

std::vector<std::vector<Int>> hom_quiver(const Collection& c, const CheckOptions& options) {
  const ExtTable table = compute_ext_table(c, options);
  std::vector<std::vector<Int>> out(c.size(), std::vector<Int>(c.size()));
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t k = 0; k < c.size(); ++k) out[j][k] = table[j][k][0];
  }
  return out;
}

Collection twist(const Collection& c, const TorusDivisor& m) {
  std::vector<TorusDivisor> out;
  out.reserve(c.size());
  for (const auto& b : c.bundles()) out.push_back(b + m);
  return Collection(c.fan_ptr(), std::move(out));
}

}  // namespace toricsec
