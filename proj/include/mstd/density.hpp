#pragma once

// MSTD density: exact census over all subsets of a small window, seeded
// Monte Carlo estimates for larger windows, and the share of subsets covered
// by the explicit construction.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "mstd/bigcount.hpp"

namespace mstd {

inline constexpr int kDefaultCensusLimit = 26;
inline constexpr int kMaxCensusWindow = 40;

struct DensityEstimate {
  enum class Mode { kExhaustive, kMonteCarlo };

  int n = 0;  // window [0, n-1]
  Mode mode = Mode::kExhaustive;
  BigCount mstd_count = 0;
  BigCount total = 0;  // 2^n for a census, the sample count otherwise
  double rho = 0;      // mstd_count / total
  std::optional<std::pair<double, double>> ci95;  // Monte Carlo only
  std::optional<std::uint64_t> seed;              // Monte Carlo only
  std::string generator;                          // empty for a census

  Rational exact_rho() const;

  static std::string csv_header();
  std::string to_csv_row() const;
  /// One JSON object, no trailing newline.
  std::string to_json() const;
};

const char* to_string(DensityEstimate::Mode mode);

struct CensusOptions {
  int limit = kDefaultCensusLimit;
  int threads = 0;  // 0 = hardware concurrency
};

/// Exact number of MSTD subsets of [0, n-1]. Requires 1 <= n <= options.limit
/// (and never above kMaxCensusWindow); otherwise throws kLimitExceeded.
DensityEstimate census(int n, const CensusOptions& options = {});

/// Number of MSTD subsets of [0, d-1] that contain both 0 and d-1.
std::uint64_t census_spanning(int d, const CensusOptions& options = {});

/// `samples` uniform subsets of [0, n-1] (each element present with
/// probability 1/2). Identical (n, samples, seed) give identical results for
/// every thread count.
DensityEstimate monte_carlo(int n, std::int64_t samples, std::uint64_t seed, int threads = 0);

/// Wilson score interval at 95% for `hits` out of `trials`.
std::pair<double, double> wilson_interval(std::int64_t hits, std::int64_t trials);

/// B(n - 22) / 2^n. Requires n >= 24.
Rational family_fraction(int n);

}  // namespace mstd
