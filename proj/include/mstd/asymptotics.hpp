#pragma once

// Numerical checks of the asymptotic statements about ballot walks and
// bidirectional ballot sequences. Everything that can be exact is computed
// as an exact rational and converted only at the end.

#include <cstdint>
#include <string>
#include <vector>

#include "mstd/bigcount.hpp"

namespace mstd {

/// Index k = round((n + t sqrt(n)) / 2) used by normal_approx_check.
std::int64_t normal_index(std::int64_t n, double t);

/// sqrt(n) / 2^n * C(n, k) with k = normal_index(n, t), evaluated from
/// log-gamma at 256-bit precision. Requires n >= 2 and k in [0, n].
double normal_approx_check(std::int64_t n, double t);

/// sqrt(2/pi) exp(-t^2/2).
double normal_limit(double t);

struct RatioValue {
  std::int64_t n;
  Rational value;       // n B(n) / 2^(n-2), exact
  std::string decimal;  // correctly rounded to the requested digits
};

/// n B(n) / 2^(n-2) for each n, from the reflection engine.
std::vector<RatioValue> ratio_table(const std::vector<std::int64_t>& ns, int digits, int threads = 1);

RatioValue ratio_value(std::int64_t n, int digits, int threads = 1);

/// n^3 (B(n)/2^n - 1/(4n) - 1/(6n^2)), exact until the final rounding.
double conjecture_residual(std::int64_t n, int threads = 1);

/// Exact B(n)/2^n.
Rational bbs_fraction(std::int64_t n, int threads = 1);

/// p_n = B(n+2) / 2^n: probability that an n-step simple random walk has
/// its start as a minimum and its end as a maximum.
Rational random_walk_pn(std::int64_t n, int threads = 1);

/// Probability that an n-step walk never goes below its start (prefix sums
/// >= 0): C(n, floor(n/2)) / 2^n.
Rational one_sided_min_prob(std::int64_t n);

struct WalkSimulation {
  std::int64_t n;
  std::int64_t samples;
  std::int64_t hits;
  std::uint64_t seed;

  double estimate() const { return static_cast<double>(hits) / static_cast<double>(samples); }
};

/// Seeded Monte Carlo estimate of p_n. Deterministic in (n, samples, seed).
WalkSimulation simulate_pn(std::int64_t n, std::int64_t samples, std::uint64_t seed, int threads = 1);

/// (exp(-1/2) - 2 exp(-2)) / sqrt(2 pi): the limit of the scaled lower
/// bound on floor(sqrt(n))-bounded walks.
double bounded_walk_limit();

/// bounded_lower_bound(n, floor(sqrt n)) * sqrt(n) / 2^n.
double bounded_walk_scaled(std::int64_t n);

/// Rational to the nearest double (round-to-nearest, unlike mpq_get_d).
double nearest_double(const Rational& value);

}  // namespace mstd
