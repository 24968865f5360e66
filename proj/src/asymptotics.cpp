#include "mstd/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <mpfr.h>

#include "mstd/bbs.hpp"
#include "mstd/error.hpp"
#include "mstd/parallel.hpp"
#include "mstd/rng.hpp"
#include "mstd/walks.hpp"

namespace mstd {

namespace {

constexpr mpfr_prec_t kPrecisionBits = 256;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrecisionBits); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// ln C(n, k) + 0.5 ln n - n ln 2
void log_scaled_binomial(Real& out, std::int64_t n, std::int64_t k) {
  Real term;
  auto lgamma_of = [&](Real& dst, std::int64_t x) {
    mpfr_set_si(dst.get(), static_cast<long>(x), MPFR_RNDN);
    mpfr_lngamma(dst.get(), dst.get(), MPFR_RNDN);
  };
  lgamma_of(out, n + 1);
  lgamma_of(term, k + 1);
  mpfr_sub(out.get(), out.get(), term.get(), MPFR_RNDN);
  lgamma_of(term, n - k + 1);
  mpfr_sub(out.get(), out.get(), term.get(), MPFR_RNDN);

  mpfr_set_si(term.get(), static_cast<long>(n), MPFR_RNDN);
  mpfr_log(term.get(), term.get(), MPFR_RNDN);
  mpfr_div_2ui(term.get(), term.get(), 1, MPFR_RNDN);
  mpfr_add(out.get(), out.get(), term.get(), MPFR_RNDN);

  mpfr_const_log2(term.get(), MPFR_RNDN);
  mpfr_mul_si(term.get(), term.get(), static_cast<long>(n), MPFR_RNDN);
  mpfr_sub(out.get(), out.get(), term.get(), MPFR_RNDN);
}

}  // namespace

std::int64_t normal_index(std::int64_t n, double t) {
  const double x = (static_cast<double>(n) + t * std::sqrt(static_cast<double>(n))) / 2;
  return static_cast<std::int64_t>(std::llround(x));
}

double normal_approx_check(std::int64_t n, double t) {
  if (n < 2) throw Error(ErrorCode::kBadArgument, "normal_approx_check: n must be >= 2");
  const std::int64_t k = normal_index(n, t);
  if (k < 0 || k > n) throw Error(ErrorCode::kBadArgument, "normal_approx_check: index outside [0, n]");
  Real value;
  log_scaled_binomial(value, n, k);
  mpfr_exp(value.get(), value.get(), MPFR_RNDN);
  return mpfr_get_d(value.get(), MPFR_RNDN);
}

double normal_limit(double t) {
  return std::sqrt(2 / std::numbers::pi) * std::exp(-t * t / 2);
}

double nearest_double(const Rational& value) {
  Real r;
  mpfr_set_q(r.get(), value.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(r.get(), MPFR_RNDN);
}

Rational bbs_fraction(std::int64_t n, int threads) {
  Rational out(count_bbs_reflection(n, threads), pow2(static_cast<std::uint64_t>(n)));
  out.canonicalize();
  return out;
}

RatioValue ratio_value(std::int64_t n, int digits, int threads) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "ratio_value: n must be >= 1");
  // n B(n) / 2^(n-2) = 4 n B(n) / 2^n
  Rational value = bbs_fraction(n, threads) * (4 * n);
  value.canonicalize();
  return {n, value, render_rounded(value, digits)};
}

std::vector<RatioValue> ratio_table(const std::vector<std::int64_t>& ns, int digits, int threads) {
  std::vector<RatioValue> out;
  out.reserve(ns.size());
  for (auto n : ns) out.push_back(ratio_value(n, digits, threads));
  return out;
}

double conjecture_residual(std::int64_t n, int threads) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "conjecture_residual: n must be >= 1");
  const BigCount nn = n;
  Rational residual = bbs_fraction(n, threads) - Rational(1, 4 * nn) - Rational(1, 6 * nn * nn);
  residual *= nn * nn * nn;
  residual.canonicalize();
  return nearest_double(residual);
}

Rational random_walk_pn(std::int64_t n, int threads) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "random_walk_pn: n must be >= 1");
  Rational out(count_bbs_reflection(n + 2, threads), pow2(static_cast<std::uint64_t>(n)));
  out.canonicalize();
  return out;
}

Rational one_sided_min_prob(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "one_sided_min_prob: n must be >= 1");
  Rational out(binomial(n, n / 2), pow2(static_cast<std::uint64_t>(n)));
  out.canonicalize();
  return out;
}

WalkSimulation simulate_pn(std::int64_t n, std::int64_t samples, std::uint64_t seed, int threads) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "simulate_pn: n must be >= 1");
  if (samples < 1) throw Error(ErrorCode::kBadArgument, "simulate_pn: samples must be >= 1");
  const ChunkPlan plan = plan_chunks(samples);
  std::vector<std::int64_t> hits(static_cast<std::size_t>(plan.chunks));
  parallel_for(plan.chunks, threads, [&](std::int64_t chunk) {
    std::mt19937_64 gen(chunk_seed(seed, static_cast<std::uint64_t>(chunk)));
    const std::int64_t count = std::min(plan.per_chunk, samples - plan.begin(chunk));
    std::int64_t local = 0;
    for (std::int64_t s = 0; s < count; ++s) {
      // Start is a (weak) minimum and end a (weak) maximum.
      std::int64_t h = 0;
      std::int64_t peak = 0;
      bool ok = true;
      std::uint64_t word = 0;
      for (std::int64_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = gen();
        h += (word & 1u) ? 1 : -1;
        word >>= 1;
        if (h < 0) ok = false;
        peak = std::max(peak, h);
      }
      if (ok && h == peak) ++local;
    }
    hits[static_cast<std::size_t>(chunk)] = local;
  });
  std::int64_t total = 0;
  for (auto h : hits) total += h;
  return {n, samples, total, seed};
}

double bounded_walk_limit() {
  return (std::exp(-0.5) - 2 * std::exp(-2.0)) / std::sqrt(2 * std::numbers::pi);
}

double bounded_walk_scaled(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "bounded_walk_scaled: n must be >= 1");
  auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (b * b > n) --b;
  while ((b + 1) * (b + 1) <= n) ++b;
  Rational scaled(bounded_lower_bound(n, b), pow2(static_cast<std::uint64_t>(n)));
  scaled.canonicalize();
  return nearest_double(scaled) * std::sqrt(static_cast<double>(n));
}

}  // namespace mstd
