#include "mstd/density.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <json.hpp>

#include "mstd/asymptotics.hpp"
#include "mstd/bbs.hpp"
#include "mstd/error.hpp"
#include "mstd/intset.hpp"
#include "mstd/parallel.hpp"
#include "mstd/rng.hpp"

namespace mstd {

const char* to_string(DensityEstimate::Mode mode) {
  return mode == DensityEstimate::Mode::kExhaustive ? "exhaustive" : "monte_carlo";
}

Rational DensityEstimate::exact_rho() const {
  Rational out(mstd_count, total);
  out.canonicalize();
  return out;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string DensityEstimate::csv_header() {
  return "n,mode,mstd_count,total,rho,ci95_lo,ci95_hi,seed,generator";
}

std::string DensityEstimate::to_csv_row() const {
  std::string row = std::to_string(n) + "," + to_string(mode) + "," + mstd::to_string(mstd_count) +
                    "," + mstd::to_string(total) + "," + format_double(rho) + ",";
  if (ci95) row += format_double(ci95->first) + "," + format_double(ci95->second);
  else row += ",";
  row += ",";
  if (seed) row += std::to_string(*seed);
  row += "," + generator;
  return row;
}

std::string DensityEstimate::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["mode"] = to_string(mode);
  // Counts can exceed 64 bits, so they travel as decimal strings.
  j["mstd_count"] = mstd::to_string(mstd_count);
  j["total"] = mstd::to_string(total);
  j["rho"] = rho;
  if (ci95) j["ci95"] = {ci95->first, ci95->second};
  else j["ci95"] = nullptr;
  if (seed) j["seed"] = *seed;
  else j["seed"] = nullptr;
  if (generator.empty()) j["generator"] = nullptr;
  else j["generator"] = generator;
  return j.dump();
}

// ---------------------------------------------------------------- census

namespace {

void check_census_window(int n, const CensusOptions& options) {
  const int limit = std::min(options.limit, kMaxCensusWindow);
  if (n < 1 || n > limit) {
    throw Error(ErrorCode::kLimitExceeded,
                "census: n = " + std::to_string(n) + " outside [1, " + std::to_string(limit) +
                    "]; use Monte Carlo for larger windows");
  }
}

// Counts MSTD masks in [0, 2^bits) after mapping each mask through `place`.
template <typename Place>
std::uint64_t count_mstd_masks(int window, int bits, int threads, Place&& place) {
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::int64_t chunks = bits <= 12 ? 1 : 256;
  const std::uint64_t per_chunk = total / static_cast<std::uint64_t>(chunks);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(chunks));
  parallel_for(chunks, threads, [&](std::int64_t chunk) {
    const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * per_chunk;
    const std::uint64_t end = begin + per_chunk;
    std::uint64_t local = 0;
    if (window <= 32) {
      for (std::uint64_t m = begin; m < end; ++m) local += sum_diff_sizes(place(m), window).mstd();
    } else {
      SumDiffKernel kernel(window);
      for (std::uint64_t m = begin; m < end; ++m) {
        const std::uint64_t word = place(m);
        local += kernel.evaluate(std::span<const std::uint64_t>(&word, 1)).mstd();
      }
    }
    counts[static_cast<std::size_t>(chunk)] = local;
  });
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

}  // namespace

DensityEstimate census(int n, const CensusOptions& options) {
  check_census_window(n, options);
  const std::uint64_t count =
      count_mstd_masks(n, n, options.threads, [](std::uint64_t m) { return m; });
  DensityEstimate out;
  out.n = n;
  out.mode = DensityEstimate::Mode::kExhaustive;
  out.mstd_count = static_cast<unsigned long>(count);
  out.total = pow2(static_cast<std::uint64_t>(n));
  out.rho = nearest_double(out.exact_rho());
  return out;
}

std::uint64_t census_spanning(int d, const CensusOptions& options) {
  check_census_window(d, options);
  if (d == 1) return sum_diff_sizes(1, 1).mstd() ? 1 : 0;
  // Free interior bits 1..d-2; both endpoints forced.
  const std::uint64_t ends = 1 | (std::uint64_t{1} << (d - 1));
  return count_mstd_masks(d, d - 2, options.threads,
                          [ends](std::uint64_t m) { return ends | (m << 1); });
}

// ----------------------------------------------------------- Monte Carlo

std::pair<double, double> wilson_interval(std::int64_t hits, std::int64_t trials) {
  if (trials < 1) throw Error(ErrorCode::kBadArgument, "wilson_interval: trials must be >= 1");
  constexpr double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / nt;
  const double denom = 1 + z * z / nt;
  const double centre = (p + z * z / (2 * nt)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nt + z * z / (4 * nt * nt)) / denom;
  // The bounds are exact at the extremes; the formula leaves rounding residue.
  const double lo = hits == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = hits == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

DensityEstimate monte_carlo(int n, std::int64_t samples, std::uint64_t seed, int threads) {
  if (n < 1) throw Error(ErrorCode::kBadWindow, "monte_carlo: window must be positive");
  if (samples < 1) throw Error(ErrorCode::kBadArgument, "monte_carlo: samples must be >= 1");
  const ChunkPlan plan = plan_chunks(samples);
  const std::size_t words = words_for(n);
  const std::uint64_t top_mask = n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
  std::vector<std::int64_t> hits(static_cast<std::size_t>(plan.chunks));
  parallel_for(plan.chunks, threads, [&](std::int64_t chunk) {
    std::mt19937_64 gen(chunk_seed(seed, static_cast<std::uint64_t>(chunk)));
    SumDiffKernel kernel(n);
    std::vector<std::uint64_t> set(words);
    const std::int64_t count = std::min(plan.per_chunk, samples - plan.begin(chunk));
    std::int64_t local = 0;
    for (std::int64_t s = 0; s < count; ++s) {
      for (auto& w : set) w = gen();
      set.back() &= top_mask;
      local += kernel.evaluate(set).mstd() ? 1 : 0;
    }
    hits[static_cast<std::size_t>(chunk)] = local;
  });
  std::int64_t total_hits = 0;
  for (auto h : hits) total_hits += h;

  DensityEstimate out;
  out.n = n;
  out.mode = DensityEstimate::Mode::kMonteCarlo;
  out.mstd_count = static_cast<long>(total_hits);
  out.total = static_cast<long>(samples);
  out.rho = static_cast<double>(total_hits) / static_cast<double>(samples);
  out.ci95 = wilson_interval(total_hits, samples);
  out.seed = seed;
  out.generator = kGeneratorName;
  return out;
}

Rational family_fraction(int n) {
  if (n < 24) throw Error(ErrorCode::kBadWindow, "family_fraction: n must be >= 24");
  Rational out(count_bbs_reflection(n - 22), pow2(static_cast<std::uint64_t>(n)));
  out.canonicalize();
  return out;
}

}  // namespace mstd
