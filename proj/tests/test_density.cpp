#include <doctest.h>

#include <json.hpp>

#include "mstd/bbs.hpp"
#include "mstd/density.hpp"
#include "mstd/error.hpp"
#include "mstd/intset.hpp"
#include "mstd/rng.hpp"
#include "oracles.hpp"

using namespace mstd;

namespace {

const std::vector<int> kConway{0, 2, 3, 4, 7, 11, 12, 14};

bool naive_mstd(std::uint64_t mask, int n) {
  const auto members = oracle::members_of_mask(mask, n);
  return oracle::sums(members).size() > oracle::diffs(members).size();
}

}  // namespace

TEST_CASE("no MSTD sets in small windows") {
  for (int n = 1; n <= 8; ++n) CHECK(census(n).mstd_count == 0);
}

TEST_CASE("census at n = 15") {
  const DensityEstimate d = census(15);
  CHECK(d.mode == DensityEstimate::Mode::kExhaustive);
  CHECK(d.total == pow2(15));
  CHECK(d.mstd_count >= 2);
  CHECK(d.rho >= 2e-7);
  CHECK_FALSE(d.ci95.has_value());
  CHECK_FALSE(d.seed.has_value());
  CHECK(d.generator.empty());

  const IntSet conway = IntSet::from_members(15, std::span<const int>(kConway));
  CHECK(is_mstd(conway));
  CHECK(is_mstd(conway.reflected()));
  CHECK_FALSE(conway == conway.reflected());
}

TEST_CASE("census equals a naive count for n <= 16") {
  for (int n = 1; n <= 16; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) count += naive_mstd(mask, n);
    CHECK(census(n).mstd_count == BigCount(static_cast<unsigned long>(count)));
  }
}

TEST_CASE("census decomposes by span: sum over d of (n-d+1) spanning(d), n <= 20") {
  std::vector<std::uint64_t> spanning(21);
  for (int d = 1; d <= 20; ++d) spanning[static_cast<std::size_t>(d)] = census_spanning(d);
  for (int n = 1; n <= 20; ++n) {
    std::uint64_t total = 0;
    for (int d = 1; d <= n; ++d) total += static_cast<std::uint64_t>(n - d + 1) * spanning[static_cast<std::size_t>(d)];
    CHECK(census(n).mstd_count == BigCount(static_cast<unsigned long>(total)));
  }
}

TEST_CASE("census covers at least the constructed family, n = 24..26") {
  for (int n = 24; n <= 26; ++n) CHECK(census(n).mstd_count >= count_bbs_dp(n - 22));
}

TEST_CASE("census limits") {
  CHECK_THROWS_AS(census(27), Error);
  try {
    census(27);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLimitExceeded);
  }
  CHECK_THROWS_AS(census(0), Error);
  CHECK_THROWS_AS(census(41, {.limit = 60}), Error);
  CHECK(census(10, {.limit = 10}).total == 1024);
  CHECK_THROWS_AS(census(11, {.limit = 10}), Error);
}

TEST_CASE("threaded census is identical") {
  CHECK(census(18, {.threads = 1}).mstd_count == census(18, {.threads = 3}).mstd_count);
}

TEST_CASE("Monte Carlo is deterministic and independent of thread count") {
  const DensityEstimate a = monte_carlo(30, 300'000, 99, 1);
  const DensityEstimate b = monte_carlo(30, 300'000, 99, 4);
  CHECK(a.mstd_count == b.mstd_count);
  CHECK(a.rho == b.rho);
  CHECK(monte_carlo(30, 300'000, 99, 2).mstd_count == a.mstd_count);
  CHECK(a.seed == std::optional<std::uint64_t>(99));
  CHECK(a.generator == kGeneratorName);
  CHECK(a.total == 300'000);
}

TEST_CASE("Monte Carlo interval contains the exact density at n = 16") {
  const Rational exact = census(16).exact_rho();
  const DensityEstimate mc = monte_carlo(16, 2'000'000, 20240601, 0);
  REQUIRE(mc.ci95.has_value());
  const double rho = exact.get_d();
  CHECK(mc.ci95->first <= rho);
  CHECK(rho <= mc.ci95->second);
}

TEST_CASE("Monte Carlo hit count equals a naive replay of the same stream") {
  for (int n : {12, 20, 64, 70}) {
    const std::int64_t samples = kSamplesPerChunk + 1000;
    const std::uint64_t seed = 5;
    std::int64_t hits = 0;
    const ChunkPlan plan = plan_chunks(samples);
    for (std::int64_t c = 0; c < plan.chunks; ++c) {
      std::mt19937_64 gen(chunk_seed(seed, static_cast<std::uint64_t>(c)));
      const std::int64_t count = std::min(plan.per_chunk, samples - plan.begin(c));
      for (std::int64_t s = 0; s < count; ++s) {
        std::vector<int> members;
        for (int base = 0; base < n; base += 64) {
          const std::uint64_t w = gen();
          for (int i = 0; i < 64 && base + i < n; ++i)
            if ((w >> i) & 1u) members.push_back(base + i);
        }
        hits += oracle::sums(members).size() > oracle::diffs(members).size();
      }
    }
    CHECK(monte_carlo(n, samples, seed, 2).mstd_count == BigCount(static_cast<long>(hits)));
  }
}

TEST_CASE("chunk seeds follow SplitMix64") {
  std::uint64_t state = 1234;
  for (std::uint64_t i = 0; i < 5; ++i) CHECK(chunk_seed(1234, i) == splitmix64(state));
  CHECK(plan_chunks(1).chunks == 1);
  CHECK(plan_chunks(kSamplesPerChunk).chunks == 1);
  CHECK(plan_chunks(kSamplesPerChunk + 1).chunks == 2);
}

TEST_CASE("Wilson interval") {
  const auto [lo, hi] = wilson_interval(50, 100);
  CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
  const auto zero = wilson_interval(0, 1000);
  CHECK(zero.first == 0.0);
  CHECK(zero.second > 0.0);
  const auto all = wilson_interval(1000, 1000);
  CHECK(all.first < 1.0);
  CHECK(all.second == 1.0);
  CHECK_THROWS_AS(wilson_interval(0, 0), Error);
}

TEST_CASE("family fraction") {
  Rational first = family_fraction(24);
  CHECK(first == Rational(BigCount(1), pow2(24)));
  Rational at46(BigCount(179775), pow2(46));
  at46.canonicalize();
  CHECK(family_fraction(46) == at46);
  const double scaled = 1022 * family_fraction(1022).get_d();
  CHECK(std::abs(scaled / std::ldexp(1.0, -24) - 1) < 0.05);
  CHECK_THROWS_AS(family_fraction(23), Error);
}

TEST_CASE("CSV and JSON rows") {
  const DensityEstimate exact = census(15);
  const std::string row = exact.to_csv_row();
  CHECK(DensityEstimate::csv_header() == "n,mode,mstd_count,total,rho,ci95_lo,ci95_hi,seed,generator");
  CHECK(row.rfind("15,exhaustive," + to_string(exact.mstd_count) + ",32768,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 8);

  const auto j = nlohmann::json::parse(exact.to_json());
  CHECK(j["n"] == 15);
  CHECK(j["mode"] == "exhaustive");
  CHECK(BigCount(j["mstd_count"].get<std::string>()) == exact.mstd_count);
  CHECK(j["ci95"].is_null());
  CHECK(j["generator"].is_null());
  CHECK(j["seed"].is_null());

  const DensityEstimate mc = monte_carlo(20, 10'000, 42, 1);
  const auto k = nlohmann::json::parse(mc.to_json());
  CHECK(k["mode"] == "monte_carlo");
  CHECK(k["seed"] == 42);
  CHECK(k["generator"] == kGeneratorName);
  CHECK(k["rho"].get<double>() == mc.rho);
  CHECK(k["ci95"][0].get<double>() == mc.ci95->first);
  CHECK(k["ci95"][1].get<double>() == mc.ci95->second);
  CHECK(BigCount(k["total"].get<std::string>()) == 10'000);
}
