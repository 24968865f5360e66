// Acceptance suite: one PASS/FAIL line per criterion, each run against its
// time limit. Exits nonzero when any gating criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "mstd/asymptotics.hpp"
#include "mstd/bbs.hpp"
#include "mstd/construction.hpp"
#include "mstd/density.hpp"
#include "mstd/walks.hpp"

using namespace mstd;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  bool gating;
  std::function<Outcome()> body;
};

std::uint64_t reverse_bits(std::uint64_t mask, int length) {
  std::uint64_t out = 0;
  for (int i = 0; i < length; ++i)
    if ((mask >> i) & 1u) out |= std::uint64_t{1} << (length - 1 - i);
  return out;
}

// Every prefix and suffix has more ones than zeros, checked with running sums.
bool bbs_by_running_sums(std::uint64_t mask, int n) {
  int prefix = 0, suffix = 0;
  for (int i = 0; i < n; ++i) {
    prefix += ((mask >> i) & 1u) ? 1 : -1;
    suffix += ((mask >> (n - 1 - i)) & 1u) ? 1 : -1;
    if (prefix <= 0 || suffix <= 0) return false;
  }
  return true;
}

std::vector<int> heights_of(std::uint64_t mask, int n) {
  std::vector<int> h{0};
  for (int i = 0; i < n; ++i) h.push_back(h.back() + (((mask >> i) & 1u) ? 1 : -1));
  return h;
}

bool ballot_heights(const std::vector<int>& h) {
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] <= 0) return false;
  return true;
}

bool bounded_heights(const std::vector<int>& h, int b) {
  if (h.size() < 2 || !ballot_heights(h)) return false;
  for (int x : h)
    if (x > 2 * b) return false;
  return h.back() > b;
}

// Plain double loop over a boolean table, no bit-vector code.
std::pair<int, int> double_loop_sizes(const std::vector<int>& s, int n) {
  std::vector<char> sums(static_cast<std::size_t>(2 * n), 0), diffs(static_cast<std::size_t>(2 * n), 0);
  for (int a : s)
    for (int b : s) {
      sums[static_cast<std::size_t>(a + b)] = 1;
      diffs[static_cast<std::size_t>(a - b + n)] = 1;
    }
  int ns = 0, nd = 0;
  for (char c : sums) ns += c;
  for (char c : diffs) nd += c;
  return {ns, nd};
}

const std::vector<unsigned long> kPublishedB{1,    1,    1,    1,     2,     3,     5,     9,
                                             15,   28,   49,   91,    166,   307,   574,   1065,
                                             2016, 3769, 7176, 13532, 25842, 49113, 93995, 179775};

Outcome table1() {
  Outcome o;
  for (int n = 1; n <= 24; ++n) {
    const BigCount expected(kPublishedB[static_cast<std::size_t>(n - 1)]);
    o.require(count_bbs_dp(n) == expected, "dp differs at n = " + std::to_string(n));
    o.require(count_bbs_reflection(n) == expected, "reflection differs at n = " + std::to_string(n));
  }
  return o;
}

Outcome table2() {
  Outcome o;
  const std::string a = ratio_value(100, 7).decimal;
  const std::string b = ratio_value(1000, 8).decimal;
  o.require(a == "1.0067268", "n = 100 gave " + a);
  o.require(b == "1.00066729", "n = 1000 gave " + b);
  o.detail = o.ok ? "100 -> " + a + ", 1000 -> " + b : o.detail;
  return o;
}

Outcome table2_stretch() {
  Outcome o;
  const std::string c = ratio_value(10000, 10).decimal;
  o.require(c == "1.0000666729", "n = 10000 gave " + c);
  o.detail = o.ok ? "10000 -> " + c : o.detail;
  return o;
}

Outcome family() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 24; n <= 44; ++n) {
    const auto members = enumerate_family(n);
    o.require(BigCount(static_cast<unsigned long>(members.size())) == count_bbs_dp(n - 22),
              "family size differs at n = " + std::to_string(n));
    for (const auto& s : members) {
      const auto [sums, diffs] = double_loop_sizes(s.members(), n);
      const std::string at = " at n = " + std::to_string(n) + ": " + s.to_string();
      o.require(is_mstd(s), "is_mstd false" + at);
      o.require(sums > diffs, "not MSTD by double loop" + at);
      o.require(sums == 2 * n - 2, "|S+S| != 2n-2" + at);
      o.require(diffs <= 2 * n - 3, "|S-S| > 2n-3" + at);
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " sets checked";
  return o;
}

Outcome bbs_oracle() {
  Outcome o;
  for (int n = 1; n <= 24; ++n) {
    std::uint64_t filtered = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) filtered += bbs_by_running_sums(mask, n);
    const BigCount f(static_cast<unsigned long>(filtered));
    o.require(f == count_bbs_dp(n), "dp differs at n = " + std::to_string(n));
    o.require(f == count_bbs_reflection(n), "reflection differs at n = " + std::to_string(n));
    o.require(filtered == count_bbs_exhaustive(n), "library filter differs at n = " + std::to_string(n));
  }
  return o;
}

Outcome ballot_formulas() {
  Outcome o;
  for (int n = 1; n <= 16; ++n) {
    // by_ones[p] and by_height[h] over all ballot sequences of length n
    std::vector<std::uint64_t> by_ones(static_cast<std::size_t>(n) + 1), by_height(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto h = heights_of(mask, n);
      if (!ballot_heights(h)) continue;
      ++by_ones[static_cast<std::size_t>((n + h.back()) / 2)];
      ++by_height[static_cast<std::size_t>(h.back())];
    }
    for (int p = n / 2 + 1; p <= n; ++p) {
      o.require(ballot_count(p, n - p) == BigCount(static_cast<unsigned long>(by_ones[static_cast<std::size_t>(p)])),
                "ballot_count(" + std::to_string(p) + "," + std::to_string(n - p) + ")");
    }
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        std::uint64_t expected = 0;
        for (int h = a; h <= b; ++h) expected += by_height[static_cast<std::size_t>(h)];
        o.require(ballot_count_height_range(n, a, b) == BigCount(static_cast<unsigned long>(expected)),
                  "height range n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
  }
  return o;
}

Outcome bounded_machinery() {
  Outcome o;
  std::uint64_t pairs = 0;
  for (int b = 1; b <= 4; ++b) {
    std::vector<std::pair<std::uint64_t, int>> bounded;  // (mask, length)
    for (int n = 1; n <= 18; ++n) {
      std::uint64_t count = 0;
      std::set<std::uint64_t> images;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto h = heights_of(mask, n);
        if (bounded_heights(h, b)) {
          ++count;
          bounded.emplace_back(mask, n);
        }
        // (ii) domain: ballot, rises above 2b, ends in (b, 2b]
        if (!ballot_heights(h) || h.back() <= b || h.back() > 2 * b) continue;
        if (*std::max_element(h.begin(), h.end()) <= 2 * b) continue;
        const Walk image = reflect_after_last_exceed(Walk(BitSeq::from_mask(mask, n)), b);
        const auto& ih = image.heights();
        o.require(ballot_heights(ih) && ih.back() >= 2 * b + 2, "reflection image outside the target set");
        std::uint64_t image_mask = 0;
        for (int i = 0; i < n; ++i)
          if (ih[static_cast<std::size_t>(i) + 1] > ih[static_cast<std::size_t>(i)]) image_mask |= std::uint64_t{1} << i;
        o.require(images.insert(image_mask).second, "reflection not injective");
      }
      // (i)
      o.require(bounded_lower_bound(n, b) <= BigCount(static_cast<unsigned long>(count)),
                "lower bound exceeds count at n=" + std::to_string(n) + " b=" + std::to_string(b));
    }
    // (iii) every pair of b-bounded sequences, each of length <= 18
    std::vector<std::uint64_t> reversed;
    reversed.reserve(bounded.size());
    for (const auto& [mask, len] : bounded) reversed.push_back(reverse_bits(mask, len));
    for (const auto& [m1, n1] : bounded) {
      for (std::size_t j = 0; j < bounded.size(); ++j) {
        const int n2 = bounded[j].second;
        const std::uint64_t joined = m1 | (reversed[j] << n1);
        if (!is_bbs(joined, n1 + n2)) {
          o.require(false, "concatenation fails is_bbs for b=" + std::to_string(b));
        }
        ++pairs;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " concatenations checked";
  return o;
}

Outcome density_figures() {
  Outcome o;
  const DensityEstimate c = census(15);
  Rational floor_value(2, 10'000'000);
  floor_value.canonicalize();
  o.require(c.exact_rho() >= floor_value, "census(15) density below 2e-7");
  const DensityEstimate mc = monte_carlo(100, 1'000'000, 20240601, 0);
  o.require(mc.rho >= 3.0e-4 && mc.rho <= 6.0e-4, "Monte Carlo estimate outside [3e-4, 6e-4]");
  char buf[160];
  std::snprintf(buf, sizeof buf, "census(15) = %s/32768, mc(100) = %.3e (seed 20240601)",
                to_string(c.mstd_count).c_str(), mc.rho);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome asymptotic_checks() {
  Outcome o;
  const std::int64_t n = 1600;
  const double fraction = nearest_double(bbs_fraction(n));
  const double ratio = 4.0 * n * fraction;
  const double second = static_cast<double>(n) * n * (fraction - 1.0 / (4.0 * n));
  const double m = 10'000;
  const double footnote = std::sqrt(std::numbers::pi * m / 2) * nearest_double(one_sided_min_prob(10'000));
  const double limit = std::sqrt(2 / std::numbers::pi);
  const double normal = normal_approx_check(1'000'000, 0);
  o.require(std::abs(ratio - 1) < 0.01, "first order off at n = 1600");
  o.require(std::abs(second * 6 - 1) < 0.10, "second order off at n = 1600");
  o.require(std::abs(footnote - 1) < 0.01, "one-sided scaling off at n = 10^4");
  o.require(std::abs(normal - limit) / limit < 1e-3, "normal approximation off at n = 10^6");
  char buf[200];
  std::snprintf(buf, sizeof buf, "ratio %.6f, n^2 term %.5f, footnote %.6f, normal rel err %.2e", ratio, second,
                footnote, std::abs(normal - limit) / limit);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome sandwich() {
  Outcome o;
  for (int n = 4; n <= 24; ++n) {
    const SandwichBounds s = sandwich_bounds(n);
    const BigCount exact = count_bbs_dp(n);
    o.require(s.lower <= exact && exact <= s.upper, "sandwich fails at n = " + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "B(1..24) reference values", 1, true, table1},
      {"2", "ratio reference decimals (n = 100, 1000)", 60, true, table2},
      {"2s", "ratio stretch (n = 10000, non-gating)", 600, false, table2_stretch},
      {"3", "construction family, n in [24, 44]", 300, true, family},
      {"4", "BBS oracle equivalence, n <= 24", 120, true, bbs_oracle},
      {"5", "ballot formulas, p+q <= 16 and 0 <= a < b <= n <= 16", 60, true, ballot_formulas},
      {"6", "bounded-walk machinery, n <= 18, b <= 4", 300, true, bounded_machinery},
      {"7", "density figures", 600, true, density_figures},
      {"8", "asymptotic checks", 300, true, asymptotic_checks},
      {"9", "sandwich bounds, n in [4, 24]", 60, true, sandwich},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    if (!pass && c.gating) ++failures;
    std::string detail = outcome.detail;
    if (outcome.ok && !in_time) detail = "over time limit";
    std::printf("%s  %-3s %-55s %8.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                seconds, c.limit_seconds, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d gating criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
