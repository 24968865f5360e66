#include "mstd/bbs.hpp"

#include <algorithm>

#include "mstd/error.hpp"
#include "mstd/parallel.hpp"

namespace mstd {

bool is_bbs(const BitSeq& s) { return is_ballot(s) && is_ballot(s.reversed()); }

bool is_bbs(std::uint64_t mask, int length) {
  // Start is the unique minimum and end the unique maximum of the walk.
  int h = 0;
  int peak = 0;
  for (int i = 0; i < length; ++i) {
    h += ((mask >> i) & 1u) ? 1 : -1;
    if (h <= 0) return false;
    if (i + 1 < length) peak = std::max(peak, h);
  }
  return length == 0 || h > peak;
}

// ------------------------------------------------------------- BbsStream

BbsStream::BbsStream(int length)
    : length_(length),
      bits_(static_cast<std::size_t>(std::max(length, 0))),
      heights_(static_cast<std::size_t>(std::max(length, 0)) + 1),
      prefix_max_(static_cast<std::size_t>(std::max(length, 0)) + 1) {
  if (length < 0) throw Error(ErrorCode::kBadArgument, "BbsStream: negative length");
}

bool BbsStream::feasible(int depth) const {
  // After step `depth`, the walk must stay positive and an all-ones tail must
  // still be able to finish strictly above everything seen so far.
  const auto d = static_cast<std::size_t>(depth);
  const int h = heights_[d];
  const int remaining = length_ - depth;
  return h > 0 && h + remaining > prefix_max_[d - 1];
}

std::optional<BitSeq> BbsStream::next() {
  if (done_) return std::nullopt;
  bool descending = !started_;
  started_ = true;
  int d = descending ? 0 : length_;
  while (true) {
    if (descending) {
      if (d == length_) {
        depth_ = d;
        return BitSeq(bits_);
      }
      bool placed = false;
      for (std::uint8_t bit : {std::uint8_t{0}, std::uint8_t{1}}) {
        const auto i = static_cast<std::size_t>(d);
        bits_[i] = bit;
        heights_[i + 1] = heights_[i] + (bit ? 1 : -1);
        prefix_max_[i + 1] = std::max(prefix_max_[i], heights_[i + 1]);
        if (feasible(d + 1)) {
          placed = true;
          break;
        }
      }
      if (placed) {
        ++d;
      } else {
        descending = false;
      }
    } else {
      if (d == 0) {
        done_ = true;
        return std::nullopt;
      }
      --d;
      const auto i = static_cast<std::size_t>(d);
      if (bits_[i] == 0) {
        bits_[i] = 1;
        heights_[i + 1] = heights_[i] + 1;
        prefix_max_[i + 1] = std::max(prefix_max_[i], heights_[i + 1]);
        if (feasible(d + 1)) {
          ++d;
          descending = true;
        }
      }
    }
  }
}

std::vector<BitSeq> enumerate_bbs(int length) {
  std::vector<BitSeq> out;
  BbsStream stream(length);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

// --------------------------------------------------------- strip counting

namespace {

void check_strip_args(std::int64_t n, std::int64_t h) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "strip_paths: n must be >= 1");
  if (h < 1 || h > n) throw Error(ErrorCode::kBadArgument, "strip_paths: h must lie in [1, n]");
}

}  // namespace

BigCount strip_paths(std::int64_t n, std::int64_t h) {
  check_strip_args(n, h);
  if ((n - h) % 2 != 0) return 0;
  if (n == 1) return 1;
  if (h == 1) return 0;  // no room strictly between 0 and 1

  // The first step lands on 1 and the last leaves from h - 1; in between,
  // n - 2 steps stay in [1, h - 1]. ways[j] counts walks currently at j + 1.
  const auto width = static_cast<std::size_t>(h - 1);
  std::vector<BigCount> ways(width), next(width);
  ways[0] = 1;
  for (std::int64_t step = 0; step < n - 2; ++step) {
    for (std::size_t j = 0; j < width; ++j) {
      next[j] = 0;
      if (j > 0) next[j] += ways[j - 1];
      if (j + 1 < width) next[j] += ways[j + 1];
    }
    std::swap(ways, next);
  }
  return ways[width - 1];
}

BigCount strip_paths_reflection(std::int64_t n, std::int64_t h, const BinomialRow& row) {
  check_strip_args(n, h);
  if ((n - h) % 2 != 0) return 0;
  if (n == 1) return 1;
  if (h == 1) return 0;
  const std::int64_t m = n - 2;
  if (row.n() != m) throw Error(ErrorCode::kBadArgument, "strip_paths_reflection: row must be C(n-2, .)");

  // Walks of m steps from 1 to h - 1 avoiding 0 and h:
  //   sum_k N(h - 2 + 2kh) - N(h + 2kh),  N(d) = C(m, (m + d) / 2).
  auto displaced = [&](std::int64_t d) -> const BigCount& { return row[(m + d) / 2]; };
  BigCount total = 0;
  const std::int64_t reach = m / (2 * h) + 2;
  for (std::int64_t k = -reach; k <= reach; ++k) {
    const std::int64_t d_plus = h - 2 + 2 * k * h;
    const std::int64_t d_minus = h + 2 * k * h;
    if (d_plus >= -m && d_plus <= m) total += displaced(d_plus);
    if (d_minus >= -m && d_minus <= m) total -= displaced(d_minus);
  }
  return total;
}

BigCount strip_paths_reflection(std::int64_t n, std::int64_t h) {
  return strip_paths_reflection(n, h, BinomialRow(std::max<std::int64_t>(n - 2, 0)));
}

namespace {

template <typename PerHeight>
BigCount sum_over_heights(std::int64_t n, int threads, PerHeight&& per_height) {
  // Final heights share the parity of n.
  const std::int64_t first = n % 2 == 0 ? 2 : 1;
  const std::int64_t count = (n - first) / 2 + 1;
  std::vector<BigCount> partial(static_cast<std::size_t>(count));
  parallel_for(count, threads, [&](std::int64_t i) {
    partial[static_cast<std::size_t>(i)] = per_height(first + 2 * i);
  });
  BigCount total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace

BigCount count_bbs_dp(std::int64_t n, int threads) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "count_bbs_dp: n must be >= 1");
  return sum_over_heights(n, threads, [n](std::int64_t h) { return strip_paths(n, h); });
}

BigCount count_bbs_reflection(std::int64_t n, int threads) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "count_bbs_reflection: n must be >= 1");
  const BinomialRow row(std::max<std::int64_t>(n - 2, 0));
  return sum_over_heights(n, threads,
                          [&](std::int64_t h) { return strip_paths_reflection(n, h, row); });
}

SandwichBounds sandwich_bounds(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::kBadArgument, "sandwich_bounds: n must be >= 2");
  const std::int64_t n0 = n / 2;
  const std::int64_t n1 = n - n0;
  std::int64_t b = 1;
  while ((b + 1) * (b + 1) <= n0) ++b;
  SandwichBounds out{n, b, 0, 0};
  out.lower = bounded_walk_count(n0, b) * bounded_walk_count(n1, b);
  out.upper = ballot_count_height_range(n0, 0.5, n0) * ballot_count_height_range(n1, 0.5, n1);
  return out;
}

std::uint64_t count_bbs_exhaustive(int n) {
  if (n < 0 || n > 40) throw Error(ErrorCode::kLimitExceeded, "count_bbs_exhaustive: n must lie in [0, 40]");
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) count += is_bbs(mask, n) ? 1 : 0;
  return count;
}

}  // namespace mstd
