#pragma once

// Bidirectional ballot sequences: 0-1 sequences whose every prefix and every
// suffix has strictly more 1's than 0's. B(n) counts those of length n.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mstd/bigcount.hpp"
#include "mstd/walks.hpp"

namespace mstd {

bool is_bbs(const BitSeq& s);
/// Mask form; bit i of `mask` is element i.
bool is_bbs(std::uint64_t mask, int length);

/// Lazily yields the bidirectional ballot sequences of one length in
/// lexicographic order ('0' < '1'). Depth-first search, pruned so that every
/// branch explored reaches at least one sequence.
class BbsStream {
 public:
  explicit BbsStream(int length);

  std::optional<BitSeq> next();

 private:
  bool feasible(int depth) const;

  int length_;
  std::vector<std::uint8_t> bits_;
  std::vector<int> heights_;    // heights_[i] = height after i steps
  std::vector<int> prefix_max_; // max of heights_[0..i]
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<BitSeq> enumerate_bbs(int length);

/// Number of n-step walks from 0 to h with every interior height strictly
/// inside (0, h). Computed by dynamic programming over heights. Requires
/// n >= 1 and 1 <= h <= n; zero when n and h differ in parity.
BigCount strip_paths(std::int64_t n, std::int64_t h);

/// The same count as an alternating sum of binomials over the reflection
/// images of the two barriers. `row` must be C(n - 2, .) when n >= 2.
BigCount strip_paths_reflection(std::int64_t n, std::int64_t h, const BinomialRow& row);
BigCount strip_paths_reflection(std::int64_t n, std::int64_t h);

/// B(n) as the sum of strip_paths over final heights. O(n^3) big additions.
/// threads = 0 uses the hardware concurrency.
BigCount count_bbs_dp(std::int64_t n, int threads = 1);

/// B(n) as the sum of reflection counts over final heights.
BigCount count_bbs_reflection(std::int64_t n, int threads = 1);

struct SandwichBounds {
  std::int64_t n;
  std::int64_t b;  // common bound for both halves: floor(sqrt(floor(n/2)))
  BigCount lower;  // pairs of b-bounded halves, joined second-reversed
  BigCount upper;  // product of ballot-walk counts of the two halves
};

/// Lower and upper bounds on B(n) from splitting a sequence into halves of
/// lengths floor(n/2) and ceil(n/2). Requires n >= 2.
SandwichBounds sandwich_bounds(std::int64_t n);

/// Exhaustive filter over all 2^n sequences (n <= 40).
std::uint64_t count_bbs_exhaustive(int n);

}  // namespace mstd
