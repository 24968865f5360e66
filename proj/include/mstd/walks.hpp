#pragma once

// Ballot sequences and their lattice walks: predicates, exact counts,
// b-bounded walks, and the reflection map used in the lower-bound count.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mstd/bigcount.hpp"

namespace mstd {

/// A 0-1 sequence. A 1 is an up-step (+1), a 0 a down-step (-1).
class BitSeq {
 public:
  BitSeq() = default;
  explicit BitSeq(std::vector<std::uint8_t> bits);

  /// "11011" -> 1,1,0,1,1. Any character other than '0'/'1' throws.
  static BitSeq parse(std::string_view text);
  /// Bit i of `mask` is element i (element 0 is the first step).
  static BitSeq from_mask(std::uint64_t mask, int length);

  int length() const { return static_cast<int>(bits_.size()); }
  int ones() const;
  int zeros() const { return length() - ones(); }
  std::uint8_t operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  BitSeq reversed() const;
  std::string to_string() const;

  friend bool operator==(const BitSeq&, const BitSeq&) = default;
  friend auto operator<=>(const BitSeq&, const BitSeq&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Heights S_0 = 0, S_i = S_{i-1} +/- 1 of the walk of a BitSeq.
class Walk {
 public:
  explicit Walk(const BitSeq& seq);
  /// From explicit heights; throws unless heights[0] == 0 and every step is +/-1.
  static Walk from_heights(std::vector<int> heights);

  int steps() const { return static_cast<int>(heights_.size()) - 1; }
  int height(int i) const { return heights_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& heights() const { return heights_; }
  int final_height() const { return heights_.back(); }
  int max_height() const;
  int min_height() const;

  BitSeq to_bits() const;

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  Walk() = default;
  std::vector<int> heights_{0};
};

/// Every nonempty prefix has strictly more 1's than 0's.
bool is_ballot(const BitSeq& s);
/// Mask form of is_ballot; bit i of `mask` is element i.
bool is_ballot(std::uint64_t mask, int length);

/// Number of ballot sequences with p ones and q zeros: (p-q)/(p+q) C(p+q, p).
/// Requires p > q >= 0.
BigCount ballot_count(std::int64_t p, std::int64_t q);

/// Number of n-step ballot walks whose final height lies in [a, b]:
/// C(n-1, ceil((a+n)/2) - 1) - C(n-1, floor((b+n)/2)). Requires n >= 1 and
/// 0 <= a < b.
BigCount ballot_count_height_range(std::int64_t n, double a, double b);

/// Ballot walk that never exceeds height 2b and ends above b.
bool is_b_bounded(const BitSeq& s, int b);
bool is_b_bounded(std::uint64_t mask, int length, int b);

/// C(n-1, ceil((n+b-1)/2)) - C(n-1, floor(n/2)+b) - C(n-1, ceil(n/2)+b),
/// clamped at zero. Lower bound on the number of b-bounded n-step walks.
BigCount bounded_lower_bound(std::int64_t n, std::int64_t b);

/// Exact number of b-bounded n-step walks, by dynamic programming over the
/// heights 1..2b. Requires n >= 0 and b >= 1.
BigCount bounded_walk_count(std::int64_t n, std::int64_t b);

/// Reflects the part of `w` after its last visit to height 2b+1 about that
/// line. Domain: ballot walks that rise above 2b and end in (b, 2b]. The
/// image is a ballot walk ending at height >= 2b+2.
Walk reflect_after_last_exceed(const Walk& w, int b);

/// w1 followed by w2 in reverse order (no complement).
BitSeq concat_with_reversed(const BitSeq& w1, const BitSeq& w2);

}  // namespace mstd
