#pragma once

// The explicit MSTD family S = L u M u R on [0, n-1]: fixed end blocks L
// and R, and a middle block M on [11, n-12] in which every prefix and every
// suffix holds a strict majority of members.

#include <optional>
#include <vector>

#include "mstd/bbs.hpp"
#include "mstd/intset.hpp"
#include "mstd/walks.hpp"

namespace mstd {

struct ConstructionParams {
  static constexpr int kLeft = 11;   // width of the left block [0, 10]
  static constexpr int kRight = 11;  // width of the right block [n-11, n-1]
  static constexpr int kMinWindow = 24;

  int n;

  explicit ConstructionParams(int window_size);

  int middle_lo() const { return kLeft; }
  int middle_hi() const { return n - kRight - 1; }
  int middle_length() const { return n - kLeft - kRight; }
};

/// A subset of the interval [lo, hi].
class MiddleSet {
 public:
  MiddleSet(int lo, int hi);
  MiddleSet(int lo, int hi, std::initializer_list<int> members);
  /// Member lo + i present iff bit i of `bits` is 1.
  static MiddleSet from_bits(int lo, const BitSeq& bits);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int length() const { return hi_ - lo_ + 1; }
  bool contains(int x) const;
  std::vector<int> members() const;
  BitSeq to_bits() const;

  void insert(int x);

 private:
  int lo_;
  int hi_;
  std::vector<std::uint8_t> present_;
};

/// L = {0, 2, 3, 7, 8, 9, 10}.
IntSet left_fixture();

/// R = {n-11, n-10, n-9, n-8, n-6, n-3, n-2, n-1} in the window [0, n-1].
IntSet right_fixture(int n);

/// Every prefix and every suffix of [lo, hi] has strictly more than half of
/// its elements in M. Counts members directly rather than via walks.
bool has_majority_prefixes_suffixes(const MiddleSet& m);

/// After shifting [lo, hi] to [1, m], M + M == [2, 2m].
bool middle_sum_complete(const MiddleSet& m);

/// L u M u R. Validates n >= 24, M inside [11, n-12], and the majority
/// condition; throws mstd::Error with kBadWindow, kMiddleOutOfRange or
/// kMajorityViolated respectively.
IntSet construct(int n, const MiddleSet& m);

/// Streams construct(n, M) over every qualifying M, ordered
/// lexicographically by the bit sequence of M.
class FamilyStream {
 public:
  explicit FamilyStream(int n);

  std::optional<IntSet> next();

 private:
  ConstructionParams params_;
  IntSet ends_;
  BbsStream middles_;
};

std::vector<IntSet> enumerate_family(int n);

}  // namespace mstd
