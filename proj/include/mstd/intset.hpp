#pragma once

// Finite integer sets as bit vectors, with sumset / difference-set
// arithmetic done by word-sliced shift-or accumulation.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mstd {

/// A subset of the window [0, window_size - 1]. Bit i set iff i is a member.
///
/// Equality compares members only, so the same set built in two different
/// windows compares equal.
class IntSet {
 public:
  explicit IntSet(int window_size);

  static IntSet from_members(int window_size, std::span<const int> members);
  static IntSet from_members(int window_size, std::initializer_list<int> members);
  /// Bit i of `mask` is element i; requires window_size <= 64.
  static IntSet from_mask(int window_size, std::uint64_t mask);
  /// The interval [lo, hi] inside [0, window_size - 1].
  static IntSet interval(int window_size, int lo, int hi);

  int window_size() const { return window_size_; }
  bool contains(int x) const;
  bool empty() const;
  int size() const;
  int min() const;  // requires !empty()
  int max() const;  // requires !empty()
  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  void insert(int x);

  /// {x + shift}; every shifted member must stay in the window.
  IntSet shifted(int shift) const;
  /// {(window_size - 1) - x}.
  IntSet reflected() const;
  IntSet united(const IntSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IntSet& a, const IntSet& b);

 private:
  int window_size_;
  std::vector<std::uint64_t> words_;
};

/// A subset of [lo, hi] where lo may be negative. Used for difference sets.
class SignedIntSet {
 public:
  SignedIntSet(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool contains(int x) const;
  bool empty() const;
  int size() const;
  std::vector<int> members() const;

  void insert(int x);

  friend bool operator==(const SignedIntSet& a, const SignedIntSet& b);

 private:
  friend SignedIntSet diffset(const IntSet& s);
  int lo_;
  int hi_;
  std::vector<std::uint64_t> words_;
};

/// S + S over all ordered pairs, in the window [0, 2(n - 1)].
IntSet sumset(const IntSet& s);

/// S - S over all ordered pairs, in [-(n - 1), n - 1].
SignedIntSet diffset(const IntSet& s);

/// |S + S| > |S - S|. False for the empty set.
bool is_mstd(const IntSet& s);

struct SumDiffSizes {
  int sums = 0;
  int diffs = 0;

  bool mstd() const { return sums > diffs; }
};

/// Cardinalities of S + S and S - S without materializing either set.
SumDiffSizes sum_diff_sizes(const IntSet& s);

/// Single-word kernel for windows of at most 32 elements: bit i of `mask`
/// is element i. This is the census hot loop.
inline SumDiffSizes sum_diff_sizes(std::uint64_t mask, int window_size) {
  std::uint64_t sums = 0;
  std::uint64_t diffs = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    const int x = __builtin_ctzll(rest);
    sums |= mask << x;
    diffs |= mask << (window_size - 1 - x);
  }
  return {__builtin_popcountll(sums), __builtin_popcountll(diffs)};
}

/// Reusable scratch buffers for evaluating many sets of one window size.
class SumDiffKernel {
 public:
  explicit SumDiffKernel(int window_size);

  int window_size() const { return window_size_; }
  /// `words` holds the set, bit i = element i, exactly words_for(window) long.
  SumDiffSizes evaluate(std::span<const std::uint64_t> words);

 private:
  int window_size_;
  std::vector<std::uint64_t> reversed_;
  std::vector<std::uint64_t> sums_;
  std::vector<std::uint64_t> diffs_;
};

/// Number of 64-bit words needed for `bits` bits.
constexpr std::size_t words_for(int bits) {
  return bits <= 0 ? 0 : (static_cast<std::size_t>(bits) + 63) / 64;
}

}  // namespace mstd
