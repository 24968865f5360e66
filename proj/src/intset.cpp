#include "mstd/intset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mstd/error.hpp"

namespace mstd {

namespace {

void check_window(int window_size) {
  if (window_size < 1) {
    throw Error(ErrorCode::kBadWindow, "IntSet: window size must be positive");
  }
}

int popcount(std::span<const std::uint64_t> words) {
  int total = 0;
  for (auto w : words) total += std::popcount(w);
  return total;
}

template <typename Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::uint64_t rest = words[i]; rest != 0; rest &= rest - 1) {
      fn(static_cast<int>(i * 64) + std::countr_zero(rest));
    }
  }
}

// out |= a << shift, discarding bits that fall beyond out.
void or_shifted(std::span<const std::uint64_t> a, int shift, std::span<std::uint64_t> out) {
  const std::size_t word_shift = static_cast<std::size_t>(shift) / 64;
  const int bit_shift = shift % 64;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t w = a[i];
    if (w == 0) continue;
    const std::size_t lo = i + word_shift;
    if (lo >= out.size()) break;
    out[lo] |= w << bit_shift;
    if (bit_shift != 0 && lo + 1 < out.size()) out[lo + 1] |= w >> (64 - bit_shift);
  }
}

// out = OR over set bits j of b of (a << j).
void shift_or(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
              std::span<std::uint64_t> out) {
  std::fill(out.begin(), out.end(), 0);
  for_each_bit(b, [&](int j) { or_shifted(a, j, out); });
}

void reverse_into(std::span<const std::uint64_t> words, int window_size,
                  std::span<std::uint64_t> out) {
  std::fill(out.begin(), out.end(), 0);
  for_each_bit(words, [&](int x) {
    const int r = window_size - 1 - x;
    out[static_cast<std::size_t>(r) / 64] |= std::uint64_t{1} << (r % 64);
  });
}

}  // namespace

// ---------------------------------------------------------------- IntSet

IntSet::IntSet(int window_size) : window_size_(window_size) {
  check_window(window_size);
  words_.assign(words_for(window_size), 0);
}

IntSet IntSet::from_members(int window_size, std::span<const int> members) {
  IntSet out(window_size);
  for (int x : members) out.insert(x);
  return out;
}

IntSet IntSet::from_members(int window_size, std::initializer_list<int> members) {
  return from_members(window_size, std::span<const int>(members.begin(), members.size()));
}

IntSet IntSet::from_mask(int window_size, std::uint64_t mask) {
  IntSet out(window_size);
  if (window_size > 64) throw Error(ErrorCode::kBadWindow, "IntSet::from_mask: window exceeds 64");
  if (window_size < 64 && (mask >> window_size) != 0) {
    throw Error(ErrorCode::kBadArgument, "IntSet::from_mask: mask has bits outside the window");
  }
  out.words_[0] = mask;
  return out;
}

IntSet IntSet::interval(int window_size, int lo, int hi) {
  IntSet out(window_size);
  for (int x = lo; x <= hi; ++x) out.insert(x);
  return out;
}

bool IntSet::contains(int x) const {
  if (x < 0 || x >= window_size_) return false;
  return (words_[static_cast<std::size_t>(x) / 64] >> (x % 64)) & 1u;
}

bool IntSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

int IntSet::size() const { return popcount(words_); }

int IntSet::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  }
  throw Error(ErrorCode::kBadArgument, "IntSet::min of empty set");
}

int IntSet::max() const {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != 0) return static_cast<int>(i * 64) + 63 - std::countl_zero(words_[i]);
  }
  throw Error(ErrorCode::kBadArgument, "IntSet::max of empty set");
}

std::vector<int> IntSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_bit(words_, [&](int x) { out.push_back(x); });
  return out;
}

void IntSet::insert(int x) {
  if (x < 0 || x >= window_size_) {
    throw Error(ErrorCode::kBadArgument,
                "IntSet: element " + std::to_string(x) + " outside window [0, " +
                    std::to_string(window_size_ - 1) + "]");
  }
  words_[static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (x % 64);
}

IntSet IntSet::shifted(int shift) const {
  IntSet out(window_size_);
  for_each_bit(words_, [&](int x) { out.insert(x + shift); });
  return out;
}

IntSet IntSet::reflected() const {
  IntSet out(window_size_);
  reverse_into(words_, window_size_, out.words_);
  return out;
}

IntSet IntSet::united(const IntSet& other) const {
  IntSet out(std::max(window_size_, other.window_size_));
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    if (i < words_.size()) out.words_[i] |= words_[i];
    if (i < other.words_.size()) out.words_[i] |= other.words_[i];
  }
  return out;
}

std::string IntSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_bit(words_, [&](int x) {
    if (!first) os << ',';
    os << x;
    first = false;
  });
  os << '}';
  return os.str();
}

bool operator==(const IntSet& a, const IntSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    if (wa != wb) return false;
  }
  return true;
}

// ---------------------------------------------------------- SignedIntSet

SignedIntSet::SignedIntSet(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw Error(ErrorCode::kBadArgument, "SignedIntSet: lo > hi");
  words_.assign(words_for(hi - lo + 1), 0);
}

bool SignedIntSet::contains(int x) const {
  if (x < lo_ || x > hi_) return false;
  const int i = x - lo_;
  return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
}

bool SignedIntSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

int SignedIntSet::size() const { return popcount(words_); }

std::vector<int> SignedIntSet::members() const {
  std::vector<int> out;
  for_each_bit(words_, [&](int i) { out.push_back(i + lo_); });
  return out;
}

void SignedIntSet::insert(int x) {
  if (x < lo_ || x > hi_) throw Error(ErrorCode::kBadArgument, "SignedIntSet: element outside range");
  const int i = x - lo_;
  words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
}

bool operator==(const SignedIntSet& a, const SignedIntSet& b) {
  return a.members() == b.members();
}

// ------------------------------------------------------------ arithmetic

IntSet sumset(const IntSet& s) {
  IntSet out(2 * s.window_size() - 1);
  std::vector<std::uint64_t> acc(words_for(2 * s.window_size() - 1));
  shift_or(s.words(), s.words(), acc);
  for_each_bit(acc, [&](int x) { out.insert(x); });
  return out;
}

SignedIntSet diffset(const IntSet& s) {
  const int n = s.window_size();
  SignedIntSet out(-(n - 1), n - 1);
  // a - b + (n - 1) = a + reversed(b): shift-or of S against its reversal.
  std::vector<std::uint64_t> rev(words_for(n));
  reverse_into(s.words(), n, rev);
  shift_or(s.words(), rev, out.words_);
  return out;
}

bool is_mstd(const IntSet& s) { return sum_diff_sizes(s).mstd(); }

SumDiffSizes sum_diff_sizes(const IntSet& s) {
  if (s.window_size() <= 32) return sum_diff_sizes(s.words()[0], s.window_size());
  SumDiffKernel kernel(s.window_size());
  return kernel.evaluate(s.words());
}

// ---------------------------------------------------------- SumDiffKernel

SumDiffKernel::SumDiffKernel(int window_size)
    : window_size_(window_size),
      reversed_(words_for(window_size)),
      sums_(words_for(2 * window_size - 1)),
      diffs_(words_for(2 * window_size - 1)) {
  check_window(window_size);
}

SumDiffSizes SumDiffKernel::evaluate(std::span<const std::uint64_t> words) {
  if (window_size_ <= 32) return sum_diff_sizes(words[0], window_size_);
  reverse_into(words, window_size_, reversed_);
  shift_or(words, words, sums_);
  shift_or(words, reversed_, diffs_);
  return {popcount(sums_), popcount(diffs_)};
}

}  // namespace mstd
