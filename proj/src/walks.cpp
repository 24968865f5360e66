#include "mstd/walks.hpp"

#include <algorithm>
#include <cmath>

#include "mstd/error.hpp"

namespace mstd {

// ---------------------------------------------------------------- BitSeq

BitSeq::BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorCode::kBadArgument, "BitSeq: entries must be 0 or 1");
  }
}

BitSeq BitSeq::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kBadArgument, "BitSeq: unexpected character '" + std::string(1, c) + "'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return BitSeq(std::move(bits));
}

BitSeq BitSeq::from_mask(std::uint64_t mask, int length) {
  if (length < 0 || length > 64) throw Error(ErrorCode::kBadArgument, "BitSeq::from_mask: length out of range");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return BitSeq(std::move(bits));
}

int BitSeq::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

BitSeq BitSeq::reversed() const {
  BitSeq out;
  out.bits_.assign(bits_.rbegin(), bits_.rend());
  return out;
}

std::string BitSeq::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

// ------------------------------------------------------------------ Walk

Walk::Walk(const BitSeq& seq) {
  heights_.reserve(static_cast<std::size_t>(seq.length()) + 1);
  int h = 0;
  for (auto b : seq.bits()) {
    h += b ? 1 : -1;
    heights_.push_back(h);
  }
}

Walk Walk::from_heights(std::vector<int> heights) {
  if (heights.empty() || heights.front() != 0) {
    throw Error(ErrorCode::kBadArgument, "Walk: heights must start at 0");
  }
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (std::abs(heights[i] - heights[i - 1]) != 1) {
      throw Error(ErrorCode::kBadArgument, "Walk: steps must be +/-1");
    }
  }
  Walk w;
  w.heights_ = std::move(heights);
  return w;
}

int Walk::max_height() const { return *std::max_element(heights_.begin(), heights_.end()); }

int Walk::min_height() const { return *std::min_element(heights_.begin(), heights_.end()); }

BitSeq Walk::to_bits() const {
  std::vector<std::uint8_t> bits;
  bits.reserve(heights_.size() - 1);
  for (std::size_t i = 1; i < heights_.size(); ++i) {
    bits.push_back(heights_[i] > heights_[i - 1] ? 1 : 0);
  }
  return BitSeq(std::move(bits));
}

// ------------------------------------------------------------ predicates

bool is_ballot(const BitSeq& s) {
  int h = 0;
  for (auto b : s.bits()) {
    h += b ? 1 : -1;
    if (h <= 0) return false;
  }
  return true;
}

bool is_ballot(std::uint64_t mask, int length) {
  int h = 0;
  for (int i = 0; i < length; ++i) {
    h += ((mask >> i) & 1u) ? 1 : -1;
    if (h <= 0) return false;
  }
  return true;
}

bool is_b_bounded(const BitSeq& s, int b) {
  int h = 0;
  for (auto bit : s.bits()) {
    h += bit ? 1 : -1;
    if (h <= 0 || h > 2 * b) return false;
  }
  return h > b;
}

bool is_b_bounded(std::uint64_t mask, int length, int b) {
  int h = 0;
  for (int i = 0; i < length; ++i) {
    h += ((mask >> i) & 1u) ? 1 : -1;
    if (h <= 0 || h > 2 * b) return false;
  }
  return h > b;
}

// ---------------------------------------------------------------- counts

BigCount ballot_count(std::int64_t p, std::int64_t q) {
  if (q < 0 || p <= q) throw Error(ErrorCode::kBadArgument, "ballot_count: requires p > q >= 0");
  BigCount out = binomial(p + q, p) * static_cast<unsigned long>(p - q);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(p + q));
  return out;
}

BigCount ballot_count_height_range(std::int64_t n, double a, double b) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "ballot_count_height_range: n must be >= 1");
  if (!(a >= 0) || !(a < b)) {
    throw Error(ErrorCode::kBadArgument, "ballot_count_height_range: requires 0 <= a < b");
  }
  const double nd = static_cast<double>(n);
  // Endpoints beyond n only push the binomials to zero; keep indices finite.
  const double a_eff = std::min(a, nd + 2);
  const auto lower = static_cast<std::int64_t>(std::ceil((a_eff + nd) / 2)) - 1;
  const double b_eff = std::min(b, nd + 2);
  const auto upper = static_cast<std::int64_t>(std::floor((b_eff + nd) / 2));
  return binomial(n - 1, lower) - binomial(n - 1, upper);
}

BigCount bounded_lower_bound(std::int64_t n, std::int64_t b) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "bounded_lower_bound: n must be >= 1");
  if (b < 1) throw Error(ErrorCode::kBadArgument, "bounded_lower_bound: b must be positive");
  const std::int64_t half_up = (n + b - 1 + 1) / 2;  // ceil((n + b - 1) / 2)
  BigCount value = binomial(n - 1, half_up) - binomial(n - 1, n / 2 + b) -
                   binomial(n - 1, (n + 1) / 2 + b);
  if (sgn(value) < 0) value = 0;
  return value;
}

BigCount bounded_walk_count(std::int64_t n, std::int64_t b) {
  if (n < 0) throw Error(ErrorCode::kBadArgument, "bounded_walk_count: n must be >= 0");
  if (b < 1) throw Error(ErrorCode::kBadArgument, "bounded_walk_count: b must be positive");
  if (n == 0) return 0;
  // ways[h] for h in 1..2b; slots 0 and 2b+1 are never written and stay zero.
  const auto top = static_cast<std::size_t>(2 * b);
  std::vector<BigCount> ways(top + 2, 0), next(top + 2, 0);
  ways[1] = 1;
  for (std::int64_t step = 1; step < n; ++step) {
    for (std::size_t h = 1; h <= top; ++h) next[h] = ways[h - 1] + ways[h + 1];
    ways.swap(next);
  }
  BigCount total = 0;
  for (auto h = static_cast<std::size_t>(b) + 1; h <= top; ++h) total += ways[h];
  return total;
}

// ------------------------------------------------------------ reflection

Walk reflect_after_last_exceed(const Walk& w, int b) {
  if (b < 1) throw Error(ErrorCode::kBadArgument, "reflect_after_last_exceed: b must be positive");
  const auto& h = w.heights();
  const int top = 2 * b;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] <= 0) throw Error(ErrorCode::kOutsideDomain, "reflect_after_last_exceed: not a ballot walk");
  }
  if (w.steps() == 0 || w.final_height() <= b || w.final_height() > top) {
    throw Error(ErrorCode::kOutsideDomain, "reflect_after_last_exceed: walk must end in (b, 2b]");
  }
  int last = -1;
  for (int i = 0; i < static_cast<int>(h.size()); ++i) {
    if (h[static_cast<std::size_t>(i)] > top) last = i;
  }
  if (last < 0) throw Error(ErrorCode::kOutsideDomain, "reflect_after_last_exceed: walk never rises above 2b");

  // The walk ends at or below 2b, so the last point above 2b sits exactly on 2b+1.
  const int line = top + 1;
  std::vector<int> out(h);
  for (std::size_t i = static_cast<std::size_t>(last) + 1; i < out.size(); ++i) out[i] = 2 * line - h[i];
  return Walk::from_heights(std::move(out));
}

BitSeq concat_with_reversed(const BitSeq& w1, const BitSeq& w2) {
  std::vector<std::uint8_t> bits(w1.bits());
  bits.insert(bits.end(), w2.bits().rbegin(), w2.bits().rend());
  return BitSeq(std::move(bits));
}

}  // namespace mstd
