#pragma once

// Exact integer and rational arithmetic shared by every counting module.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mstd {

/// Arbitrary-precision nonnegative count. Never rounded.
using BigCount = mpz_class;
using Rational = mpq_class;

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n (and n < 0).
BigCount binomial(std::int64_t n, std::int64_t k);

/// One full row C(n, 0..n), built by the multiplicative recurrence.
/// Lookups outside [0, n] return zero.
class BinomialRow {
 public:
  explicit BinomialRow(std::int64_t n);

  std::int64_t n() const { return n_; }
  const BigCount& operator[](std::int64_t k) const;

 private:
  std::int64_t n_;
  std::vector<BigCount> row_;
  BigCount zero_{0};
};

/// 2^e as an exact integer.
BigCount pow2(std::uint64_t e);

std::string to_string(const BigCount& value);
std::string to_string(const Rational& value);

/// Decimal rendering of a nonnegative rational with `digits` digits after
/// the point, rounded half-up from the exact value.
std::string render_rounded(const Rational& value, int digits);

/// Same, truncated toward zero.
std::string render_truncated(const Rational& value, int digits);

/// Parse a plain decimal ("1.0067", "12", "0.5") into an exact rational.
Rational parse_decimal(const std::string& text);

/// Nearest double; only for reporting, never for comparisons that matter.
double to_double(const Rational& value);

}  // namespace mstd
