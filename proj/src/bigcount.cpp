#include "mstd/bigcount.hpp"

#include <stdexcept>

namespace mstd {

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BinomialRow::BinomialRow(std::int64_t n) : n_(n) {
  if (n < 0) throw std::invalid_argument("BinomialRow: negative row index");
  row_.resize(static_cast<std::size_t>(n) + 1);
  row_[0] = 1;
  // Only the left half is computed; the right half is filled by symmetry.
  const std::int64_t half = n / 2;
  for (std::int64_t k = 0; k < half; ++k) {
    BigCount next = row_[static_cast<std::size_t>(k)] * static_cast<unsigned long>(n - k);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
    row_[static_cast<std::size_t>(k + 1)] = std::move(next);
  }
  for (std::int64_t k = half + 1; k <= n; ++k) {
    row_[static_cast<std::size_t>(k)] = row_[static_cast<std::size_t>(n - k)];
  }
}

const BigCount& BinomialRow::operator[](std::int64_t k) const {
  if (k < 0 || k > n_) return zero_;
  return row_[static_cast<std::size_t>(k)];
}

BigCount pow2(std::uint64_t e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

std::string to_string(const BigCount& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

namespace {

BigCount pow10(int digits) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return out;
}

std::string format_scaled(const BigCount& scaled, int digits) {
  std::string body = scaled.get_str(10);
  if (digits == 0) return body;
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  return body;
}

void check_render_args(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("render: negative digit count");
  if (sgn(value) < 0) throw std::invalid_argument("render: negative value");
}

}  // namespace

std::string render_rounded(const Rational& value, int digits) {
  check_render_args(value, digits);
  // floor(value * 10^d + 1/2) = floor((2 * num * 10^d + den) / (2 * den))
  const BigCount scale = pow10(digits);
  BigCount num = 2 * value.get_num() * scale + value.get_den();
  BigCount den = 2 * value.get_den();
  BigCount q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return format_scaled(q, digits);
}

std::string render_truncated(const Rational& value, int digits) {
  check_render_args(value, digits);
  BigCount num = value.get_num() * pow10(digits);
  BigCount q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), value.get_den().get_mpz_t());
  return format_scaled(q, digits);
}

Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_decimal: empty input");
  const auto dot = text.find('.');
  const std::string whole = text.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  for (char c : whole + frac) {
    if (c < '0' || c > '9') throw std::invalid_argument("parse_decimal: bad digit in '" + text + "'");
  }
  BigCount num(whole.empty() ? "0" : whole, 10);
  BigCount scale = pow10(static_cast<int>(frac.size()));
  num = num * scale + (frac.empty() ? BigCount(0) : BigCount(frac, 10));
  Rational out(num, scale);
  out.canonicalize();
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace mstd
