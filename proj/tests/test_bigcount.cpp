#include <doctest.h>

#include <random>

#include "mstd/bigcount.hpp"
#include "oracles.hpp"

using namespace mstd;

namespace {

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("binomial matches Pascal's triangle and clamps outside the row") {
  for (int n = 0; n <= 40; ++n) {
    for (int k = -2; k <= n + 2; ++k) {
      CHECK(binomial(n, k) == BigCount(static_cast<unsigned long>(oracle::choose(n, k))));
    }
  }
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("BinomialRow agrees with direct binomials") {
  for (std::int64_t n : {0, 1, 2, 7, 64, 301}) {
    const BinomialRow row(n);
    for (std::int64_t k = -1; k <= n + 1; ++k) CHECK(row[k] == binomial(n, k));
  }
}

TEST_CASE("pow2") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(to_string(pow2(70)) == "1180591620717411303424");
}

TEST_CASE("decimal rendering rounds half up and truncates on request") {
  CHECK(render_rounded(Rational(1, 3), 4) == "0.3333");
  CHECK(render_rounded(Rational(2, 3), 4) == "0.6667");
  CHECK(render_rounded(Rational(1, 8), 2) == "0.13");
  CHECK(render_truncated(Rational(1, 8), 2) == "0.12");
  CHECK(render_rounded(Rational(5, 1), 0) == "5");
  CHECK(render_rounded(Rational(1, 1000), 2) == "0.00");
  CHECK(render_rounded(Rational(999, 1000), 2) == "1.00");
  CHECK_THROWS(render_rounded(Rational(-1, 2), 3));
}

TEST_CASE("rendered decimals parse back to within half a unit in the last place") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> num(0, 1'000'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational value = q(num(gen), den(gen));
    const int digits = static_cast<int>(gen() % 15);
    const Rational back = parse_decimal(render_rounded(value, digits));
    Rational err = back - value;
    if (sgn(err) < 0) err = -err;
    BigCount scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    CHECK(err <= Rational(1, 2 * scale));
  }
}

TEST_CASE("parse_decimal") {
  CHECK(parse_decimal("1.0067268") == q(10067268, 10000000));
  CHECK(parse_decimal("12") == 12);
  CHECK(parse_decimal(".5") == Rational(1, 2));
  CHECK_THROWS(parse_decimal("1.2x"));
  CHECK_THROWS(parse_decimal(""));
}
