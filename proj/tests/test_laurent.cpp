#include <doctest.h>

#include <random>

#include "coxkit/laurent.hpp"
#include "coxkit/linalg.hpp"
#include "oracles.hpp"

using namespace coxkit;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), coef(-4, 4), count(0, 4);
  LaurentPoly p;
  for (int i = count(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("ring laws") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(parse_laurent(a.to_string()) == a);
  }
}

TEST_CASE("formatting") {
  const LaurentPoly q = LaurentPoly::q();
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((q.pow(-1) - 1).to_string() == "-1 + q^-1");
  CHECK((1 - q * q).to_string() == "-q^2 + 1");
  CHECK((q + 1).to_string() == "q + 1");
  CHECK(LaurentPoly::monomial(2, 3).to_string() == "3q^2");
}

TEST_CASE("powers and evaluation") {
  const LaurentPoly q = LaurentPoly::q();
  CHECK((q + 1).pow(2) == q * q + 2 * q + 1);
  CHECK(q.pow(-2) == LaurentPoly::monomial(-2));
  CHECK_THROWS((q + 1).pow(-1));
  CHECK(q_power_minus_sign(2) == q * q - 1);
  CHECK(q_power_minus_sign(-1) == q.pow(-1) + 1);
  CHECK(q_power_minus_sign(0) == LaurentPoly());
  CHECK((q * q - 1).evaluate(Rational(2)) == 3);
  CHECK((q.pow(-1) + 1).evaluate(Rational(2)) == Rational(3, 2));
  CHECK_THROWS(q.pow(-1).evaluate(Rational(0)));
}

TEST_CASE("overflow is detected") {
  const LaurentPoly big = LaurentPoly::monomial(0, INT64_MAX);
  CHECK_THROWS_AS(big + 1, std::overflow_error);
  CHECK_THROWS_AS(big * 2, std::overflow_error);
}

TEST_CASE("exact rank against Gaussian elimination") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-2, 2), dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = dim(rng), c = dim(rng);
    IntMatrix m(r, std::vector<BigInt>(c));
    std::vector<std::vector<Rational>> q(r, std::vector<Rational>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        // Repeat rows now and then so that rank deficiency actually occurs.
        const int v = (i > 0 && trial % 3 == 0) ? static_cast<int>(m[i - 1][j]) * 2 : entry(rng);
        m[i][j] = v;
        q[i][j] = v;
      }
    CHECK(rational_rank(m) == oracle::gauss_rank(q));
    std::vector<std::vector<Rational>> halves = q;
    for (auto& row : halves)
      for (auto& x : row) x /= 3;
    CHECK(rational_rank(halves) == oracle::gauss_rank(q));
  }
}
