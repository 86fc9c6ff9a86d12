#include <cmath>
#include <random>

#include "doctest.h"
#include "platonic/error.hpp"
#include "platonic/qsqrt5.hpp"

using platonic::QSqrt5;

namespace {

QSqrt5 q(long an, long ad, long bn, long bd) {
  return {mpq_class(an, static_cast<unsigned long>(ad)), mpq_class(bn, static_cast<unsigned long>(bd))};
}

// small rationals, occasionally zero in either slot
QSqrt5 random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<int> pick(0, 9);
  const long a = pick(rng) == 0 ? 0 : num(rng);
  const long b = pick(rng) == 0 ? 0 : num(rng);
  return q(a, den(rng), b, den(rng));
}

}  // namespace

TEST_CASE("mul examples") {
  const QSqrt5 tau = QSqrt5::golden();
  CHECK(tau == q(1, 2, 1, 2));
  CHECK(mul(tau, tau) == q(3, 2, 1, 2));
  CHECK(mul(tau, tau) == tau + 1);
  const QSqrt5 x = q(-7, 3, 2, 5);
  CHECK(mul(QSqrt5(1), x) == x);
  CHECK(mul(QSqrt5::sqrt5(), QSqrt5::sqrt5()) == QSqrt5(5));
}

TEST_CASE("invert examples") {
  CHECK(invert(QSqrt5::sqrt5()) == q(0, 1, 1, 5));
  CHECK(invert(QSqrt5(2)) == q(1, 2, 0, 1));
  const QSqrt5 tau = QSqrt5::golden();
  CHECK(invert(tau) == q(-1, 2, 1, 2));
  CHECK(invert(tau) == tau - 1);
  CHECK_THROWS_AS(invert(QSqrt5(0)), platonic::DivisionByZero);
  CHECK_THROWS_AS(QSqrt5(1) / QSqrt5(0), platonic::DivisionByZero);
}

TEST_CASE("sign examples") {
  CHECK(sign(q(-1, 2, 1, 2)) == 1);
  CHECK(sign(QSqrt5(0)) == 0);
  CHECK(sign(q(3, 1, -1, 1)) == 1);
  CHECK(sign(q(2, 1, -1, 1)) == -1);  // 4 < 5
  CHECK(sign(q(-3, 1, 1, 1)) == -1);
  CHECK(sign(q(0, 1, -1, 7)) == -1);
}

TEST_CASE("to_double examples") {
  CHECK(to_double(QSqrt5::golden()) == doctest::Approx(1.6180339887498949));
  CHECK(to_double(QSqrt5(0)) == 0.0);
  CHECK(to_double(QSqrt5(5)) == 5.0);
  // near-cancellation keeps relative accuracy: 161/72 - sqrt5 ~ 1.9e-5
  const QSqrt5 x = q(161, 72, -1, 1);
  CHECK(to_double(x) == doctest::Approx(161.0 / 72.0 - std::sqrt(5.0)).epsilon(1e-9));
}

TEST_CASE("canonical representation") {
  const QSqrt5 x(mpq_class(6, 4), mpq_class(-3, -9));
  CHECK(x.rational() == mpq_class(3, 2));
  CHECK(x.irrational() == mpq_class(1, 3));
  CHECK(x.rational().get_den() > 0);
  CHECK(x == q(3, 2, 1, 3));
  CHECK(std::hash<QSqrt5>{}(x) == std::hash<QSqrt5>{}(q(3, 2, 1, 3)));
}

TEST_CASE("text round trip") {
  CHECK(QSqrt5(-1).to_string() == "-1");
  CHECK(q(-1, 2, 0, 1).to_string() == "-1/2");
  CHECK(QSqrt5::sqrt5().to_string() == "√5");
  CHECK((-QSqrt5::sqrt5()).to_string() == "-√5");
  CHECK(q(0, 1, 1, 2).to_string() == "1/2√5");
  CHECK(q(3, 1, 1, 2).to_string() == "3 + 1/2√5");
  CHECK(q(1, 2, -1, 1).to_string() == "1/2 - √5");
  CHECK(QSqrt5(0).to_string() == "0");

  CHECK(QSqrt5::parse("1/2 + 1/2sqrt5") == QSqrt5::golden());
  CHECK(QSqrt5::parse(" -3/4 ") == q(-3, 4, 0, 1));
  CHECK(QSqrt5::parse("-√5") == q(0, 1, -1, 1));
  CHECK_THROWS_AS(QSqrt5::parse(""), platonic::ParseError);
  CHECK_THROWS_AS(QSqrt5::parse("1/0"), platonic::ParseError);
  CHECK_THROWS_AS(QSqrt5::parse("abc"), platonic::ParseError);
  CHECK_THROWS_AS(QSqrt5::parse("1 + "), platonic::ParseError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const QSqrt5 x = random_element(rng);
    CHECK(QSqrt5::parse(x.to_string()) == x);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20241016);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const QSqrt5 x = random_element(rng);
    const QSqrt5 y = random_element(rng);
    const QSqrt5 z = random_element(rng);
    if (x + y != y + x) ++failures;
    if (x * y != y * x) ++failures;
    if ((x + y) + z != x + (y + z)) ++failures;
    if ((x * y) * z != x * (y * z)) ++failures;
    if (x * (y + z) != x * y + x * z) ++failures;
    if (x - x != QSqrt5(0)) ++failures;
    if (!x.is_zero() && mul(invert(x), x) != QSqrt5(1)) ++failures;
    // norm is multiplicative
    if ((x * y).norm() != x.norm() * y.norm()) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("sign agrees with floating value") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const QSqrt5 x = random_element(rng);
    const double f = to_double(x);
    if (std::abs(f) <= 1e-6) continue;
    ++checked;
    REQUIRE(sign(x) == (f > 0 ? 1 : -1));
  }
  CHECK(checked > 9000);
}

TEST_CASE("ordering is numeric") {
  const QSqrt5 tau = QSqrt5::golden();
  CHECK(QSqrt5(1) < tau);
  CHECK(tau < QSqrt5(2));
  CHECK(q(-1, 2, 1, 2) < QSqrt5(1));
  CHECK(q(9, 4, 0, 1) > QSqrt5::sqrt5());  // 81/16 > 5
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const QSqrt5 x = random_element(rng);
    const QSqrt5 y = random_element(rng);
    const double dx = to_double(x);
    const double dy = to_double(y);
    if (std::abs(dx - dy) > 1e-9) CHECK((x < y) == (dx < dy));
  }
}
