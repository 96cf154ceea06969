#include "stonetile/golden.hpp"

#include <doctest.h>

#include <random>

using stonetile::GoldenNumber;
using stonetile::Rational;

namespace {

GoldenNumber gn(long rat_num, long rat_den, long gold_num, long gold_den) {
  return GoldenNumber(Rational(rat_num, rat_den), Rational(gold_num, gold_den));
}

GoldenNumber gn(long rat, long gold) { return gn(rat, 1, gold, 1); }

std::mt19937 rng(20260826);

GoldenNumber random_golden() {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  return gn(num(rng), den(rng), num(rng), den(rng));
}

}  // namespace

TEST_CASE("addition") {
  GoldenNumber tau = GoldenNumber::tau();
  CHECK(tau + (tau - GoldenNumber::one()) == gn(-1, 2));
  GoldenNumber x = random_golden();
  CHECK(x + GoldenNumber::zero() == x);

  // sum of the four ms4 volumes: (16 tau + 10)/12
  GoldenNumber sum = GoldenNumber::parse("1/6 + 1/3*tau") +
                     GoldenNumber::parse("1/3 + 1/2*tau") +
                     GoldenNumber::parse("1/4 + 1/3*tau") +
                     GoldenNumber::parse("1/12 + 1/6*tau");
  CHECK(sum == gn(10, 12, 16, 12));
}

TEST_CASE("multiplication reduces by tau^2 = tau + 1") {
  GoldenNumber tau = GoldenNumber::tau();
  CHECK(tau * tau == gn(1, 1));
  CHECK(tau * (tau - GoldenNumber::one()) == GoldenNumber::one());
  CHECK(gn(1, 2) * gn(1, 2) == gn(5, 8));  // (2 tau + 1)^2 = 8 tau + 5
}

TEST_CASE("inverse") {
  GoldenNumber tau = GoldenNumber::tau();
  CHECK(tau.inverse() == tau - GoldenNumber::one());
  CHECK(gn(2, 0).inverse() == gn(1, 2, 0, 1));
  // (2 tau + 1)^-1 = 2 tau - 3, since (2 tau + 1)(2 tau - 3) = 1
  CHECK(gn(1, 2).inverse() == gn(-3, 2));
  CHECK(gn(1, 2) * gn(-3, 2) == GoldenNumber::one());
  CHECK_THROWS_AS(GoldenNumber::zero().inverse(), std::domain_error);
}

TEST_CASE("conjugation") {
  GoldenNumber tau = GoldenNumber::tau();
  CHECK(tau.conj() == gn(1, -1));
  CHECK(gn(1, 2).conj() == gn(3, -2));
  // componentwise on the Dehn coefficient vector (tau, 2, tau-1, -tau)
  CHECK(gn(0, 1).conj() == gn(1, -1));
  CHECK(gn(2, 0).conj() == gn(2, 0));
  CHECK(gn(-1, 1).conj() == gn(0, -1));
  CHECK(gn(0, -1).conj() == gn(-1, 1));
}

TEST_CASE("exact sign") {
  GoldenNumber tau = GoldenNumber::tau();
  CHECK((tau - GoldenNumber::one()).sign() == 1);
  CHECK(GoldenNumber::zero().sign() == 0);
  CHECK(gn(2, -1).sign() == 1);   // 2 - tau > 0
  CHECK(gn(1, -1).sign() == -1);  // 1 - tau < 0
  CHECK(gn(-3, 2).sign() == 1);   // 2 tau - 3 ~ 0.236
  CHECK(gn(3, -2).sign() == -1);

  // interval oracle: sign must agree with the sign of a + b * 1.6180339887
  for (int i = 0; i < 500; ++i) {
    GoldenNumber x = random_golden();
    double approx = x.to_double();
    if (std::abs(approx) > 1e-6) CHECK(x.sign() == (approx > 0 ? 1 : -1));
  }
}

TEST_CASE("field axioms on random inputs") {
  for (int i = 0; i < 200; ++i) {
    GoldenNumber x = random_golden(), y = random_golden(), z = random_golden();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == GoldenNumber::one());
  }
}

TEST_CASE("conjugation is a ring automorphism and an involution") {
  for (int i = 0; i < 200; ++i) {
    GoldenNumber x = random_golden(), y = random_golden();
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(x.conj().conj() == x);
    CHECK((x * x.conj()).gold() == 0);  // norm is rational
  }
}

TEST_CASE("order is compatible with addition and positive scaling") {
  for (int i = 0; i < 200; ++i) {
    GoldenNumber x = random_golden(), y = random_golden(), z = random_golden();
    if (x < y) {
      CHECK(x + z < y + z);
      if (z.sign() > 0) CHECK(x * z < y * z);
    }
  }
}

TEST_CASE("powers of tau follow the Fibonacci form") {
  stonetile::Integer fib_prev = 0, fib = 1;  // F(0), F(1)
  GoldenNumber power = GoldenNumber::tau();
  for (int n = 1; n <= 40; ++n) {
    CHECK(power == GoldenNumber(Rational(fib_prev), Rational(fib)));
    GoldenNumber by_pow = GoldenNumber::tau().pow(n);
    CHECK(by_pow == power);
    power *= GoldenNumber::tau();
    stonetile::Integer next = fib + fib_prev;
    fib_prev = fib;
    fib = next;
  }
}

TEST_CASE("parse and render round-trip") {
  const char* cases[] = {"0",      "tau",          "-tau",       "2*tau - 1",
                         "1/6 + 1/3*tau", "-5 - 5*tau", "7/3", "-2/5*tau"};
  for (const char* text : cases) {
    GoldenNumber x = GoldenNumber::parse(text);
    CHECK(GoldenNumber::parse(x.str()) == x);
  }
  CHECK(GoldenNumber::parse("2*tau+1") == gn(1, 2));
  CHECK(GoldenNumber::parse("  -5* tau ") == gn(0, -5));
  CHECK(gn(10, 12, 16, 12).str() == "5/6 + 4/3*tau");
  CHECK_THROWS_AS(GoldenNumber::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GoldenNumber::parse("2*pi"), std::invalid_argument);
  for (int i = 0; i < 100; ++i) {
    GoldenNumber x = random_golden();
    CHECK(GoldenNumber::parse(x.str()) == x);
  }
}
