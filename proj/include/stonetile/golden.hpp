#pragma once

// Exact arithmetic in the quadratic field Q(tau), tau = (1+sqrt(5))/2.
// Values are pairs (rat, gold) representing rat + gold*tau with rational
// coefficients; multiplication reduces by tau^2 = tau + 1. All comparisons
// are exact, no floating point is involved anywhere in the arithmetic.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stonetile {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

class GoldenNumber {
 public:
  GoldenNumber() : rat_(0), gold_(0) {}
  GoldenNumber(Rational rat, Rational gold) : rat_(std::move(rat)), gold_(std::move(gold)) {
    rat_.canonicalize();
    gold_.canonicalize();
  }
  explicit GoldenNumber(Rational rat) : GoldenNumber(std::move(rat), Rational(0)) {}
  explicit GoldenNumber(long n) : rat_(n), gold_(0) {}

  static GoldenNumber tau() { return GoldenNumber(Rational(0), Rational(1)); }
  static GoldenNumber zero() { return GoldenNumber(); }
  static GoldenNumber one() { return GoldenNumber(Rational(1), Rational(0)); }

  const Rational& rat() const { return rat_; }
  const Rational& gold() const { return gold_; }

  bool is_zero() const { return rat_ == 0 && gold_ == 0; }
  bool is_rational() const { return gold_ == 0; }

  friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
    return GoldenNumber(x.rat_ + y.rat_, x.gold_ + y.gold_);
  }
  friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
    return GoldenNumber(x.rat_ - y.rat_, x.gold_ - y.gold_);
  }
  friend GoldenNumber operator-(const GoldenNumber& x) {
    return GoldenNumber(-x.rat_, -x.gold_);
  }

  // (a + b*tau)(c + d*tau) = ac + bd + (ad + bc + bd)*tau
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
    Rational bd = x.gold_ * y.gold_;
    return GoldenNumber(x.rat_ * y.rat_ + bd, x.rat_ * y.gold_ + x.gold_ * y.rat_ + bd);
  }

  GoldenNumber& operator+=(const GoldenNumber& y) { return *this = *this + y; }
  GoldenNumber& operator-=(const GoldenNumber& y) { return *this = *this - y; }
  GoldenNumber& operator*=(const GoldenNumber& y) { return *this = *this * y; }

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.rat_ == y.rat_ && x.gold_ == y.gold_;
  }
  friend bool operator!=(const GoldenNumber& x, const GoldenNumber& y) { return !(x == y); }

  // Galois conjugation sigma: tau -> 1 - tau, so a + b*tau -> (a+b) - b*tau.
  GoldenNumber conj() const { return GoldenNumber(rat_ + gold_, -gold_); }

  // Field norm x * sigma(x); always rational.
  Rational norm() const {
    GoldenNumber n = *this * conj();
    return n.rat_;
  }

  GoldenNumber inverse() const {
    if (is_zero()) throw std::domain_error("GoldenNumber: division by zero");
    GoldenNumber c = conj();
    Rational n = norm();
    return GoldenNumber(c.rat_ / n, c.gold_ / n);
  }

  friend GoldenNumber operator/(const GoldenNumber& x, const GoldenNumber& y) {
    return x * y.inverse();
  }

  // Exact sign of a + b*tau as a real number. Writes the value as
  // (u + v*sqrt(5))/2 with u = 2a+b, v = b, and decides mixed-sign cases
  // by comparing u^2 with 5 v^2.
  int sign() const {
    Rational u = 2 * rat_ + gold_;
    const Rational& v = gold_;
    int su = sgn(u), sv = sgn(v);
    if (su == 0) return sv;
    if (sv == 0) return su;
    if (su == sv) return su;
    // opposite signs: |u| vs sqrt(5)|v|
    int cmpsq = cmp(u * u, 5 * v * v);
    if (cmpsq == 0) return 0;  // unreachable for v != 0: sqrt(5) is irrational
    return cmpsq > 0 ? su : sv;
  }

  friend bool operator<(const GoldenNumber& x, const GoldenNumber& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const GoldenNumber& x, const GoldenNumber& y) { return y < x; }

  GoldenNumber pow(unsigned long n) const {
    GoldenNumber result = one();
    GoldenNumber base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      base *= base;
      n >>= 1;
    }
    return result;
  }

  // rat + gold * (1+sqrt(5))/2, for reporting only
  double to_double() const {
    return rat_.get_d() + gold_.get_d() * ((1.0 + std::sqrt(5.0)) / 2.0);
  }

  // Renders "a/b + c/d*tau", dropping zero parts; "0" for zero.
  std::string str() const;

  // Parses sums of terms "a/b" and "a/b*tau" (also bare "tau", "-tau").
  static GoldenNumber parse(std::string_view text);

 private:
  Rational rat_;
  Rational gold_;
};

inline std::string GoldenNumber::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (rat_ != 0) out = rat_.get_str();
  if (gold_ != 0) {
    Rational g = gold_;
    if (out.empty()) {
      if (g == -1)
        out = "-";
      else if (g != 1)
        out = g.get_str() + "*";
    } else {
      if (sgn(g) < 0) {
        out += " - ";
        g = -g;
      } else {
        out += " + ";
      }
      if (g != 1) out += g.get_str() + "*";
    }
    out += "tau";
  }
  return out;
}

inline GoldenNumber GoldenNumber::parse(std::string_view text) {
  GoldenNumber result;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("GoldenNumber: empty string");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) {
      if (first) throw std::invalid_argument("GoldenNumber: empty string");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("GoldenNumber: expected '+' or '-' in \"" +
                                  std::string(text) + "\"");
    }
    first = false;
    Rational coeff;
    bool has_coeff = false;
    std::size_t start = i;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    if (i > start) {
      std::string num(text.substr(start, i - start));
      if (mpq_set_str(coeff.get_mpq_t(), num.c_str(), 10) != 0)
        throw std::invalid_argument("GoldenNumber: bad rational \"" + num + "\"");
      coeff.canonicalize();
      has_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    if (text.compare(i, 3, "tau") == 0) {
      i += 3;
      if (!has_coeff) coeff = 1;
      result += GoldenNumber(Rational(0), sign * coeff);
    } else if (has_coeff) {
      result += GoldenNumber(sign * coeff);
    } else {
      throw std::invalid_argument("GoldenNumber: parse error in \"" + std::string(text) +
                                  "\"");
    }
  }
  return result;
}

inline std::ostream& operator<<(std::ostream& os, const GoldenNumber& x) {
  return os << x.str();
}

}  // namespace stonetile
