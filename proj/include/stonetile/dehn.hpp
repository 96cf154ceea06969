#pragma once

// Formal Dehn-invariant arithmetic: finite sums of (angle class mod pi)
// with Q(tau) length coefficients. Angle classes are either rational
// multiples of pi (which vanish in the tensor product and are dropped
// eagerly) or named symbolic classes, declared Z-linearly independent.

#include "stonetile/golden.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stonetile {

class AngleClass {
 public:
  // p/q * pi, normalized to lowest terms in [0, 1)
  static AngleClass rational_pi(Integer p, Integer q) {
    if (q <= 0) throw std::invalid_argument("AngleClass: denominator must be positive");
    Rational frac(std::move(p), std::move(q));
    frac.canonicalize();
    frac -= floor_of(frac);
    return AngleClass(std::move(frac));
  }

  static AngleClass named(std::string key) { return AngleClass(std::move(key)); }

  bool is_rational_pi() const { return name_.empty(); }
  const std::string& name() const { return name_; }
  const Rational& fraction() const { return fraction_; }

 private:
  explicit AngleClass(Rational frac) : fraction_(std::move(frac)) {}
  explicit AngleClass(std::string key) : name_(std::move(key)) {
    if (name_.empty()) throw std::invalid_argument("AngleClass: empty name");
  }

  static Rational floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(q);
  }

  std::string name_;    // empty for rational-pi classes
  Rational fraction_;
};

// An edge of a polyhedron for Dehn-invariant purposes: length in Q(tau)
// and the class of its dihedral angle modulo pi.
struct Edge {
  GoldenNumber length;
  AngleClass angle;
};

class DehnElement {
 public:
  DehnElement() = default;

  static DehnElement zero() { return DehnElement(); }

  // single term c (x) angle; rational-pi angles collapse to zero
  static DehnElement term(const GoldenNumber& coeff, const AngleClass& angle) {
    DehnElement d;
    if (!angle.is_rational_pi() && !coeff.is_zero()) d.terms_[angle.name()] = coeff;
    return d;
  }

  bool is_zero() const { return terms_.empty(); }

  const std::map<std::string, GoldenNumber>& terms() const { return terms_; }

  GoldenNumber coefficient(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GoldenNumber::zero() : it->second;
  }

  friend DehnElement operator+(const DehnElement& x, const DehnElement& y) {
    DehnElement out = x;
    for (const auto& [key, coeff] : y.terms_) {
      GoldenNumber sum = out.coefficient(key) + coeff;
      if (sum.is_zero())
        out.terms_.erase(key);
      else
        out.terms_[key] = sum;
    }
    return out;
  }

  friend DehnElement operator-(const DehnElement& x, const DehnElement& y) {
    return x + GoldenNumber(Rational(-1)) * y;
  }

  friend DehnElement operator*(const GoldenNumber& c, const DehnElement& x) {
    DehnElement out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : x.terms_) out.terms_[key] = c * coeff;
    return out;
  }

  DehnElement& operator+=(const DehnElement& y) { return *this = *this + y; }

  // coefficientwise Galois conjugation
  DehnElement conj() const {
    DehnElement out;
    for (const auto& [key, coeff] : terms_) out.terms_[key] = coeff.conj();
    return out;
  }

  friend bool operator==(const DehnElement& x, const DehnElement& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const DehnElement& x, const DehnElement& y) { return !(x == y); }

 private:
  std::map<std::string, GoldenNumber> terms_;  // no zero coefficients stored
};

// D(P) = sum over edges of length (x) (angle mod pi). Lengths must be
// strictly positive; rational-pi terms vanish.
inline DehnElement dehn_of_polyhedron(const std::vector<Edge>& edges) {
  DehnElement d;
  for (const Edge& e : edges) {
    if (e.length.sign() <= 0)
      throw std::invalid_argument("dehn_of_polyhedron: edge length must be positive");
    d += DehnElement::term(e.length, e.angle);
  }
  return d;
}

}  // namespace stonetile
