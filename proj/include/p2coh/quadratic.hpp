#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "p2coh/rational.hpp"

namespace p2coh {

// a + b*sqrt(d).  The radicand is kept as a squarefree-ish positive integer;
// if the root is rational the value collapses to (a, 0, 0).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& a);  // NOLINT: implicit on purpose
  QuadraticNumber(long a) : QuadraticNumber(Rational(a)) {}
  QuadraticNumber(const Rational& a, const Rational& b, const Rational& d);

  static QuadraticNumber sqrt(const Rational& d) { return {0, 1, d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool isRational() const { return b_ == 0; }
  double toDouble() const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const Rational& y);

  friend std::strong_ordering compare(const QuadraticNumber& x, const QuadraticNumber& y);
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    return compare(x, y);
  }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return compare(x, y) == 0;
  }

  std::string str() const;

 private:
  Rational a_;
  Rational b_;
  Integer d_;  // 0 iff b_ == 0
};

int sign(const QuadraticNumber& x);
QuadraticNumber abs(const QuadraticNumber& x);

// Roots of x^2 + b x + c, smaller first.
std::optional<std::pair<QuadraticNumber, QuadraticNumber>> solveMonicQuadratic(const Rational& b,
                                                                              const Rational& c);

}  // namespace p2coh
