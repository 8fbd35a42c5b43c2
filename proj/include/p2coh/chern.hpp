#pragma once

#include <string>
#include <string_view>

#include "p2coh/quadratic.hpp"
#include "p2coh/rational.hpp"

namespace p2coh {

// P(x) = x^2/2 + 3x/2 + 1, the Hilbert polynomial of O.
template <class T>
T hilbertP(const T& x) {
  return x * x / Rational(2) + x * Rational(3, 2) + Rational(1);
}

template <>
inline Rational hilbertP(const Rational& x) {
  return Rational(x * x / 2 + x * 3 / 2 + 1);
}

struct SlopeDiscPoint {
  Rational mu;
  Rational delta;
};

// A class in K(P^2) as (r, c1, ch2).  Torsion sheaves are r = 0, c1 = d > 0;
// anything else with r <= 0 is only a virtual class (e.g. ch K).
class ChernCharacter {
 public:
  enum class Kind { PositiveRank, Torsion, Virtual };

  ChernCharacter() = default;
  ChernCharacter(Integer r, Integer c1, Rational ch2)
      : r_(std::move(r)), c1_(std::move(c1)), ch2_(std::move(ch2)) {}

  static ChernCharacter torsion(const Integer& d, const Integer& chi);
  static ChernCharacter lineBundle(const Integer& n);
  static ChernCharacter fromSlopeDisc(const Integer& r, const SlopeDiscPoint& p);

  const Integer& rank() const { return r_; }
  const Integer& c1() const { return c1_; }
  const Rational& ch2() const { return ch2_; }

  Kind kind() const;
  bool isPositiveRank() const { return r_ > 0; }
  bool isTorsion() const { return kind() == Kind::Torsion; }

  Rational c2() const;
  bool isIntegral() const;
  Rational slope() const;         // r != 0
  Rational discriminant() const;  // r != 0
  SlopeDiscPoint point() const { return {slope(), discriminant()}; }
  Rational euler() const;  // chi(v) = r + 3c1/2 + ch2

  ChernCharacter operator-() const { return {-r_, -c1_, -ch2_}; }
  friend ChernCharacter operator+(const ChernCharacter& x, const ChernCharacter& y) {
    return {x.r_ + y.r_, x.c1_ + y.c1_, x.ch2_ + y.ch2_};
  }
  friend ChernCharacter operator-(const ChernCharacter& x, const ChernCharacter& y) {
    return x + (-y);
  }
  friend ChernCharacter operator*(const Integer& m, const ChernCharacter& x) {
    return {m * x.r_, m * x.c1_, Rational(m) * x.ch2_};
  }
  friend bool operator==(const ChernCharacter& x, const ChernCharacter& y) = default;

  std::string str() const;

 private:
  Integer r_;
  Integer c1_;
  Rational ch2_;
};

// chi(v (x) w) on K-classes, no restrictions.
Rational eulerPairing(const ChernCharacter& v, const ChernCharacter& w);

// Checked version: rejects two torsion classes.
Rational chiTensor(const ChernCharacter& v, const ChernCharacter& w);

ChernCharacter tensor(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter dual(const ChernCharacter& v);
ChernCharacter twist(const ChernCharacter& v, const Integer& n);
ChernCharacter serreDual(const ChernCharacter& v);

ChernCharacter minimalIntegralOnParabolaPoint(const SlopeDiscPoint& p);

// Positive-rank primitive integral character orthogonal (under chi(- (x) -))
// to both a and b.  Throws std::domain_error if the orthogonal line has rank 0.
ChernCharacter orthogonalCharacter(const ChernCharacter& a, const ChernCharacter& b);

// "r c1 ch2"; throws ParseError.  parseIntegralCharacter also demands an
// integral class of positive rank or a torsion class.
ChernCharacter parseCharacter(std::string_view text);
ChernCharacter parseIntegralCharacter(std::string_view text);

}  // namespace p2coh
