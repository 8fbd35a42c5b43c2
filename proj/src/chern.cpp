#include "p2coh/chern.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "p2coh/errors.hpp"

namespace p2coh {

ChernCharacter ChernCharacter::torsion(const Integer& d, const Integer& chi) {
  if (d <= 0) throw std::domain_error("torsion class needs d > 0");
  return {0, d, Rational(chi) - makeRational(3 * d, 2)};
}

ChernCharacter ChernCharacter::lineBundle(const Integer& n) { return {1, n, makeRational(n * n, 2)}; }

ChernCharacter ChernCharacter::fromSlopeDisc(const Integer& r, const SlopeDiscPoint& p) {
  Rational c1 = Rational(r) * p.mu;
  if (!isInteger(c1)) throw std::domain_error("slope not attainable at rank " + r.get_str());
  // Delta = mu^2/2 - ch2/r
  Rational ch2 = Rational(r) * (p.mu * p.mu / 2 - p.delta);
  return {r, c1.get_num(), ch2};
}

ChernCharacter::Kind ChernCharacter::kind() const {
  if (r_ > 0) return Kind::PositiveRank;
  if (r_ == 0 && c1_ > 0) return Kind::Torsion;
  return Kind::Virtual;
}

Rational ChernCharacter::c2() const { return Rational(c1_ * c1_) / 2 - ch2_; }

bool ChernCharacter::isIntegral() const { return isInteger(c2()); }

Rational ChernCharacter::slope() const {
  if (r_ == 0) throw std::domain_error("slope of a rank-zero class");
  return makeRational(c1_, r_);
}

Rational ChernCharacter::discriminant() const {
  Rational mu = slope();
  return mu * mu / 2 - ch2_ / Rational(r_);
}

Rational ChernCharacter::euler() const { return Rational(r_) + makeRational(3 * c1_, 2) + ch2_; }

std::string ChernCharacter::str() const {
  return "(" + toString(r_) + "," + toString(c1_) + "," + toString(ch2_) + ")";
}

ChernCharacter tensor(const ChernCharacter& v, const ChernCharacter& w) {
  if (v.isTorsion() && w.isTorsion()) throw std::invalid_argument("tensor of two torsion classes");
  return {v.rank() * w.rank(), v.rank() * w.c1() + w.rank() * v.c1(),
          Rational(v.rank()) * w.ch2() + Rational(v.c1() * w.c1()) + Rational(w.rank()) * v.ch2()};
}

Rational eulerPairing(const ChernCharacter& v, const ChernCharacter& w) {
  Integer r = v.rank() * w.rank();
  Integer c1 = v.rank() * w.c1() + w.rank() * v.c1();
  Rational ch2 =
      Rational(v.rank()) * w.ch2() + Rational(v.c1() * w.c1()) + Rational(w.rank()) * v.ch2();
  return Rational(r) + makeRational(3 * c1, 2) + ch2;
}

Rational chiTensor(const ChernCharacter& v, const ChernCharacter& w) {
  if (v.isTorsion() && w.isTorsion()) throw std::invalid_argument("chi of two torsion classes");
  return eulerPairing(v, w);
}

ChernCharacter dual(const ChernCharacter& v) { return {v.rank(), -v.c1(), v.ch2()}; }

ChernCharacter twist(const ChernCharacter& v, const Integer& n) {
  return tensor(v, ChernCharacter::lineBundle(n));
}

ChernCharacter serreDual(const ChernCharacter& v) { return twist(dual(v), -3); }

ChernCharacter minimalIntegralOnParabolaPoint(const SlopeDiscPoint& p) {
  Integer den = p.mu.get_den();
  for (Integer r = den;; r += den) {
    ChernCharacter c = ChernCharacter::fromSlopeDisc(r, p);
    if (c.isIntegral()) return c;
  }
}

namespace {

using Vec3 = std::array<Rational, 3>;

// chi(a (x) b) = a^T G b on (r, c1, ch2)
Vec3 gram(const ChernCharacter& a) {
  Rational r(a.rank()), c1(a.c1());
  return {r + Rational(3, 2) * c1 + a.ch2(), Rational(3, 2) * r + c1, r};
}

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

}  // namespace

ChernCharacter orthogonalCharacter(const ChernCharacter& a, const ChernCharacter& b) {
  Vec3 u = cross(gram(a), gram(b));
  if (u[0] == 0) throw std::domain_error("orthogonal line has rank zero");
  SlopeDiscPoint p;
  p.mu = u[1] / u[0];
  p.delta = p.mu * p.mu / 2 - u[2] / u[0];
  return minimalIntegralOnParabolaPoint(p);
}

ChernCharacter parseCharacter(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> parts;
  for (std::string tok; in >> tok;) parts.push_back(tok);
  if (parts.size() != 3)
    throw ParseError("character needs three entries 'r c1 ch2': '" + std::string(text) + "'");
  Integer r = parseInteger(parts[0]);
  Integer c1 = parseInteger(parts[1]);
  Rational third = parseRational(parts[2]);
  if (r == 0) {
    // torsion is written "0 d chi"
    if (c1 <= 0) throw ParseError("torsion character needs d > 0");
    if (!isInteger(third)) throw IntegralityError("torsion Euler characteristic must be an integer");
    return ChernCharacter::torsion(c1, third.get_num());
  }
  return {r, c1, third};
}

ChernCharacter parseIntegralCharacter(std::string_view text) {
  ChernCharacter v = parseCharacter(text);
  if (v.rank() < 0) throw ParseError("negative rank: " + v.str());
  if (!v.isIntegral())
    throw IntegralityError("c2 = " + toString(v.c2()) + " is not an integer for " + v.str());
  return v;
}

}  // namespace p2coh
