#include "p2coh/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace p2coh {

namespace {

// Pull square factors of small primes out of n; the caller has already
// ruled out n being a perfect square.
void extractSquares(Integer& n, Rational& coeff) {
  static constexpr unsigned long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (unsigned long p : kPrimes) {
    unsigned long sq = p * p;
    while (mpz_divisible_ui_p(n.get_mpz_t(), sq)) {
      n /= sq;
      coeff *= p;
    }
  }
}

int sgnOf(const Rational& x) { return sgn(x); }

std::strong_ordering fromSign(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// sign of A + B*sqrt(D), D > 0 not a square
int sign2(const Rational& A, const Rational& B, const Integer& D) {
  int sa = sgnOf(A), sb = sgnOf(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = A * A;
  Rational rhs = B * B * Rational(D);
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

// sign of A + B*sqrt(D) - C*sqrt(E), D != E both nonsquare (or B, C zero)
int sign3(const Rational& A, const Rational& B, const Integer& D, const Rational& C,
          const Integer& E) {
  int sx = sign2(A, B, D);
  int sy = sgnOf(C);
  if (sx != sy) return sx > sy ? 1 : -1;
  if (sx == 0) return 0;
  // X, Y same sign: sign(X - Y) = sx * sign(X^2 - Y^2)
  Rational p = A * A + B * B * Rational(D) - C * C * Rational(E);
  Rational q = 2 * A * B;
  return sx * sign2(p, q, D);
}

}  // namespace

QuadraticNumber::QuadraticNumber(const Rational& a) : a_(a), b_(0), d_(0) {}

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, const Rational& d) : a_(a) {
  if (d < 0) throw std::domain_error("negative radicand");
  if (b == 0 || d == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p*q)/q
  Integer n = d.get_num() * d.get_den();
  Rational coeff = b / Rational(d.get_den());
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer root = ::sqrt(n);
    a_ += coeff * Rational(root);
    b_ = 0;
    d_ = 0;
    return;
  }
  extractSquares(n, coeff);
  b_ = coeff;
  d_ = n;
}

double QuadraticNumber::toDouble() const {
  if (b_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {
const Integer& commonRadicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.isRational()) return y.d();
  if (y.isRational() || x.d() == y.d()) return x.d();
  throw std::domain_error("arithmetic across radicands " + x.d().get_str() + " and " +
                          y.d().get_str());
}
}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Integer& d = commonRadicand(x, y);
  return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, Rational(d));
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Integer& d = commonRadicand(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadraticNumber(a, b, Rational(d));
}

QuadraticNumber operator/(const QuadraticNumber& x, const Rational& y) {
  if (y == 0) throw std::domain_error("division by zero");
  return QuadraticNumber(x.a_ / y, x.b_ / y, Rational(x.d_));
}

std::strong_ordering compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  Rational A = x.a_ - y.a_;
  if (x.isRational() && y.isRational()) return fromSign(sgn(A));
  if (y.isRational()) return fromSign(sign2(A, x.b_, x.d_));
  if (x.isRational()) return fromSign(sign2(A, -y.b_, y.d_));
  if (x.d_ == y.d_) return fromSign(sign2(A, x.b_ - y.b_, x.d_));
  return fromSign(sign3(A, x.b_, x.d_, y.b_, y.d_));
}

std::string QuadraticNumber::str() const {
  return "(" + toString(a_) + ")+(" + toString(b_) + ")*sqrt(" + toString(d_) + ")";
}

int sign(const QuadraticNumber& x) { return sign2(x.a(), x.b(), x.d()); }

QuadraticNumber abs(const QuadraticNumber& x) { return sign(x) < 0 ? -x : x; }

std::optional<std::pair<QuadraticNumber, QuadraticNumber>> solveMonicQuadratic(const Rational& b,
                                                                              const Rational& c) {
  Rational disc = b * b - 4 * c;
  if (disc < 0) return std::nullopt;
  Rational half = -b / 2;
  QuadraticNumber lo(half, Rational(-1, 2), disc);
  QuadraticNumber hi(half, Rational(1, 2), disc);
  return std::make_pair(lo, hi);
}

}  // namespace p2coh
