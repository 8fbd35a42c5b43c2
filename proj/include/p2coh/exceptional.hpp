#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "p2coh/chern.hpp"
#include "p2coh/quadratic.hpp"
#include "p2coh/rational.hpp"

namespace p2coh {

// p / 2^q, reduced so that q == 0 or p is odd.
struct DyadicIndex {
  Integer p;
  unsigned q = 0;

  static DyadicIndex reduced(Integer p, unsigned q);
  Rational value() const;
  std::string str() const;  // "p/2^q", or "p" when q == 0
  friend bool operator==(const DyadicIndex&, const DyadicIndex&) = default;
};

// "p/2^q", "p/2^q" with q = 0, or a rational whose denominator is a power of two.
DyadicIndex parseDyadic(std::string_view text);
DyadicIndex dyadicFromRational(const Rational& x);  // throws unless the denominator is 2^q

struct ExceptionalSlope {
  DyadicIndex index;
  Rational mu;
  Integer rank;
  Rational disc;               // (1 - 1/r^2)/2
  QuadraticNumber halfWidth;   // x = (3 - sqrt(5 + 8 disc))/2

  unsigned order() const { return index.q; }
  bool isInteger() const { return index.q == 0; }
  QuadraticNumber left() const { return QuadraticNumber(mu) - halfWidth; }
  QuadraticNumber right() const { return QuadraticNumber(mu) + halfWidth; }
  ChernCharacter character() const;  // ch E = (r, r mu, r(mu^2/2 - disc))

  friend bool operator==(const ExceptionalSlope& x, const ExceptionalSlope& y) {
    return x.index == y.index;
  }
};

ExceptionalSlope epsilon(const Integer& p, unsigned q);
inline ExceptionalSlope epsilon(const DyadicIndex& d) { return epsilon(d.p, d.q); }
inline ExceptionalSlope lineBundleSlope(const Integer& n) { return epsilon(n, 0); }

ExceptionalSlope negate(const ExceptionalSlope& a);                // E_{-a} = E_a^*
ExceptionalSlope shift(const ExceptionalSlope& a, const Integer& n);  // E_{a+n} = E_a(n)

// alpha.beta = (alpha+beta)/2 + (D_beta - D_alpha)/(3 + alpha - beta)
Rational dot(const ExceptionalSlope& alpha, const ExceptionalSlope& beta);

// Index halfway between the indices of x and y; for neighbours in the dyadic
// tree this is the index of x.y.
DyadicIndex dyadicMid(const ExceptionalSlope& x, const ExceptionalSlope& y);

// Non-integers: the dyadic parents.  Integers n: (n-1, n+1).
std::pair<ExceptionalSlope, ExceptionalSlope> decompose(const ExceptionalSlope& nu);

struct MutationSlopes {
  ExceptionalSlope alpha, eta, zeta, omega;
};
MutationSlopes mutationSlopes(const ExceptionalSlope& beta);

struct LocateResult {
  enum class Kind { Interior, LeftEndpoint, RightEndpoint, DepthExceeded };
  Kind kind = Kind::DepthExceeded;
  std::optional<ExceptionalSlope> slope;
};

inline constexpr unsigned kDefaultMaxOrder = 64;

LocateResult locate(const QuadraticNumber& t, unsigned maxOrder = kDefaultMaxOrder);
// Interior slope for t or throws DepthExceededError; endpoints return their slope.
ExceptionalSlope locateSlope(const QuadraticNumber& t, unsigned maxOrder = kDefaultMaxOrder);

std::optional<ExceptionalSlope> exceptionalFromSlope(const Rational& mu);

Rational delta(const Rational& mu);

bool existsPositiveDimensionalModuli(const ChernCharacter& v);
bool isExceptionalCharacter(const ChernCharacter& v);
// v = m * ch E_alpha for some m >= 1.
std::optional<std::pair<ExceptionalSlope, Integer>> exceptionalMultiple(const ChernCharacter& v);

struct Cohomology {
  Integer h0, h1, h2;
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

Cohomology excPairCohomology(const ExceptionalSlope& a, const ExceptionalSlope& b);

bool excHomGloballyGenerated(const ExceptionalSlope& e, const ExceptionalSlope& f);
bool excGloballyGenerated(const ExceptionalSlope& e);

}  // namespace p2coh
