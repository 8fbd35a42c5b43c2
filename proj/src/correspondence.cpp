#include "p2coh/correspondence.hpp"

#include <stdexcept>
#include <tuple>

#include "p2coh/errors.hpp"

namespace p2coh {

const char* toString(SignCase s) {
  return s == SignCase::PositiveChi ? "PositiveChi" : "NonpositiveChi";
}

namespace {

Rational chiWith(const ChernCharacter& v, const ExceptionalSlope& e) {
  return eulerPairing(v, e.character());
}

Integer asInteger(const Rational& x) {
  if (!isInteger(x)) throw std::logic_error("expected an integral Euler characteristic");
  return x.get_num();
}

}  // namespace

void requireModuli(const ChernCharacter& v) {
  if (v.isTorsion()) return;
  if (!v.isPositiveRank()) throw UnstableCharacterError("no sheaves of character " + v.str());
  if (!existsPositiveDimensionalModuli(v))
    throw UnstableCharacterError(v.str() + " lies below the Drezet-Le Potier curve");
}

CorrespondingExceptionals correspondingExceptionals(const ChernCharacter& v) {
  requireModuli(v);
  if (v.isTorsion()) {
    Rational t = -(v.euler() / Rational(v.c1()));
    return {locateSlope(QuadraticNumber(t)), std::nullopt};
  }
  // P(x + mu) - D = 1/2  <=>  x^2 + (2mu + 3) x + mu^2 + 3mu + 1 - 2D = 0
  Rational mu = v.slope(), d = v.discriminant();
  auto roots = solveMonicQuadratic(2 * mu + 3, mu * mu + 3 * mu + 1 - 2 * d);
  if (!roots) throw std::logic_error("orthogonal parabola misses Delta = 1/2");
  // An endpoint of I_a is handled by a itself (weak inequalities).
  ExceptionalSlope minus = locateSlope(roots->first);
  ExceptionalSlope plus = locateSlope(roots->second);
  if (plus.mu - minus.mu < 3) throw std::logic_error("corresponding slopes closer than 3");
  return {plus, minus};
}

ResolutionData resolution(const ChernCharacter& v) {
  CorrespondingExceptionals ce = correspondingExceptionals(v);
  ResolutionData rd;
  rd.nuPlus = ce.nuPlus;
  std::tie(rd.alpha, rd.beta) = decompose(rd.nuPlus);
  Rational chiPlus = chiWith(v, rd.nuPlus);
  ChernCharacter chMinusBeta = negate(rd.beta).character();
  ChernCharacter chMinusAlpha3 = negate(shift(rd.alpha, 3)).character();
  if (chiPlus > 0) {
    rd.signCase = SignCase::PositiveChi;
    rd.m3 = asInteger(chiPlus);
    rd.m1 = asInteger(-chiWith(v, rd.alpha));
    rd.m2 = asInteger(-eulerPairing(v, epsilon(dyadicMid(rd.alpha, rd.nuPlus)).character()));
    rd.kChar = v - rd.m3 * negate(rd.nuPlus).character();
  } else {
    rd.signCase = SignCase::NonpositiveChi;
    rd.m3 = asInteger(-chiPlus);
    rd.m1 = asInteger(eulerPairing(v, epsilon(dyadicMid(rd.nuPlus, rd.beta)).character()));
    rd.m2 = asInteger(chiWith(v, rd.beta));
    rd.kChar = v + rd.m3 * negate(shift(rd.nuPlus, 3)).character();
  }
  if (rd.m1 < 0 || rd.m2 < 0)
    throw std::logic_error("negative resolution exponent for " + v.str());
  if (rd.kChar != rd.m2 * chMinusBeta - rd.m1 * chMinusAlpha3)
    throw std::logic_error("resolution class mismatch for " + v.str());
  Integer n = excPairCohomology(shift(rd.alpha, 3), negate(rd.beta)).h0;
  rd.kroneckerShape = {toLong(n), rd.m1, rd.m2};
  if (rd.kroneckerShape.n < 3) throw std::logic_error("Kronecker arrow count below 3");
  return rd;
}

KroneckerShape kroneckerFibrationShape(const ChernCharacter& v) {
  return resolution(v).kroneckerShape;
}

ChernCharacter orthogonalIntersection(const ChernCharacter& v, const ExceptionalSlope& e) {
  return orthogonalCharacter(v, e.character());
}

ChernCharacter primaryOrthogonal(const ChernCharacter& v) {
  ResolutionData rd = resolution(v);
  ExceptionalSlope e = rd.signCase == SignCase::PositiveChi ? negate(rd.nuPlus)
                                                            : negate(shift(rd.nuPlus, 3));
  return orthogonalIntersection(v, e);
}

OrthogonalPair orthogonalCharacters(const ChernCharacter& v) {
  if (!v.isPositiveRank()) throw std::invalid_argument("orthogonal pair needs positive rank");
  OrthogonalPair op;
  op.uPlus = primaryOrthogonal(v);
  op.uMinus = dual(primaryOrthogonal(serreDual(v)));
  if (op.uMinus.rank() == 1) op.uMinus = Integer(2) * op.uMinus;
  return op;
}

}  // namespace p2coh
