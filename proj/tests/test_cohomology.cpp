#include <doctest.h>

#include <algorithm>
#include <random>

#include "p2coh/cohomology.hpp"
#include "p2coh/errors.hpp"

using namespace p2coh;

namespace {
const ChernCharacter v4(4, 4, Rational(-7));
const ChernCharacter w8(8, 1, Rational(-17, 2));
const ChernCharacter uPlus(4, 1, Rational(-11, 2));

bool hasNote(const CohomologyReport& r, const std::string& prefix) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.rfind(prefix, 0) == 0; });
}
}  // namespace

TEST_CASE("twist by exceptional") {
  auto r = twistByExceptional(v4, epsilon(0, 0));
  CHECK(r.h0 == 3);
  CHECK(r.h1 == 0);
  CHECK(r.h2 == 0);
  r = twistByExceptional(v4, epsilon(-1, 0));
  CHECK(r.h1 == 5);
  CHECK(r.chi == -5);
  r = twistByExceptional(v4, epsilon(1, 0));
  CHECK(r.h0 == 15);
  r = twistByExceptional(v4, epsilon(-7, 0));  // mu = -3: only H^2 can survive
  CHECK(r.h0 == 0);
  CHECK(r.h2 == r.chi);
  CHECK_THROWS_AS(twistByExceptional(ChernCharacter(2, 0, -1), epsilon(0, 0)),
                  UnstableCharacterError);
}

TEST_CASE("region classification") {
  CHECK((classifyRegion(v4, w8) == Region::IIIb));
  CHECK((classifyRegion(v4, uPlus) == Region::IIIa));
  CHECK((parseRegion("IVd") == Region::IVd));
  CHECK((std::string(toString(Region::TorsionPath)) == "TorsionPath"));
  CHECK_THROWS_AS(parseRegion("VI"), ParseError);
}

TEST_CASE("generic cohomology examples") {
  auto r = genericCohomology(v4, w8);
  CHECK(r.h0 == 3);
  CHECK(r.h1 == 3);
  CHECK(r.h2 == 0);
  CHECK(r.special);
  CHECK((r.region == Region::IIIb));
  CHECK((r.dualRegion == Region::IVd));
  CHECK_FALSE(r.requiresDivisibility);
  CHECK_FALSE(r.sufficientMultiple);

  r = genericCohomology(v4, uPlus);
  CHECK(r.h0 == 0);
  CHECK(r.h1 == 0);
  CHECK(r.h2 == 0);
  CHECK((r.region == Region::IIIa));
  CHECK_FALSE(r.sufficientMultiple);

  ChernCharacter uMinus = orthogonalCharacters(v4).uMinus;
  CHECK(uMinus == ChernCharacter(4, -21, Rational(99, 2)));
  r = genericCohomology(v4, uMinus);
  CHECK(r.h0 == 0);
  CHECK(r.h1 == 0);
  CHECK(r.h2 == 0);
  CHECK((r.region == Region::IVd));
  CHECK((r.dualRegion == Region::IIIa));  // (v^D, u-^*) is the u+ of the Serre dual
  CHECK_FALSE(r.requiresDivisibility);

  r = genericCohomology(v4, ChernCharacter::lineBundle(1));
  CHECK((r.region == Region::ExceptionalPath));
  CHECK(r.h0 == 15);
  r = genericCohomology(v4, ChernCharacter(1, 5, Rational(25, 2)));
  CHECK((r.region == Region::ExceptionalPath));
  CHECK(r.h0 == 103);

  CHECK_THROWS_AS(genericCohomology(v4, ChernCharacter(1, 0, Rational(-1, 2))), IntegralityError);
  CHECK_THROWS_AS(genericCohomology(ChernCharacter::torsion(1, 0), ChernCharacter::torsion(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("torsion and rank-one inputs") {
  ChernCharacter t = ChernCharacter::torsion(3, 1);
  auto r = genericCohomology(t, v4);
  CHECK((r.region == Region::TorsionPath));
  CHECK_FALSE(r.special);
  CHECK(r.chi == eulerPairing(t, v4));
  CHECK(hasNote(r, "geometric region"));
  auto swapped = genericCohomology(v4, t);
  CHECK(swapped.h0 == r.h0);
  CHECK(swapped.h1 == r.h1);

  ChernCharacter ideal(1, 0, -2);  // I_Z, Z of length 2
  r = genericCohomology(ideal, ChernCharacter(2, 0, -6));
  CHECK(hasNote(r, "rank-one"));
  CHECK(r.h0 - r.h1 + r.h2 == r.chi);
}

TEST_CASE("orthogonality and multiples") {
  CHECK(cohomologicallyOrthogonal(v4, uPlus));
  CHECK_FALSE(cohomologicallyOrthogonal(v4, w8));
  CHECK(cohomologicallyOrthogonal(v4, orthogonalCharacters(v4).uMinus));
  CHECK_THROWS_AS(cohomologicallyOrthogonal(v4, ChernCharacter(2, 0, -6)), std::invalid_argument);
  CHECK(sufficientMultiple(v4, uPlus) == 1);
  CHECK(orthogonalLatticeExponent(v4) == 22);
  Integer s = sufficientMultiple(v4, w8);
  CHECK(s >= 1);
  for (long m = 1; m <= 12; ++m) {
    Integer g = gcd(s, Integer(m));
    CHECK(sufficientMultiple(v4, Integer(m) * w8) == s / g);
  }
  CHECK_THROWS_AS(sufficientMultiple(v4, ChernCharacter(2, 0, -6)), std::invalid_argument);
}

TEST_CASE("global generation verdicts") {
  ChernCharacter v2(2, 0, -6);  // nu+ = 1, nu- = -4
  CHECK((homGloballyGenerated(v4, v2) == GGVerdict::NotImplied));   // 0 - (-4) = 4
  CHECK((tensorGloballyGenerated(v4, v2) == GGVerdict::NotImplied));
  // twisting by O(n) moves nu+- by -n
  ChernCharacter low = twist(v2, 3);                                // nu+ = -2, nu- = -7
  CHECK((tensorGloballyGenerated(low, v4) == GGVerdict::Guaranteed));  // -2 + 0
  ChernCharacter high = twist(v4, -3);                              // nu- = -2
  CHECK((homGloballyGenerated(v4, high) == GGVerdict::Guaranteed));    // 0 - (-2) = 2
  CHECK((homGloballyGenerated(v4, twist(v4, 1)) == GGVerdict::NotImplied));  // 0 - (-6)
  CHECK((std::string(toString(GGVerdict::NotImplied)) == "not-implied"));
  CHECK_THROWS_AS(homGloballyGenerated(ChernCharacter(1, 0, 0), v4), std::invalid_argument);
}

TEST_CASE("randomized report invariants and Serre involution") {
  std::mt19937_64 rng(2024);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto sample = [&] {
    for (;;) {
      long r = pick(1, 5);
      long c1 = pick(-4 * r, 4 * r);
      ChernCharacter v(r, c1, makeRational(c1 * c1 - 2 * pick(-5, 60), 2));
      if (v.discriminant() > 12 || exceptionalMultiple(v) || !existsPositiveDimensionalModuli(v))
        continue;
      return v;
    }
  };
  int special = 0;
  for (int i = 0; i < 400; ++i) {
    ChernCharacter v = sample(), w = sample();
    if (w.rank() == 1) continue;
    CAPTURE(v.str());
    CAPTURE(w.str());
    CohomologyReport r = genericCohomology(v, w);
    CHECK_NOTHROW(checkReport(r));
    if (r.special) ++special;
    if (v.rank() >= 2) {
      CohomologyReport d = genericCohomology(serreDual(v), dual(w));
      CHECK(d.h0 == r.h2);
      CHECK(d.h1 == r.h1);
      CHECK(d.h2 == r.h0);
    }
  }
  MESSAGE("special pairs: " << special);
}
