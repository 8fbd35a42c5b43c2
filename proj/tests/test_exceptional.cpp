#include <doctest.h>

#include <vector>

#include "p2coh/errors.hpp"
#include "p2coh/exceptional.hpp"

using namespace p2coh;

namespace {
ExceptionalSlope slopeOf(const char* mu) { return *exceptionalFromSlope(parseRational(mu)); }
}  // namespace

TEST_CASE("epsilon table") {
  ExceptionalSlope half = epsilon(1, 1);
  CHECK(half.mu == Rational(1, 2));
  CHECK(half.rank == 2);
  CHECK(half.disc == Rational(3, 8));
  CHECK(epsilon(1, 2).mu == Rational(2, 5));
  CHECK(epsilon(1, 2).rank == 5);
  CHECK(epsilon(1, 2).disc == Rational(12, 25));
  CHECK(epsilon(3, 2).mu == Rational(3, 5));
  CHECK(epsilon(1, 3).mu == Rational(5, 13));
  CHECK(epsilon(3, 3).mu == Rational(12, 29));
  CHECK(epsilon(3, 3).rank == 29);
  CHECK(epsilon(2, 2).index == DyadicIndex{1, 1});
  CHECK(epsilon(-1, 1).mu == Rational(-1, 2));
  CHECK(epsilon(7, 1).mu == Rational(7, 2));
  CHECK(epsilon(0, 0).halfWidth == QuadraticNumber(Rational(3, 2), Rational(-1, 2), 5));
}

TEST_CASE("dyadic parsing") {
  CHECK(parseDyadic("3/2^3") == DyadicIndex{3, 3});
  CHECK(parseDyadic("6/2^3") == DyadicIndex{3, 2});
  CHECK(parseDyadic("3/8") == DyadicIndex{3, 3});
  CHECK(parseDyadic("-2") == DyadicIndex{-2, 0});
  CHECK_THROWS_AS(parseDyadic("1/3"), ParseError);
}

TEST_CASE("dot and decompose") {
  CHECK(dot(epsilon(0, 0), epsilon(1, 0)) == Rational(1, 2));
  CHECK(dot(epsilon(1, 1), epsilon(1, 0)) == Rational(3, 5));
  CHECK(dot(epsilon(-1, 0), epsilon(1, 0)) == 0);
  auto [a, b] = decompose(slopeOf("1/2"));
  CHECK(a.mu == 0);
  CHECK(b.mu == 1);
  auto [c, d] = decompose(epsilon(0, 0));
  CHECK(c.mu == -1);
  CHECK(d.mu == 1);
  auto [e, f] = decompose(slopeOf("2/5"));
  CHECK(e.mu == 0);
  CHECK(f.mu == Rational(1, 2));
  for (long p = -16; p <= 16; ++p)
    for (unsigned q = 0; q <= 4; ++q) {
      ExceptionalSlope nu = epsilon(p, q);
      auto [x, y] = decompose(nu);
      CHECK(dot(x, y) == nu.mu);
      CHECK(epsilon(dyadicMid(x, nu)).mu == dot(x, nu));
      CHECK(epsilon(dyadicMid(nu, y)).mu == dot(nu, y));
    }
}

TEST_CASE("mutation slopes") {
  MutationSlopes m = mutationSlopes(slopeOf("1/2"));
  CHECK(m.alpha.mu == 0);
  CHECK(m.eta.mu == 1);
  CHECK(m.zeta.mu == -1);
  CHECK(m.omega.mu == 2);
  m = mutationSlopes(slopeOf("2/5"));
  CHECK(m.alpha.mu == 0);
  CHECK(m.eta.mu == Rational(1, 2));
  CHECK(m.zeta.mu == -2);
  CHECK(m.omega.mu == 1);
  m = mutationSlopes(slopeOf("3/5"));
  CHECK(m.alpha.mu == Rational(1, 2));
  CHECK(m.eta.mu == 1);
  CHECK(m.zeta.mu == 0);
  CHECK(m.omega.mu == 3);
  CHECK_THROWS_AS(mutationSlopes(epsilon(2, 0)), std::invalid_argument);
  for (long p = -31; p <= 31; p += 2)
    for (unsigned q = 1; q <= 5; ++q) {
      ExceptionalSlope beta = epsilon(p, q);
      MutationSlopes ms = mutationSlopes(beta);
      for (const auto* s : {&ms.alpha, &ms.eta, &ms.zeta, &ms.omega}) CHECK(s->order() < q);
      CHECK(dot(ms.alpha, ms.eta) == beta.mu);
    }
}

TEST_CASE("locate") {
  auto r = locate(QuadraticNumber(Rational(-3, 2), Rational(1, 2), 29));
  CHECK(r.kind == LocateResult::Kind::Interior);
  CHECK(r.slope->mu == 1);
  CHECK(locate(QuadraticNumber(0)).slope->mu == 0);
  CHECK(locate(QuadraticNumber(Rational(5, 4))).slope->mu == 1);
  // endpoints of I_0
  auto left = locate(epsilon(0, 0).left());
  CHECK(left.kind == LocateResult::Kind::LeftEndpoint);
  CHECK(left.slope->mu == 0);
  auto right = locate(slopeOf("2/5").right());
  CHECK(right.kind == LocateResult::Kind::RightEndpoint);
  CHECK(right.slope->mu == Rational(2, 5));
  CHECK(locate(QuadraticNumber(Rational(1, 2)), 0).kind == LocateResult::Kind::DepthExceeded);
  CHECK_THROWS_AS(locateSlope(QuadraticNumber(Rational(1, 2)), 0), DepthExceededError);
}

TEST_CASE("delta and moduli") {
  CHECK(delta(0) == 1);
  CHECK(delta(Rational(1, 2)) == Rational(5, 8));
  CHECK(delta(Rational(1, 8)) == Rational(105, 128));
  CHECK(existsPositiveDimensionalModuli(ChernCharacter(2, 0, -6)));
  CHECK_FALSE(existsPositiveDimensionalModuli(ChernCharacter(1, 0, 0)));
  CHECK(isExceptionalCharacter(ChernCharacter(1, 0, 0)));
  ChernCharacter t(2, 1, Rational(-1, 2));  // T(-1): mu = 1/2, Delta = 3/8
  CHECK(t.discriminant() == Rational(3, 8));
  CHECK_FALSE(existsPositiveDimensionalModuli(t));
  CHECK(isExceptionalCharacter(t));
  auto em = exceptionalMultiple(ChernCharacter(4, 2, -1));
  REQUIRE(em);
  CHECK(em->second == 2);
  CHECK_FALSE(isExceptionalCharacter(ChernCharacter(4, 2, -1)));
}

TEST_CASE("exceptional pair cohomology and global generation") {
  ExceptionalSlope o = epsilon(0, 0), half = slopeOf("1/2");
  CHECK(excPairCohomology(o, o) == Cohomology{1, 0, 0});
  CHECK(excPairCohomology(o, epsilon(-1, 0)) == Cohomology{0, 0, 0});
  CHECK(excPairCohomology(half, half) == Cohomology{9, 0, 0});
  CHECK(excPairCohomology(epsilon(-5, 0), o) == Cohomology{0, 0, 6});
  CHECK(excHomGloballyGenerated(o, epsilon(1, 0)));
  CHECK_FALSE(excHomGloballyGenerated(slopeOf("2/5"), half));
  CHECK(excHomGloballyGenerated(half, epsilon(1, 0)));
  CHECK(excGloballyGenerated(o));
  CHECK_FALSE(excGloballyGenerated(epsilon(-1, 1)));
}

TEST_CASE("properties: monotone, self-consistent, disjoint intervals") {
  std::vector<ExceptionalSlope> all;
  for (long p = -256; p <= 256; ++p) all.push_back(epsilon(p, 8));
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].mu < all[i].mu);
  for (const auto& e : all) {
    Rational r2(e.rank * e.rank);
    CHECK(r2 * (1 - 2 * e.disc) == 1);
  }
  std::vector<ExceptionalSlope> order6;
  for (long p = -128; p <= 128; ++p) order6.push_back(epsilon(p, 6));
  for (std::size_t i = 1; i < order6.size(); ++i)
    CHECK(compare(order6[i - 1].right(), order6[i].left()) < 0);
}
