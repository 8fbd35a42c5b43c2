#include <doctest.h>

#include <random>

#include "p2coh/errors.hpp"
#include "p2coh/quadratic.hpp"

using namespace p2coh;

namespace {

QuadraticNumber q(const char* a, const char* b, const char* d) {
  return {parseRational(a), parseRational(b), parseRational(d)};
}

// ~200-bit evaluation for cross-checking compare
mpf_class highPrecision(const QuadraticNumber& x) {
  mpf_class a(x.a(), 256), b(x.b(), 256), d(x.d(), 256);
  mpf_class root(0, 256);
  if (x.d() != 0) root = sqrt(d);
  return a + b * root;
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(toString(parseRational("6/4")) == "3/2");
  CHECK(toString(parseRational(" -7 ")) == "-7");
  CHECK(toString(parseRational("+10/5")) == "2");
  CHECK(toString(parseRational("-0/3")) == "0");
  CHECK_THROWS_AS(parseRational("1/0"), ParseError);
  CHECK_THROWS_AS(parseRational("1/-2"), ParseError);
  CHECK_THROWS_AS(parseRational("x"), ParseError);
  CHECK_THROWS_AS(parseRational(""), ParseError);
  CHECK(floorOf(parseRational("-1/2")) == -1);
  CHECK(ceilOf(parseRational("-1/2")) == 0);
}

TEST_CASE("quadratic compare, reference values") {
  QuadraticNumber golden = q("3/2", "-1/2", "5");
  CHECK(compare(golden, QuadraticNumber(Rational(1, 3))) > 0);
  CHECK(compare(golden, golden) == 0);
  CHECK(q("0", "1", "8") == q("0", "2", "2"));
  CHECK(q("0", "1", "8").str() == "(0)+(2)*sqrt(2)");
  CHECK(q("1", "1", "9/4").isRational());
  CHECK(q("1", "1", "9/4") == QuadraticNumber(Rational(5, 2)));
  CHECK(q("0", "1", "1/2") == q("0", "1/2", "2"));
}

TEST_CASE("mixed radicands") {
  // sqrt2 + sqrt3 vs sqrt10: 5 + 2 sqrt6 ~ 9.899 < 10
  QuadraticNumber s2 = QuadraticNumber::sqrt(2), s3 = QuadraticNumber::sqrt(3);
  CHECK(compare(s2, s3) < 0);
  CHECK(compare(q("1", "1", "2"), q("0", "1", "6")) < 0);      // 2.4142 < 2.4495
  CHECK(compare(q("1", "1", "3"), q("0", "1", "15/2")) < 0);   // 2.7321 < 2.7386
  CHECK(compare(q("3", "1", "2"), q("1", "1", "11")) > 0);     // 4.4142 > 4.3166
  CHECK(compare(q("-1", "1", "2"), q("1", "-1", "3")) > 0);    // 0.4142 > -0.7321
  CHECK(compare(q("0", "-1", "2"), q("0", "-1", "3")) > 0);
  CHECK_THROWS_AS(s2 + s3, std::domain_error);
  CHECK(sign(q("-3", "2", "2")) < 0);  // 2 sqrt2 < 3
  CHECK(abs(q("-3", "2", "2")) == q("3", "-2", "2"));
}

TEST_CASE("field arithmetic within one radicand") {
  QuadraticNumber x = q("1/2", "3", "5"), y = q("-2", "1/3", "5");
  CHECK(x * y == q("4", "-35/6", "5"));
  CHECK((x + y) - y == x);
  CHECK(x / Rational(2) == q("1/4", "3/2", "5"));
  CHECK(q("0", "1", "2") * q("0", "1", "2") == QuadraticNumber(2));
}

TEST_CASE("solveMonicQuadratic, reference values") {
  auto r = solveMonicQuadratic(3, -5);
  REQUIRE(r);
  CHECK(r->first == q("-3/2", "-1/2", "29"));
  CHECK(r->second == q("-3/2", "1/2", "29"));
  auto z = solveMonicQuadratic(0, 0);
  REQUIRE(z);
  CHECK(z->first == QuadraticNumber(0));
  CHECK(z->second == QuadraticNumber(0));
  CHECK_FALSE(solveMonicQuadratic(0, 1));
}

TEST_CASE("randomized: total order, float agreement, Vieta") {
  std::mt19937_64 rng(20240611);
  auto small = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto randomRational = [&] { return makeRational(small(-40, 40), small(1, 12)); };
  auto randomNumber = [&] {
    return QuadraticNumber(randomRational(), randomRational(), Rational(small(0, 30)));
  };
  for (int i = 0; i < 3000; ++i) {
    QuadraticNumber x = randomNumber(), y = randomNumber(), z = randomNumber();
    auto xy = compare(x, y), yx = compare(y, x);
    CHECK((xy < 0) == (yx > 0));
    CHECK((xy == 0) == (yx == 0));
    if (compare(x, y) <= 0 && compare(y, z) <= 0) CHECK(compare(x, z) <= 0);
    mpf_class gap = highPrecision(x) - highPrecision(y);
    if (abs(gap) > 1e-6) CHECK((gap > 0) == (xy > 0));
  }
  for (int i = 0; i < 500; ++i) {
    Rational b = randomRational(), c = randomRational();
    auto r = solveMonicQuadratic(b, c);
    if (!r) {
      CHECK(b * b - 4 * c < 0);
      continue;
    }
    CHECK(compare(r->first, r->second) <= 0);
    CHECK(r->first + r->second == QuadraticNumber(-b));
    CHECK(r->first * r->second == QuadraticNumber(c));
  }
}
