#include "p2coh/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "p2coh/errors.hpp"

namespace p2coh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool digitsOnly(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parseInteger(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!digitsOnly(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

Rational parseRational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(s));
  Integer num = parseInteger(s.substr(0, slash));
  std::string_view denText = trim(s.substr(slash + 1));
  if (!digitsOnly(denText)) throw ParseError("bad denominator: '" + std::string(text) + "'");
  Integer den(std::string(denText), 10);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return makeRational(num, den);
}

std::string toString(const Rational& x) { return x.get_str(); }
std::string toString(const Integer& x) { return x.get_str(); }

Integer floorOf(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceilOf(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

long toLong(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer out of machine range: " + x.get_str());
  return x.get_si();
}

}  // namespace p2coh
