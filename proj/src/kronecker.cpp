#include "p2coh/kronecker.hpp"

#include <stdexcept>

#include "p2coh/errors.hpp"

namespace p2coh {

std::string KroneckerShape::str() const {
  return std::to_string(n) + ":" + toString(b) + "," + toString(a);
}

KroneckerShape parseShape(std::string_view text) {
  auto colon = text.find(':');
  auto comma = text.find(',');
  if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon)
    throw ParseError("shape must look like N:b,a: '" + std::string(text) + "'");
  KroneckerShape s;
  s.n = toLong(parseInteger(text.substr(0, colon)));
  s.b = parseInteger(text.substr(colon + 1, comma - colon - 1));
  s.a = parseInteger(text.substr(comma + 1));
  if (s.n < 3) throw ParseError("arrow count must be at least 3");
  if (s.b < 0 || s.a < 0 || (s.b == 0 && s.a == 0))
    throw ParseError("dimension vector must be nonnegative and nonzero");
  return s;
}

namespace {

void requireSameN(const KroneckerShape& f, const KroneckerShape& e) {
  if (f.n != e.n) throw std::invalid_argument("Kronecker shapes have different arrow counts");
}

// Unique m1, m2 >= 0 with m1 x + m2 y = s, for det(x, y) = +-1.
std::pair<Integer, Integer> solve(const KroneckerShape& x, const KroneckerShape& y,
                                  const KroneckerShape& s) {
  Integer det = x.b * y.a - x.a * y.b;
  Integer m1 = (s.b * y.a - s.a * y.b) / det;
  Integer m2 = (x.b * s.a - x.a * s.b) / det;
  return {m1, m2};
}

}  // namespace

Integer eulerForm(const KroneckerShape& f, const KroneckerShape& e) {
  requireSameN(f, e);
  return f.b * e.b + f.a * e.a - f.n * f.b * e.a;
}

Integer expectedDimension(const KroneckerShape& s) {
  return 1 - s.b * s.b - s.a * s.a + s.n * s.b * s.a;
}

QuadraticNumber psi(long n) {
  return QuadraticNumber(makeRational(n, 2), Rational(1, 2), Rational(n * n - 4));
}

std::vector<KroneckerShape> exceptionalOrbit(long n, long count) {
  if (n < 3 || count < 1) throw std::invalid_argument("exceptionalOrbit needs N >= 3, count >= 1");
  std::vector<KroneckerShape> out;
  KroneckerShape cur{n, 0, 1};
  for (long i = 0; i < count; ++i) {
    out.push_back(cur);
    cur = {n, cur.a, n * cur.a - cur.b};
  }
  return out;
}

bool semistableExists(const KroneckerShape& s) { return expectedDimension(s) >= 0; }

bool genericallySemistable(const KroneckerShape& s) {
  Integer g = gcd(s.b, s.a);
  return semistableExists({s.n, s.b / g, s.a / g});
}

GeneralDecomposition decomposeGeneral(const KroneckerShape& s) {
  if (s.b < 0 || s.a < 0 || (s.b == 0 && s.a == 0))
    throw std::invalid_argument("bad dimension vector " + s.str());
  if (semistableExists(s)) return {{{s, 1}}};
  Integer g = gcd(s.b, s.a);
  KroneckerShape prim{s.n, s.b / g, s.a / g};
  if (expectedDimension(prim) >= 0) return {{{prim, g}}};  // polystable prim^g

  // Slope b/a is outside the stable window.  Below it walk the orbit of
  // (0,1); above it use the mirrored orbit of (1,0).
  bool mirrored = s.b > s.a;
  KroneckerShape t = mirrored ? KroneckerShape{s.n, s.a, s.b} : s;
  KroneckerShape x{s.n, 0, 1};
  KroneckerShape y{s.n, 1, s.n};
  // slopes of the orbit increase towards psi^{-1}; stop once t fits between x and y
  while (y.b * t.a < t.b * y.a) {
    x = y;
    y = {s.n, y.a, s.n * y.a - y.b};
  }
  auto [m1, m2] = solve(x, y, t);
  auto back = [&](const KroneckerShape& v) {
    return mirrored ? KroneckerShape{s.n, v.a, v.b} : v;
  };
  GeneralDecomposition d;
  if (m1 > 0) d.summands.emplace_back(back(x), m1);
  if (m2 > 0) d.summands.emplace_back(back(y), m2);
  return d;
}

HomExt generalHomExt(const KroneckerShape& f, const KroneckerShape& e) {
  requireSameN(f, e);
  if (genericallySemistable(f) || genericallySemistable(e)) {
    Integer chi = eulerForm(f, e);
    return {chi > 0 ? chi : Integer(0), chi < 0 ? Integer(-chi) : Integer(0)};
  }
  HomExt total{0, 0};
  for (const auto& [fs, fm] : decomposeGeneral(f).summands)
    for (const auto& [es, em] : decomposeGeneral(e).summands) {
      Integer chi = eulerForm(fs, es) * fm * em;
      if (chi > 0) total.hom += chi;
      else total.ext -= chi;
    }
  return total;
}

}  // namespace p2coh
