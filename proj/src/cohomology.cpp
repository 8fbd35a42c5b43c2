#include "p2coh/cohomology.hpp"

#include <array>
#include <stdexcept>

#include "p2coh/errors.hpp"

namespace p2coh {

namespace {

constexpr std::array<const char*, 14> kRegionNames = {
    "I",  "II", "IIIa", "IIIb", "IVa", "IVb", "IVc", "IVd",
    "Va", "Vb", "Vc",   "Vd",   "ExceptionalPath", "TorsionPath"};

Rational chiWith(const ChernCharacter& w, const ExceptionalSlope& e) {
  return eulerPairing(w, e.character());
}

Integer integral(const Rational& x) {
  if (!isInteger(x)) throw std::logic_error("non-integral Euler characteristic " + toString(x));
  return x.get_num();
}

// What a region implies about (h0, h1, h2).
struct Claims {
  bool h0Zero = false, h1Zero = false, h2Zero = false;
  std::optional<Cohomology> exact;
};

Claims claimsFor(Region r, const RegionContext& ctx, const ChernCharacter& w) {
  Claims c;
  switch (r) {
    case Region::I:
    case Region::II:
    case Region::IIIa:
    case Region::Va: c.h1Zero = c.h2Zero = true; break;
    case Region::IIIb: {
      Integer h0 = ctx.rd.m3 * integral(chiWith(w, negate(ctx.rd.nuPlus)));
      Integer h1 = -integral(eulerPairing(ctx.rd.kChar, w));
      c.exact = Cohomology{h0, h1, 0};
      break;
    }
    case Region::IVa: c.h1Zero = true; break;
    case Region::IVb:
    case Region::IVc:
    case Region::IVd:
    case Region::Vb:
    case Region::Vc:
    case Region::Vd: c.h0Zero = true; break;
    default: break;
  }
  return c;
}

bool agrees(const Claims& c, const Cohomology& h, bool ignoreH2 = false) {
  if (c.exact) return ignoreH2 ? (c.exact->h0 == h.h0 && c.exact->h1 == h.h1) : *c.exact == h;
  if (c.h0Zero && h.h0 != 0) return false;
  if (c.h1Zero && h.h1 != 0) return false;
  if (!ignoreH2 && c.h2Zero && h.h2 != 0) return false;
  return true;
}

Cohomology mirrored(const Cohomology& h) { return {h.h2, h.h1, h.h0}; }

bool noMultipleNeeded(Region r) {
  return r == Region::I || r == Region::II || r == Region::IIIa || r == Region::IIIb;
}

int nonzeroCount(const Cohomology& h) {
  return (h.h0 != 0) + (h.h1 != 0) + (h.h2 != 0);
}

void fill(CohomologyReport& rep, const Cohomology& h) {
  rep.h0 = h.h0;
  rep.h1 = h.h1;
  rep.h2 = h.h2;
  rep.special = nonzeroCount(h) >= 2;
}

// One nonzero group, placed by the sign of chi on the side allowed by the slope.
Cohomology bySign(const Integer& chi, bool h2Side) {
  if (chi < 0) return {0, -chi, 0};
  return h2Side ? Cohomology{0, 0, chi} : Cohomology{chi, 0, 0};
}

std::string pairText(const ChernCharacter& v, const ChernCharacter& w) {
  return "v = " + v.str() + ", w = " + w.str();
}

bool isRankOneIdeal(const ChernCharacter& v) { return v.rank() == 1 && v.discriminant() > 0; }

// Rank-one v = ch I_Z(a): H^2(I_Z(a) (x) W) = H^2(W(a)).
Cohomology rankOneCohomology(const Integer& chi, const Integer& h2, const Claims& primal,
                             bool primalUsable) {
  if (primalUsable && primal.exact) return *primal.exact;
  if (primalUsable) return bySign(chi, false);
  Integer h1 = h2 - chi;
  if (h1 < 0) throw std::logic_error("rank-one H^1 would be negative");
  return {0, h1, h2};
}

}  // namespace

const char* toString(Region r) { return kRegionNames[static_cast<std::size_t>(r)]; }

Region parseRegion(std::string_view text) {
  for (std::size_t i = 0; i < kRegionNames.size(); ++i)
    if (text == kRegionNames[i]) return static_cast<Region>(i);
  throw ParseError("unknown region '" + std::string(text) + "'");
}

const char* toString(GGVerdict g) {
  return g == GGVerdict::Guaranteed ? "guaranteed" : "not-implied";
}

void checkReport(const CohomologyReport& r) {
  if (r.h0 < 0 || r.h1 < 0 || r.h2 < 0) throw std::logic_error("negative cohomology");
  if (r.h0 - r.h1 + r.h2 != r.chi) throw std::logic_error("h0 - h1 + h2 != chi");
  if (r.h0 != 0 && r.h2 != 0) throw std::logic_error("h0 and h2 both nonzero");
  int nz = nonzeroCount({r.h0, r.h1, r.h2});
  if (r.special != (nz >= 2)) throw std::logic_error("special flag disagrees with the values");
  if (r.special) {
    bool rankOne = false;
    for (const auto& n : r.notes) rankOne = rankOne || n.rfind("rank-one", 0) == 0;
    bool viaIIIb = (r.h0 != 0 && r.region == Region::IIIb) ||
                   (r.h2 != 0 && r.dualRegion == Region::IIIb);
    if (!viaIIIb && !rankOne) throw std::logic_error("special cohomology outside region IIIb");
  }
  if (r.sufficientMultiple && (r.chi != 0 || *r.sufficientMultiple < 1))
    throw std::logic_error("sufficient multiple reported off the chi = 0 locus");
}

RegionContext regionContext(const ChernCharacter& v) {
  RegionContext ctx;
  ctx.v = v;
  ctx.rd = resolution(v);
  ctx.gamma = epsilon(dyadicMid(ctx.rd.nuPlus, ctx.rd.beta));
  ExceptionalSlope e = ctx.rd.signCase == SignCase::PositiveChi
                           ? negate(ctx.rd.nuPlus)
                           : negate(shift(ctx.rd.nuPlus, 3));
  ctx.uPlus = orthogonalIntersection(v, e);
  ctx.leftEdge = ctx.rd.nuPlus.left();
  return ctx;
}

Region classifyRegion(const RegionContext& ctx, const ChernCharacter& w) {
  if (exceptionalMultiple(w)) return Region::ExceptionalPath;
  if (!w.isPositiveRank()) throw std::invalid_argument("w must have positive rank: " + w.str());
  requireModuli(w);
  const ResolutionData& rd = ctx.rd;
  const Rational omega = correspondingExceptionals(w).nuPlus.mu;
  const Rational mb = -rd.beta.mu, mg = -ctx.gamma.mu, mn = -rd.nuPlus.mu;
  const Rational cb = chiWith(w, negate(rd.beta));
  const Rational cg = chiWith(w, negate(ctx.gamma));
  const Rational cn = chiWith(w, negate(rd.nuPlus));
  const Rational ck = eulerPairing(rd.kChar, w);
  const bool positive = rd.signCase == SignCase::PositiveChi;

  if (omega <= mb && cb >= 0) return Region::I;
  if (mb <= omega && omega <= mg && cb <= 0 && cg >= 0) return Region::II;
  if (mg <= omega && omega <= mn && cg <= 0 && cn >= 0) {
    if (ck >= 0) return Region::IIIa;
    if (positive) return Region::IIIb;
  }
  const Rational cvw = eulerPairing(ctx.v, w);
  const Rational muw = w.slope();
  const Rational muu = ctx.uPlus.slope();
  // IVa and Va sit above region IIIa; their inequalities only apply in that slope window.
  if (positive) {
    auto side = compare(QuadraticNumber(muw), ctx.leftEdge);
    if (side > 0 && cvw >= 0 && cn <= 0) return Region::IVa;
    if (muw >= muu && cvw <= 0) return Region::IVb;
    if (side > 0 && muw <= muu && cn <= 0) return Region::IVc;
    if (side < 0) return Region::IVd;
  } else {
    if (muw > rd.nuPlus.mu && cvw >= 0 && (ck <= 0 || cn <= 0)) return Region::Va;
    if (muw >= muu && cvw <= 0) return Region::Vb;
    if (rd.nuPlus.mu <= muw && muw <= muu) return Region::Vc;
    if (muw <= rd.nuPlus.mu) return Region::Vd;
  }
  throw std::logic_error("no region matches " + pairText(ctx.v, w));
}

Region classifyRegion(const ChernCharacter& v, const ChernCharacter& w) {
  if (exceptionalMultiple(v) || exceptionalMultiple(w)) return Region::ExceptionalPath;
  return classifyRegion(regionContext(v), w);
}

CohomologyReport twistByExceptional(const ChernCharacter& v, const ExceptionalSlope& e) {
  CohomologyReport rep;
  rep.region = Region::ExceptionalPath;
  rep.chi = integral(chiWith(v, e));
  if (v.isTorsion()) {
    fill(rep, bySign(rep.chi, false));
    return rep;
  }
  if (!v.isPositiveRank()) throw UnstableCharacterError("no sheaves of character " + v.str());
  Rational mu = v.slope() + e.mu;
  if (auto em = exceptionalMultiple(v)) {
    Cohomology h = excPairCohomology(em->first, e);
    fill(rep, {h.h0 * em->second, h.h1 * em->second, h.h2 * em->second});
    return rep;
  }
  requireModuli(v);
  if (isRankOneIdeal(v)) {
    Cohomology tw = excPairCohomology(lineBundleSlope(v.c1()), e);
    rep.notes.push_back("rank-one v = I_Z(a): H^2 equals H^2(E(a))");
    if (mu >= 0) fill(rep, bySign(rep.chi, false));
    else fill(rep, {0, tw.h2 - rep.chi, tw.h2});
    return rep;
  }
  const Integer& chi = rep.chi;
  if (chi == 0) fill(rep, {0, 0, 0});
  else if (chi < 0) fill(rep, {0, -chi, 0});
  else if (mu >= 0) fill(rep, {chi, 0, 0});
  else if (mu <= -3) fill(rep, {0, 0, chi});
  else throw std::logic_error("positive chi with -3 < mu < 0 for stable " + v.str());
  return rep;
}

CohomologyReport genericCohomology(const ChernCharacter& vIn, const ChernCharacter& wIn) {
  if (vIn.isTorsion() && wIn.isTorsion())
    throw std::invalid_argument("both characters are torsion");
  for (const auto* c : {&vIn, &wIn}) {
    if (c->kind() == ChernCharacter::Kind::Virtual)
      throw std::invalid_argument("not the character of a sheaf: " + c->str());
    if (!c->isIntegral()) throw IntegralityError(c->str() + " is not integral");
  }
  // the torsion factor, if any, plays the role of v
  const ChernCharacter& v = wIn.isTorsion() ? wIn : vIn;
  const ChernCharacter& w = wIn.isTorsion() ? vIn : wIn;

  if (auto ew = exceptionalMultiple(w)) {
    CohomologyReport rep = twistByExceptional(v, ew->first);
    rep.chi = integral(eulerPairing(v, w));
    fill(rep, {rep.h0 * ew->second, rep.h1 * ew->second, rep.h2 * ew->second});
    checkReport(rep);
    return rep;
  }
  if (auto ev = exceptionalMultiple(v)) {
    CohomologyReport rep = twistByExceptional(w, ev->first);
    rep.chi = integral(eulerPairing(v, w));
    fill(rep, {rep.h0 * ev->second, rep.h1 * ev->second, rep.h2 * ev->second});
    checkReport(rep);
    return rep;
  }
  requireModuli(v);
  requireModuli(w);

  CohomologyReport rep;
  rep.chi = integral(eulerPairing(v, w));
  RegionContext pc = regionContext(v);
  Region pr = classifyRegion(pc, w);

  if (v.isTorsion()) {
    rep.region = Region::TorsionPath;
    rep.requiresDivisibility = true;
    rep.notes.push_back(std::string("geometric region ") + toString(pr));
    fill(rep, bySign(rep.chi, false));
    checkReport(rep);
    return rep;
  }

  Rational mu = v.slope() + w.slope();
  Claims primal = claimsFor(pr, pc, w);
  rep.region = pr;

  if (isRankOneIdeal(v)) {
    CohomologyReport wa = twistByExceptional(w, lineBundleSlope(v.c1()));
    rep.notes.push_back("rank-one v = I_Z(a): H^2 equals H^2(W(a))");
    Cohomology h = rankOneCohomology(rep.chi, wa.h2, primal, mu >= 0);
    if (mu >= 0 && !agrees(primal, h, true))
      throw std::logic_error("rank-one values contradict region " + std::string(toString(pr)) +
                             " for " + pairText(v, w));
    fill(rep, h);
    rep.requiresDivisibility = mu >= 0 && !noMultipleNeeded(pr);
    if (rep.chi == 0 && rep.requiresDivisibility) rep.sufficientMultiple = sufficientMultiple(v, w);
    checkReport(rep);
    return rep;
  }

  ChernCharacter vd = serreDual(v), wd = dual(w);
  RegionContext dc = regionContext(vd);
  Region dr = classifyRegion(dc, wd);
  Claims dualClaims = claimsFor(dr, dc, wd);
  rep.dualRegion = dr;

  Cohomology h;
  if (mu >= 0) {
    h = primal.exact ? *primal.exact : bySign(rep.chi, false);
    rep.requiresDivisibility = !noMultipleNeeded(pr);
  } else if (mu <= -3) {
    h = dualClaims.exact ? mirrored(*dualClaims.exact) : bySign(rep.chi, true);
    rep.requiresDivisibility = !noMultipleNeeded(dr);
    if (dualClaims.exact && nonzeroCount(h) >= 2)
      rep.notes.push_back("special via the Serre dual pair (region IIIb of (v^D, w^*))");
  } else {
    if (rep.chi > 0) throw std::logic_error("positive chi with -3 < mu < 0 for " + pairText(v, w));
    h = {0, -rep.chi, 0};
  }
  if (!agrees(primal, h))
    throw std::logic_error("values contradict region " + std::string(toString(pr)) + " for " +
                           pairText(v, w));
  if (!agrees(dualClaims, mirrored(h)))
    throw std::logic_error("values contradict dual region " + std::string(toString(dr)) +
                           " for " + pairText(v, w));
  fill(rep, h);
  if (rep.chi == 0 && rep.requiresDivisibility) rep.sufficientMultiple = sufficientMultiple(v, w);
  checkReport(rep);
  return rep;
}

bool cohomologicallyOrthogonal(const ChernCharacter& v, const ChernCharacter& w) {
  if (eulerPairing(v, w) != 0) throw std::invalid_argument("chi(v (x) w) is not zero");
  if (!v.isPositiveRank() || !w.isPositiveRank())
    throw std::invalid_argument("both characters need positive rank");
  requireModuli(v);
  requireModuli(w);
  OrthogonalPair op = orthogonalCharacters(v);
  Rational muw = w.slope();
  return muw >= op.uPlus.slope() || muw <= op.uMinus.slope();
}

namespace {

using IVec = std::array<Integer, 3>;

// Integral characters in (r, c1, chi) coordinates form Z^3.
IVec coords(const ChernCharacter& x) {
  Rational chi = x.euler();
  if (!isInteger(chi)) throw IntegralityError(x.str() + " is not integral");
  return {x.rank(), x.c1(), chi.get_num()};
}

// Primitive integer functional l with l . coords(x) proportional to chi(v (x) x).
IVec perpFunctional(const ChernCharacter& v) {
  Rational r(v.rank()), c1(v.c1());
  Rational g0 = r + Rational(3, 2) * c1 + v.ch2(), g1 = Rational(3, 2) * r + c1, g2 = r;
  // ch2 = chi - r - 3c1/2
  std::array<Rational, 3> l = {g0 - g2, g1 - Rational(3, 2) * g2, g2};
  Integer den = 1;
  for (const auto& x : l) den = lcm(den, x.get_den());
  IVec out;
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    out[i] = Rational(l[i] * Rational(den)).get_num();
    g = gcd(g, out[i]);
  }
  for (auto& x : out) x /= g;
  return out;
}

struct PerpBasis {
  IVec k1, k2;
};

PerpBasis perpBasis(const IVec& l) {
  Integer g = gcd(l[0], l[1]);
  if (g == 0) return {{1, 0, 0}, {0, 1, 0}};
  Integer s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), l[0].get_mpz_t(), l[1].get_mpz_t());
  return {{l[1] / g, -l[0] / g, 0}, {-l[2] * s, -l[2] * t, g}};
}

// coordinates of x in the basis
std::array<Integer, 2> inBasis(const PerpBasis& b, const IVec& x) {
  Integer c2 = x[2] / b.k2[2];
  Integer y0 = x[0] - c2 * b.k2[0], y1 = x[1] - c2 * b.k2[1];
  Integer c1 = b.k1[0] != 0 ? Integer(y0 / b.k1[0]) : Integer(y1 / b.k1[1]);
  return {c1, c2};
}

struct Sublattice {
  PerpBasis basis;
  std::array<Integer, 2> u, v;  // u+ and u- in the basis
};

Sublattice orthogonalSublattice(const ChernCharacter& v) {
  OrthogonalPair op = orthogonalCharacters(v);
  Sublattice s;
  s.basis = perpBasis(perpFunctional(v));
  s.u = inBasis(s.basis, coords(op.uPlus));
  s.v = inBasis(s.basis, coords(op.uMinus));
  return s;
}

}  // namespace

Integer sufficientMultiple(const ChernCharacter& v, const ChernCharacter& w) {
  if (eulerPairing(v, w) != 0) throw std::invalid_argument("chi(v (x) w) is not zero");
  Sublattice s = orthogonalSublattice(v);
  auto c = inBasis(s.basis, coords(w));
  Integer det = s.u[0] * s.v[1] - s.u[1] * s.v[0];
  if (det == 0) throw std::logic_error("u+ and u- are proportional");
  // w = x u + y v  with (x, y) = adj * c / det
  Rational x = makeRational(s.v[1] * c[0] - s.v[0] * c[1], det);
  Rational y = makeRational(-s.u[1] * c[0] + s.u[0] * c[1], det);
  return lcm(x.get_den(), y.get_den());
}

Integer orthogonalLatticeExponent(const ChernCharacter& v) {
  Sublattice s = orthogonalSublattice(v);
  Integer det = abs(s.u[0] * s.v[1] - s.u[1] * s.v[0]);
  Integer g = gcd(gcd(s.u[0], s.u[1]), gcd(s.v[0], s.v[1]));
  return det / g;
}

namespace {

void requireNonExceptionalStable(const ChernCharacter& x) {
  if (!x.isPositiveRank()) throw std::invalid_argument("positive rank required: " + x.str());
  if (exceptionalMultiple(x))
    throw std::invalid_argument("exceptional input; use the exceptional criteria: " + x.str());
  requireModuli(x);
}

}  // namespace

GGVerdict homGloballyGenerated(const ChernCharacter& v, const ChernCharacter& w) {
  requireNonExceptionalStable(v);
  requireNonExceptionalStable(w);
  Rational nu = correspondingExceptionals(v).nuPlus.mu;
  Rational omegaMinus = correspondingExceptionals(w).nuMinus->mu;
  return nu - omegaMinus <= 2 ? GGVerdict::Guaranteed : GGVerdict::NotImplied;
}

GGVerdict tensorGloballyGenerated(const ChernCharacter& v, const ChernCharacter& w) {
  requireNonExceptionalStable(v);
  requireNonExceptionalStable(w);
  Rational nu = correspondingExceptionals(v).nuPlus.mu;
  Rational omega = correspondingExceptionals(w).nuPlus.mu;
  return nu + omega <= -1 ? GGVerdict::Guaranteed : GGVerdict::NotImplied;
}

}  // namespace p2coh
