#include "p2coh/exceptional.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "p2coh/errors.hpp"

namespace p2coh {

DyadicIndex DyadicIndex::reduced(Integer p, unsigned q) {
  while (q > 0 && mpz_even_p(p.get_mpz_t())) {
    p /= 2;
    --q;
  }
  return {std::move(p), q};
}

Rational DyadicIndex::value() const {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, q);
  return makeRational(p, den);
}

std::string DyadicIndex::str() const {
  if (q == 0) return toString(p);
  return toString(p) + "/2^" + std::to_string(q);
}

DyadicIndex parseDyadic(std::string_view text) {
  auto caret = text.find("/2^");
  if (caret != std::string_view::npos) {
    Integer p = parseInteger(text.substr(0, caret));
    Integer q = parseInteger(text.substr(caret + 3));
    if (q < 0 || q > 4096) throw ParseError("bad dyadic exponent: '" + std::string(text) + "'");
    return DyadicIndex::reduced(p, static_cast<unsigned>(q.get_ui()));
  }
  return dyadicFromRational(parseRational(text));
}

DyadicIndex dyadicFromRational(const Rational& x) {
  const Integer& den = x.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1)
    throw ParseError("denominator is not a power of two: " + toString(x));
  unsigned q = static_cast<unsigned>(mpz_scan1(den.get_mpz_t(), 0));
  return DyadicIndex::reduced(x.get_num(), q);
}

DyadicIndex dyadicMid(const ExceptionalSlope& x, const ExceptionalSlope& y) {
  return dyadicFromRational((x.index.value() + y.index.value()) / 2);
}

ChernCharacter ExceptionalSlope::character() const {
  return ChernCharacter::fromSlopeDisc(rank, {mu, disc});
}

namespace {

Rational discOfRank(const Integer& r) { return (1 - Rational(1) / Rational(r * r)) / 2; }

ExceptionalSlope build(DyadicIndex idx, Rational mu) {
  ExceptionalSlope e;
  e.index = std::move(idx);
  e.rank = mu.get_den();
  e.disc = discOfRank(e.rank);
  e.halfWidth = QuadraticNumber(Rational(3, 2), Rational(-1, 2), 5 + 8 * e.disc);
  e.mu = std::move(mu);
  return e;
}

Rational dotValue(const Rational& a, const Rational& da, const Rational& b, const Rational& db) {
  return (a + b) / 2 + (db - da) / (3 + a - b);
}

// Memo of epsilon on [0,1): key (q, p) with 0 <= p < 2^q, p odd.
class EpsilonTable {
 public:
  Rational fractional(const Integer& p, unsigned q) {
    if (q == 0) return Rational(p);
    Key key{q, p};
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    // (2k+1)/2^q = eps(k/2^(q-1)) . eps((k+1)/2^(q-1))
    Integer k = (p - 1) / 2;
    Rational a = valueAt(k, q - 1);
    Rational b = valueAt(k + 1, q - 1);
    Rational da = discOfRank(a.get_den());
    Rational db = discOfRank(b.get_den());
    Rational v = dotValue(a, da, b, db);
    std::unique_lock lock(mutex_);
    table_.emplace(key, v);
    return v;
  }

  // value of eps(p/2^q) for 0 <= p <= 2^q, unreduced
  Rational valueAt(const Integer& p, unsigned q) {
    DyadicIndex r = DyadicIndex::reduced(p, q);
    if (r.q == 0) return Rational(r.p);
    return fractional(r.p, r.q);
  }

 private:
  struct Key {
    unsigned q;
    Integer p;
    bool operator<(const Key& o) const { return q != o.q ? q < o.q : p < o.p; }
  };
  std::shared_mutex mutex_;
  std::map<Key, Rational> table_;
};

EpsilonTable& table() {
  static EpsilonTable t;
  return t;
}

}  // namespace

ExceptionalSlope epsilon(const Integer& p, unsigned q) {
  DyadicIndex idx = DyadicIndex::reduced(p, q);
  if (idx.q == 0) return build(idx, Rational(idx.p));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, idx.q);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), idx.p.get_mpz_t(), scale.get_mpz_t());
  Integer frac = idx.p - n * scale;
  Rational mu = Rational(n) + table().fractional(frac, idx.q);
  return build(std::move(idx), std::move(mu));
}

ExceptionalSlope negate(const ExceptionalSlope& a) { return epsilon(-a.index.p, a.index.q); }

ExceptionalSlope shift(const ExceptionalSlope& a, const Integer& n) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, a.index.q);
  return epsilon(a.index.p + n * scale, a.index.q);
}

Rational dot(const ExceptionalSlope& alpha, const ExceptionalSlope& beta) {
  return dotValue(alpha.mu, alpha.disc, beta.mu, beta.disc);
}

std::pair<ExceptionalSlope, ExceptionalSlope> decompose(const ExceptionalSlope& nu) {
  if (nu.isInteger()) return {epsilon(nu.index.p - 1, 0), epsilon(nu.index.p + 1, 0)};
  Integer k = (nu.index.p - 1) / 2;
  return {epsilon(k, nu.index.q - 1), epsilon(k + 1, nu.index.q - 1)};
}

MutationSlopes mutationSlopes(const ExceptionalSlope& beta) {
  if (beta.isInteger()) throw std::invalid_argument("mutationSlopes needs a non-integer slope");
  unsigned q = beta.index.q;
  Integer p = beta.index.p - 1;  // even
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, q);
  MutationSlopes m;
  m.alpha = epsilon(p, q);
  m.eta = epsilon(p + 2, q);
  Integer i;
  mpz_fdiv_r_ui(i.get_mpz_t(), p.get_mpz_t(), 4);
  if (i == 0) {
    m.zeta = epsilon(p + 4 - 3 * scale, q);
    m.omega = epsilon(p + 4, q);
  } else {
    m.zeta = epsilon(p - 2, q);
    m.omega = epsilon(p - 2 + 3 * scale, q);
  }
  return m;
}

namespace {

enum class Side { Below, Inside, Above, LeftEnd, RightEnd };

Side position(const QuadraticNumber& t, const ExceptionalSlope& a) {
  auto cl = compare(t, a.left());
  if (cl < 0) return Side::Below;
  if (cl == 0) return Side::LeftEnd;
  auto cr = compare(t, a.right());
  if (cr > 0) return Side::Above;
  if (cr == 0) return Side::RightEnd;
  return Side::Inside;
}

std::optional<LocateResult> decided(Side s, const ExceptionalSlope& a) {
  using K = LocateResult::Kind;
  switch (s) {
    case Side::Inside: return LocateResult{K::Interior, a};
    case Side::LeftEnd: return LocateResult{K::LeftEndpoint, a};
    case Side::RightEnd: return LocateResult{K::RightEndpoint, a};
    default: return std::nullopt;
  }
}

Integer floorOf(const QuadraticNumber& t) {
  Integer n(std::floor(t.toDouble()));
  while (compare(t, QuadraticNumber(Rational(n))) < 0) n -= 1;
  while (compare(t, QuadraticNumber(Rational(n + 1))) >= 0) n += 1;
  return n;
}

}  // namespace

LocateResult locate(const QuadraticNumber& t, unsigned maxOrder) {
  Integer n = floorOf(t);
  ExceptionalSlope lo = epsilon(n, 0);
  if (auto r = decided(position(t, lo), lo)) return *r;
  ExceptionalSlope hi = epsilon(n + 1, 0);
  if (auto r = decided(position(t, hi), hi)) return *r;
  // t lies strictly between the intervals of lo = L/2^(d-1) and hi = (L+1)/2^(d-1)
  Integer L = n;
  for (unsigned d = 1; d <= maxOrder; ++d) {
    ExceptionalSlope mid = epsilon(2 * L + 1, d);
    Side s = position(t, mid);
    if (auto r = decided(s, mid)) return *r;
    L = (s == Side::Below) ? Integer(2 * L) : Integer(2 * L + 1);
  }
  return {};
}

ExceptionalSlope locateSlope(const QuadraticNumber& t, unsigned maxOrder) {
  LocateResult r = locate(t, maxOrder);
  if (r.kind == LocateResult::Kind::DepthExceeded)
    throw DepthExceededError("no exceptional interval found for " + t.str() + " within order " +
                             std::to_string(maxOrder));
  return *r.slope;
}

std::optional<ExceptionalSlope> exceptionalFromSlope(const Rational& mu) {
  ExceptionalSlope a = locateSlope(QuadraticNumber(mu));
  if (a.mu == mu) return a;
  return std::nullopt;
}

Rational delta(const Rational& mu) {
  LocateResult r = locate(QuadraticNumber(mu));
  switch (r.kind) {
    case LocateResult::Kind::Interior: {
      Rational gap = mu - r.slope->mu;
      Rational d = hilbertP(Rational(-abs(gap))) - r.slope->disc;
      return d;
    }
    case LocateResult::Kind::LeftEndpoint:
    case LocateResult::Kind::RightEndpoint: return Rational(1, 2);
    default: throw DepthExceededError("delta(" + toString(mu) + "): locate depth exceeded");
  }
}

bool existsPositiveDimensionalModuli(const ChernCharacter& v) {
  if (!v.isPositiveRank()) throw std::invalid_argument("positive rank required: " + v.str());
  return v.discriminant() >= delta(v.slope());
}

std::optional<std::pair<ExceptionalSlope, Integer>> exceptionalMultiple(const ChernCharacter& v) {
  if (!v.isPositiveRank()) return std::nullopt;
  Rational mu = v.slope();
  std::optional<ExceptionalSlope> a = exceptionalFromSlope(mu);
  if (!a || v.discriminant() != a->disc) return std::nullopt;
  if (!mpz_divisible_p(v.rank().get_mpz_t(), a->rank.get_mpz_t())) return std::nullopt;
  Integer m = v.rank() / a->rank;
  return std::make_pair(*a, m);
}

bool isExceptionalCharacter(const ChernCharacter& v) {
  auto em = exceptionalMultiple(v);
  return em && em->second == 1;
}

Cohomology excPairCohomology(const ExceptionalSlope& a, const ExceptionalSlope& b) {
  Rational chi = eulerPairing(a.character(), b.character());
  Rational mu = a.mu + b.mu;
  Integer value = Rational(abs(chi)).get_num();
  if (mu >= 0) return {value, 0, 0};
  if (mu > -3) return {0, value, 0};
  return {0, 0, value};
}

bool excHomGloballyGenerated(const ExceptionalSlope& e, const ExceptionalSlope& f) {
  return ceilOf(e.mu) <= f.mu;
}

bool excGloballyGenerated(const ExceptionalSlope& e) { return e.mu >= 0; }

}  // namespace p2coh
