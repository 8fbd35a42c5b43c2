#include "p2coh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <vector>

#include "p2coh/chern.hpp"
#include "p2coh/errors.hpp"
#include "p2coh/exceptional.hpp"

namespace p2coh {

namespace {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Matrix = std::vector<std::vector<std::uint32_t>>;

long rankModP(Matrix m, std::uint64_t p) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    // inverse by Fermat
    std::uint64_t inv = 1, base = m[rank][c], ex = p - 2;
    while (ex) {
      if (ex & 1) inv = inv * base % p;
      base = base * base % p;
      ex >>= 1;
    }
    auto& prow = m[rank];
    for (std::size_t k = c; k < cols; ++k) prow[k] = static_cast<std::uint32_t>(prow[k] * inv % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t factor = m[r][c];
      if (factor == 0) continue;
      auto& row = m[r];
      for (std::size_t k = c; k < cols; ++k)
        row[k] = static_cast<std::uint32_t>((row[k] + (p - factor) * prow[k]) % p);
    }
    ++rank;
  }
  return rank;
}

// N random a x b matrices over F_p
std::vector<Matrix> sampleModule(long n, long b, long a, std::mt19937_64& rng, std::uint64_t p) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<Matrix> out(n, Matrix(a, std::vector<std::uint32_t>(b)));
  for (auto& mat : out)
    for (auto& row : mat)
      for (auto& x : row) x = static_cast<std::uint32_t>(dist(rng));
  return out;
}

}  // namespace

void validate(const OracleConfig& cfg, const KroneckerShape& f, const KroneckerShape& e) {
  if (f.n != e.n) throw std::invalid_argument("Kronecker shapes have different arrow counts");
  if (cfg.trials < 1) throw OracleConfigError("trials must be positive");
  if (cfg.prime >= (1ULL << 31)) throw OracleConfigError("prime must be below 2^31");
  if (!isPrime(cfg.prime)) throw OracleConfigError(std::to_string(cfg.prime) + " is not prime");
  Integer biggest = std::max({f.b, f.a, e.b, e.a});
  if (Integer(cfg.prime) <= 2 * biggest)
    throw OracleConfigError("prime must exceed twice the largest dimension entry");
  if (biggest > 64) throw OracleConfigError("dimension entries above 64 are out of oracle range");
}

long kroneckerHomOracle(const KroneckerShape& f, const KroneckerShape& e, const OracleConfig& cfg) {
  validate(cfg, f, e);
  const long n = f.n;
  const long b1 = toLong(f.b), a1 = toLong(f.a), b = toLong(e.b), a = toLong(e.a);
  const std::uint64_t p = cfg.prime;
  // unknowns: beta (b x b1) then alpha (a x a1); equations (k, i < a, j < b1)
  const long betaVars = b * b1, vars = betaVars + a * a1;
  const long eqs = n * a * b1;
  const long lower = std::max<long>(0, toLong(eulerForm(f, e)));
  long best = vars;
  std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(0x9e3779b97f4a7c15ULL)};
  std::mt19937_64 master(seq);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(master());
    auto fk = sampleModule(n, b1, a1, rng, p);
    auto ek = sampleModule(n, b, a, rng, p);
    Matrix m(eqs, std::vector<std::uint32_t>(vars, 0));
    for (long k = 0; k < n; ++k)
      for (long i = 0; i < a; ++i)
        for (long j = 0; j < b1; ++j) {
          auto& row = m[(k * a + i) * b1 + j];
          // (e_k beta)_{ij} = sum_l e_k[i][l] beta[l][j]
          for (long l = 0; l < b; ++l) row[l * b1 + j] = ek[k][i][l];
          // -(alpha f_k)_{ij} = -sum_l alpha[i][l] f_k[l][j]
          for (long l = 0; l < a1; ++l)
            row[betaVars + i * a1 + l] = static_cast<std::uint32_t>((p - fk[k][l][j]) % p);
        }
    long kernel = vars - rankModP(std::move(m), p);
    best = std::min(best, kernel);
    if (best <= lower) break;
  }
  return best;
}

namespace {

struct TableEntry {
  ExceptionalSlope slope;
  double mu;
  double disc;
};

// fractional exceptional slopes of order <= q, in [0, 1)
const std::vector<TableEntry>& unitTable(unsigned q) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<TableEntry>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  std::vector<TableEntry> t;
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), 2, q);
  for (Integer k = 0; k < count; ++k) {
    ExceptionalSlope s = epsilon(k, q);
    t.push_back({s, s.mu.get_d(), s.disc.get_d()});
  }
  return cache.emplace(q, std::move(t)).first->second;
}

}  // namespace

Rational deltaBruteForce(const Rational& mu, unsigned maxOrder) {
  if (maxOrder > 20) throw std::invalid_argument("deltaBruteForce order bound above 20");
  const auto& table = unitTable(maxOrder);
  const double m = mu.get_d();
  const long base = toLong(floorOf(mu));
  // Candidate alphas: n + frac with n in [base-3, base+3].  Filter with doubles,
  // then decide the near-maximal ones exactly.
  struct Cand {
    long n;
    const TableEntry* e;
    double value;
  };
  std::vector<Cand> cands;
  double bestApprox = -INFINITY;
  for (long n = base - 3; n <= base + 3; ++n)
    for (const auto& e : table) {
      double gap = std::fabs(m - (n + e.mu));
      if (gap > 3 + 1e-9) continue;
      double x = -gap;
      double value = 0.5 * x * x + 1.5 * x + 1 - e.disc;
      cands.push_back({n, &e, value});
      bestApprox = std::max(bestApprox, value);
    }
  Rational best;
  bool have = false;
  for (const auto& c : cands) {
    if (c.value < bestApprox - 1e-9) continue;
    Rational alpha = Rational(c.n) + c.e->slope.mu;
    Rational gap = abs(mu - alpha);
    if (gap >= 3) continue;
    Rational value = hilbertP(Rational(-gap)) - c.e->slope.disc;
    if (!have || value > best) {
      best = value;
      have = true;
    }
  }
  if (!have) throw std::logic_error("deltaBruteForce found no candidate");
  return best;
}

}  // namespace p2coh
