#pragma once

#include <cstdint>

#include "p2coh/kronecker.hpp"
#include "p2coh/rational.hpp"

namespace p2coh {

struct OracleConfig {
  std::uint64_t prime = 32003;
  int trials = 5;
  std::uint64_t seed = 0x5eed;
};

// Throws OracleConfigError.
void validate(const OracleConfig& cfg, const KroneckerShape& f, const KroneckerShape& e);

// Generic dim Hom(f, e) estimated over F_p: minimum kernel dimension of
// (beta, alpha) -> (e_k beta - alpha f_k)_k over random module structures.
long kroneckerHomOracle(const KroneckerShape& f, const KroneckerShape& e,
                        const OracleConfig& cfg = {});

// max over exceptional alpha of order <= maxOrder, |mu - alpha| < 3, of P(-|mu-alpha|) - D_alpha
Rational deltaBruteForce(const Rational& mu, unsigned maxOrder);

}  // namespace p2coh
