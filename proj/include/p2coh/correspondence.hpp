#pragma once

#include <optional>

#include "p2coh/chern.hpp"
#include "p2coh/exceptional.hpp"
#include "p2coh/kronecker.hpp"

namespace p2coh {

enum class SignCase { PositiveChi, NonpositiveChi };

const char* toString(SignCase s);

struct CorrespondingExceptionals {
  ExceptionalSlope nuPlus;
  std::optional<ExceptionalSlope> nuMinus;  // absent for torsion
};

struct ResolutionData {
  SignCase signCase = SignCase::NonpositiveChi;
  ExceptionalSlope nuPlus;
  ExceptionalSlope alpha;
  ExceptionalSlope beta;
  Integer m1, m2, m3;
  ChernCharacter kChar;
  KroneckerShape kroneckerShape;
};

struct OrthogonalPair {
  ChernCharacter uPlus;
  ChernCharacter uMinus;
};

// Throws UnstableCharacterError unless v is torsion or has positive-dimensional moduli.
void requireModuli(const ChernCharacter& v);

CorrespondingExceptionals correspondingExceptionals(const ChernCharacter& v);
ResolutionData resolution(const ChernCharacter& v);
KroneckerShape kroneckerFibrationShape(const ChernCharacter& v);

// u+ alone; also defined for torsion v.
ChernCharacter primaryOrthogonal(const ChernCharacter& v);
OrthogonalPair orthogonalCharacters(const ChernCharacter& v);

// Minimal integral character on v-perp intersected with E_e-perp.
ChernCharacter orthogonalIntersection(const ChernCharacter& v, const ExceptionalSlope& e);

}  // namespace p2coh
