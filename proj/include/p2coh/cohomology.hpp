#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p2coh/chern.hpp"
#include "p2coh/correspondence.hpp"
#include "p2coh/exceptional.hpp"

namespace p2coh {

enum class Region { I, II, IIIa, IIIb, IVa, IVb, IVc, IVd, Va, Vb, Vc, Vd, ExceptionalPath, TorsionPath };

const char* toString(Region r);
Region parseRegion(std::string_view text);

struct CohomologyReport {
  Integer h0, h1, h2;
  Region region = Region::ExceptionalPath;
  std::optional<Region> dualRegion;  // region of (v^D, w^*) when the dual run happened
  bool special = false;
  Integer chi;
  bool requiresDivisibility = false;
  std::optional<Integer> sufficientMultiple;
  std::vector<std::string> notes;
};

// Throws std::logic_error describing the first violated report invariant.
void checkReport(const CohomologyReport& r);

// Everything the region tests need from v, computed once.
struct RegionContext {
  ChernCharacter v;
  ResolutionData rd;
  ExceptionalSlope gamma;  // nu+ . beta
  ChernCharacter uPlus;
  QuadraticNumber leftEdge;  // nu+ - x_{nu+}
};

RegionContext regionContext(const ChernCharacter& v);
Region classifyRegion(const RegionContext& ctx, const ChernCharacter& w);
Region classifyRegion(const ChernCharacter& v, const ChernCharacter& w);

CohomologyReport twistByExceptional(const ChernCharacter& v, const ExceptionalSlope& e);
CohomologyReport genericCohomology(const ChernCharacter& v, const ChernCharacter& w);

bool cohomologicallyOrthogonal(const ChernCharacter& v, const ChernCharacter& w);

// Least m with m*w in Z u+ + Z u-, for w in v-perp.
Integer sufficientMultiple(const ChernCharacter& v, const ChernCharacter& w);
// Exponent of (v-perp in the integral lattice) / (Z u+ + Z u-).
Integer orthogonalLatticeExponent(const ChernCharacter& v);

enum class GGVerdict { Guaranteed, NotImplied };
const char* toString(GGVerdict g);

GGVerdict homGloballyGenerated(const ChernCharacter& v, const ChernCharacter& w);
GGVerdict tensorGloballyGenerated(const ChernCharacter& v, const ChernCharacter& w);

}  // namespace p2coh
