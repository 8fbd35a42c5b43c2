#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p2coh/quadratic.hpp"
#include "p2coh/rational.hpp"

namespace p2coh {

// Dimension vector (b, a) for the N-arrow Kronecker quiver.
struct KroneckerShape {
  long n = 3;
  Integer b;
  Integer a;

  std::string str() const;  // "N:b,a"
  friend bool operator==(const KroneckerShape&, const KroneckerShape&) = default;
};

KroneckerShape parseShape(std::string_view text);

struct GeneralDecomposition {
  std::vector<std::pair<KroneckerShape, Integer>> summands;
};

Integer eulerForm(const KroneckerShape& f, const KroneckerShape& e);

// 1 - b^2 - a^2 + N b a
Integer expectedDimension(const KroneckerShape& s);

// psi_N = (N + sqrt(N^2 - 4))/2
QuadraticNumber psi(long n);

std::vector<KroneckerShape> exceptionalOrbit(long n, long count);

bool semistableExists(const KroneckerShape& s);
bool genericallySemistable(const KroneckerShape& s);  // semistableExists on the primitive vector

GeneralDecomposition decomposeGeneral(const KroneckerShape& s);

struct HomExt {
  Integer hom;
  Integer ext;
  friend bool operator==(const HomExt&, const HomExt&) = default;
};

HomExt generalHomExt(const KroneckerShape& f, const KroneckerShape& e);

}  // namespace p2coh
