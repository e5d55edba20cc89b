#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shuffleforge/shuffle.hpp"

namespace shuffleforge::detail {

inline int mod(int a, int n) { return ((a % n) + n) % n; }

// Numerator factor (ma*a - c*mb*b) of a kernel entry, homogeneous in (a, b).
struct KernelBinomial {
  Monomial ma;
  Rational c;
  Monomial mb;
};

struct KernelEntry {
  std::vector<KernelBinomial> num;
  int den_power = 0;  // power of (a - b)
};

KernelEntry kernel_entry(int n, int i, int j);

// One colour-wise shuffle: slot permutation and its sign.
struct Shuffle {
  std::vector<std::int8_t> perm;
  int sign = 1;
};

std::vector<Shuffle> shuffles(int n, const DegreeVector& k, const DegreeVector& m);

// Sign of the unpermuted product P for degrees k, l.
int product_sign(int n, const DegreeVector& k, const DegreeVector& l);

// Antisymmetrized numerator with machine-integer coefficients over compact
// monomials.  Empty when the inputs fall outside that representation.
std::optional<LaurentPoly> antisymmetrized_compact(const ShuffleElement& f, const ShuffleElement& g);
// A(f,g) == A(g,f) decided in the compact representation; empty as above.
std::optional<bool> commutes_compact(const ShuffleElement& f, const ShuffleElement& g);

}  // namespace shuffleforge::detail
