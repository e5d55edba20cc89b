#pragma once

#include <string>
#include <vector>

#include "shuffleforge/json_io.hpp"
#include "shuffleforge/ratfunc.hpp"

namespace shuffleforge {

enum class KernelCase { One, Two, Many };

struct AlgebraConfig {
  int n = 3;
  KernelCase kernel_case() const { return n == 1 ? KernelCase::One : n == 2 ? KernelCase::Two : KernelCase::Many; }
};

using DegreeVector = std::vector<int>;

DegreeVector add(const DegreeVector& a, const DegreeVector& b);
bool leq(const DegreeVector& a, const DegreeVector& b);
int total(const DegreeVector& k);
DegreeVector delta(int n, int times = 1);
std::string str(const DegreeVector& k);

// numerator / D(deg), D the pole denominator of the algebra.  The pole form
// is canonical, so two elements are equal iff their numerators are.
struct ShuffleElement {
  int n = 3;
  DegreeVector deg;
  LaurentPoly numerator;

  static ShuffleElement one(int n);
  static ShuffleElement zero(int n, DegreeVector deg);

  bool is_zero() const { return numerator.is_zero(); }
  ShuffleElement scaled(const LaurentPoly& c) const;
  bool operator==(const ShuffleElement& o) const {
    return n == o.n && deg == o.deg && numerator == o.numerator;
  }
};

ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b);
ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b);

// (x_a - x_b) factors of D(deg), with repetition.
struct PoleFactor {
  VarId a;
  VarId b;
};
std::vector<PoleFactor> pole_factors(int n, const DegreeVector& deg);
LaurentPoly pole_denominator(int n, const DegreeVector& deg);
int pole_degree(int n, const DegreeVector& deg);

// The element as an explicit fraction.
RatFunc as_ratfunc(const ShuffleElement& f);

// omega_{i,j}(z) for the algebra with n colors.
RatFunc omega(const AlgebraConfig& cfg, int i, int j);

ShuffleElement star(const ShuffleElement& f, const ShuffleElement& g);

// F*G - G*F.
ShuffleElement commutator(const ShuffleElement& f, const ShuffleElement& g);
// Decides F*G == G*F without dividing out the Vandermonde.
bool commutes(const ShuffleElement& f, const ShuffleElement& g);

// Rewrites raw over D(deg).  Throws PoleViolation or NotSymmetric.
ShuffleElement normalize_to_pole_form(const RatFunc& raw, int n, const DegreeVector& deg);

bool is_color_symmetric(const ShuffleElement& f);

struct WheelReport {
  bool ok = true;
  bool convention_dependent = false;  // n = 2
  std::string failing;                // first failing pattern
};
WheelReport wheel_check(const ShuffleElement& f);

ShuffleElement monomial_generator(int n, int color, int k);

// Coefficients of the powers of v, lowest power first.
std::vector<ShuffleElement> coefficients_in(const ShuffleElement& f, const VarId& v);

// Throws Inhomogeneous.
int tot_deg(const ShuffleElement& f);

Json to_json(const ShuffleElement& f);
ShuffleElement element_from_json(const Json& j);

namespace kernels {

// Sum over colour-wise shuffles sigma of sgn(sigma) * sigma(P * V_F * V_G),
// the antisymmetrized numerator of F*G before division by the Vandermonde.
LaurentPoly antisymmetrized_serial(const ShuffleElement& f, const ShuffleElement& g);
LaurentPoly antisymmetrized_parallel(const ShuffleElement& f, const ShuffleElement& g);

}  // namespace kernels

}  // namespace shuffleforge
