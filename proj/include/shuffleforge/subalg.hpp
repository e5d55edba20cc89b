#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "shuffleforge/shuffle.hpp"

namespace shuffleforge {

// F_k^mu(s) with s_0 = (s_1 ... s_{n-1})^{-1}.
ShuffleElement gen_F_k_mu(int n, int k, const VarId& mu);
// F_k in pole form; the displayed denominator differs from D(k delta) by (-1)^{nk^2}.
ShuffleElement gen_F_k(int n, int k);
// Coefficient of t^k in log(sum_k F_k t^k), computed with the star product.
ShuffleElement gen_L_k(int n, int k);
// n = 1 only.
ShuffleElement gen_K_m(int m);
// Gamma^0_{p;N}; d^{-n/2} is written through h with h^2 = d.  For n = 1 the
// analogous closed form over Delta.
ShuffleElement gen_Gamma0(int n, int p, int N);

// (-q^{k-1})^{nk} / (s_0^n s_1^{n-1} ... s_{n-1}), the ratio F_k / F_k^0.
LaurentPoly F_k_ratio(int n, int k);

struct GeneratorSpec {
  enum class Family { Monomial, Fmu, Fk, Lk, Km, Gamma0 };
  Family family = Family::Monomial;
  std::vector<int> indices;
  std::string param;  // variable name for Fmu

  // "e(i,k)", "F(k;mu1)", "K(m)", "Fk(k)", "Lk(k)", "Gamma0(p,N)"
  static GeneratorSpec parse(const std::string& text);
  std::string str() const;
  ShuffleElement build(int n) const;
};

// All products F_{k_1}^{mu_{i_1}} * ... with (k_t, i_t) in canonical
// multiset order: k descending, then symbol index ascending.
struct BasisEntry {
  std::vector<std::pair<int, int>> factors;  // (k, symbol index)
  std::string str(const std::vector<VarId>& mus) const;
};
std::vector<BasisEntry> product_shapes(int n_symbols, int k);
std::vector<ShuffleElement> product_basis(int n, int k, const std::vector<VarId>& mus);

// Coefficient of t^k in prod_{m>=1} (1-t^m)^{-n}.
mpz_class dim_R(int n, int k);

std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

struct SpanProbe {
  std::vector<ShuffleElement> elements;
  std::uint64_t seed = 1;
  int extra_points = 3;
};
// Rank of the evaluation matrix at seeded random points; a lower bound for
// the dimension of the span.
std::size_t rank_of_span(const SpanProbe& probe);

// omega_{i,j}(z) == g_{a_ij}(d^{m_ij} z) * omega_{j,i}(1/z)
bool kernel_reflection_holds(int n, int i, int j);

// Image of the cubic Serre relation for e_i, e_j at modes (k1, k2, l),
// symmetrized in k1, k2.
ShuffleElement serre_cubic(int n, int i, int j, int k1, int k2, int l);
// n = 2 quartic relation at modes (k1, k2, k3, l), symmetrized in the k's.
ShuffleElement serre_quartic(int i, int k1, int k2, int k3, int l);

}  // namespace shuffleforge
