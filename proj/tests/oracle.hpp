#pragma once

// Reference implementations used only by the tests: products computed as
// plain sums of rational functions over explicitly enumerated shuffles.

#include <algorithm>
#include <functional>

#include "shuffleforge/shuffle.hpp"
#include "support.hpp"

namespace sf_test {

// omega_{i,j}(a/b) as a rational function in x-variables.
inline RatFunc omega_at(int n, int i, int j, const VarId& a, const VarId& b) {
  RatFunc w = omega(AlgebraConfig{n}, i, j);
  return substitute(w, {{VarId::z(), LaurentPoly::var(a) * LaurentPoly::var(b, -1)}});
}

// All ways to choose, per colour, which indices of 1..m_i carry the first
// factor's variables.
inline void for_each_split(const DegreeVector& k, const DegreeVector& m,
                           const std::function<void(const std::vector<std::vector<int>>&)>& body) {
  const std::size_t n = k.size();
  std::vector<std::vector<int>> chosen(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      body(chosen);
      return;
    }
    std::vector<int> mask(static_cast<std::size_t>(m[i]), 0);
    for (int t = 0; t < k[i]; ++t) mask[static_cast<std::size_t>(m[i] - 1 - t)] = 1;
    do {
      chosen[i].clear();
      for (int p = 0; p < m[i]; ++p) {
        if (mask[static_cast<std::size_t>(p)]) chosen[i].push_back(p + 1);
      }
      rec(i + 1);
    } while (std::next_permutation(mask.begin(), mask.end()));
  };
  rec(0);
}

inline RatFunc oracle_star(const ShuffleElement& F, const ShuffleElement& G) {
  const int n = F.n;
  DegreeVector m = add(F.deg, G.deg);
  RatFunc fr = as_ratfunc(F);
  RatFunc gr = as_ratfunc(G);
  RatFunc total(LaurentPoly{});
  for_each_split(F.deg, m, [&](const std::vector<std::vector<int>>& first) {
    Assignment fa;
    Assignment ga;
    std::vector<std::vector<int>> second(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& fi = first[static_cast<std::size_t>(i)];
      for (int p = 1; p <= m[static_cast<std::size_t>(i)]; ++p) {
        if (!std::count(fi.begin(), fi.end(), p)) second[static_cast<std::size_t>(i)].push_back(p);
      }
      // relabel through fresh names so overlapping index ranges do not collide
      for (std::size_t t = 0; t < fi.size(); ++t) fa[VarId::x(i, static_cast<int>(t) + 1)] = LaurentPoly::var(VarId::y2(i, fi[t]));
      const auto& si = second[static_cast<std::size_t>(i)];
      for (std::size_t t = 0; t < si.size(); ++t) ga[VarId::x(i, static_cast<int>(t) + 1)] = LaurentPoly::var(VarId::y2(i, si[t]));
    }
    RatFunc term = substitute(fr, fa) * substitute(gr, ga);
    for (int i = 0; i < n; ++i) {
      for (int a : first[static_cast<std::size_t>(i)]) {
        for (int i2 = 0; i2 < n; ++i2) {
          for (int b : second[static_cast<std::size_t>(i2)]) term = term * omega_at(n, i, i2, VarId::y2(i, a), VarId::y2(i2, b));
        }
      }
    }
    total = total + term;
  });
  Assignment back;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= m[static_cast<std::size_t>(i)]; ++j) back[VarId::y2(i, j)] = LaurentPoly::var(VarId::x(i, j));
  }
  return substitute(total, back);
}

inline bool same(const ShuffleElement& e, const RatFunc& r) { return cross_multiply_equal(as_ratfunc(e), r); }

}  // namespace sf_test
