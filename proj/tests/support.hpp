#pragma once

#include <random>
#include <vector>

#include "shuffleforge/ratfunc.hpp"

namespace sf_test {

using namespace shuffleforge;

inline LaurentPoly x(int i, int j, int e = 1) { return LaurentPoly::var(VarId::x(i, j), e); }
inline LaurentPoly q(int e = 1) { return LaurentPoly::var(VarId::q(), e); }
inline LaurentPoly d(int e = 1) { return LaurentPoly::var(VarId::d(), e); }

inline BinomialForm form(const LaurentPoly& p) { return *classify_factor(p).form; }

// Random sparse polynomial in x(0..1, 1..2), q, d with small exponents.
inline LaurentPoly random_poly(std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> ex(-1, 2);
  std::uniform_int_distribution<int> co(-5, 5);
  std::vector<VarId> vars{VarId::x(0, 1), VarId::x(0, 2), VarId::x(1, 1), VarId::q(), VarId::d()};
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (const auto& v : vars) m.set(v, ex(rng));
    ts.push_back({m, Rational(co(rng), 1 + (rng() % 3))});
  }
  return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace sf_test
