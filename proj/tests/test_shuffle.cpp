#include "doctest.h"
#include "oracle.hpp"
#include "shuffle_detail.hpp"
#include "shuffleforge/errors.hpp"

using namespace sf_test;

namespace {

ShuffleElement e(int n, int i, int k) { return monomial_generator(n, i, k); }

LaurentPoly z() { return LaurentPoly::var(VarId::z()); }

}  // namespace

TEST_CASE("omega entries") {
  AlgebraConfig c3{3};
  RatFunc w01(d(-1) * z() - q());
  w01.divide_by(z() - LaurentPoly(1));
  CHECK(cross_multiply_equal(omega(c3, 0, 1), w01));
  RatFunc w02(z() - q() * d(-1));
  w02.divide_by(z() - LaurentPoly(1));
  CHECK(cross_multiply_equal(omega(c3, 0, 2), w02));
  CHECK(evaluate(omega(c3, 0, 0), {{VarId::z(), Rational(2)}, {VarId::q(), Rational(3)}}) == Rational(17, 9));
  CHECK(cross_multiply_equal(omega(AlgebraConfig{4}, 0, 2), RatFunc(LaurentPoly(1))));
  RatFunc lam = omega(AlgebraConfig{1}, 0, 0);
  CHECK(lam.den().size() == 3);
  RatFunc expect((q(2) * z() - LaurentPoly(1)) * (q(-1) * d() * z() - LaurentPoly(1)) * (q(-1) * d(-1) * z() - LaurentPoly(1)));
  for (int t = 0; t < 3; ++t) expect.divide_by(z() - LaurentPoly(1));
  CHECK(cross_multiply_equal(lam, expect));
}

TEST_CASE("unit") {
  for (int n : {1, 2, 3}) {
    ShuffleElement one = ShuffleElement::one(n);
    ShuffleElement f = star(e(n, 0, 1), e(n, n - 1, -1));
    CHECK(star(one, f) == f);
    CHECK(star(f, one) == f);
  }
}

TEST_CASE("two generators, n=3") {
  ShuffleElement p = star(e(3, 0, 0), e(3, 1, 0));
  CHECK(p.numerator == d(-1) * x(0, 1) - q() * x(1, 1));
  CHECK(same(p, oracle_star(e(3, 0, 0), e(3, 1, 0))));
  ShuffleElement sym = p + star(e(3, 1, 0), e(3, 0, 0));
  CHECK(sym.numerator == (LaurentPoly(1) + q()) * (d(-1) * x(0, 1) - x(1, 1)));
}

TEST_CASE("n=1 two-variable product") {
  ShuffleElement p = star(e(1, 0, 0), e(1, 0, 0));
  RatFunc l12 = omega_at(1, 0, 0, VarId::x(0, 1), VarId::x(0, 2));
  RatFunc l21 = omega_at(1, 0, 0, VarId::x(0, 2), VarId::x(0, 1));
  CHECK(same(p, l12 + l21));
}

TEST_CASE("star agrees with the direct shuffle sum") {
  for (int n : {1, 2, 3}) {
    std::vector<ShuffleElement> gens;
    for (int i = 0; i < n; ++i) {
      for (int k : {-1, 0, 2}) gens.push_back(e(n, i, k));
    }
    int checked = 0;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = 0; b < gens.size(); b += 2) {
        ShuffleElement ab = star(gens[a], gens[b]);
        CHECK(same(ab, oracle_star(gens[a], gens[b])));
        ShuffleElement abc = star(ab, gens[(a + b) % gens.size()]);
        CHECK(same(abc, oracle_star(ab, gens[(a + b) % gens.size()])));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("serial and parallel symmetrization agree") {
  ShuffleElement f = star(e(3, 0, 1), e(3, 1, 0));
  ShuffleElement g = star(e(3, 2, 0), e(3, 0, -1));
  CHECK(kernels::antisymmetrized_serial(f, g) == kernels::antisymmetrized_parallel(f, g));
}

TEST_CASE("associativity and grading") {
  std::mt19937_64 rng(17);
  int done = 0;
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < 8; ++t) {
      auto pick = [&] { return e(n, static_cast<int>(rng() % static_cast<unsigned>(n)), static_cast<int>(rng() % 4) - 1); };
      ShuffleElement a = pick();
      ShuffleElement b = pick();
      ShuffleElement c = t % 2 ? star(pick(), pick()) : pick();
      ShuffleElement l = star(star(a, b), c);
      ShuffleElement r = star(a, star(b, c));
      CHECK(l == r);
      CHECK(l.deg == add(add(a.deg, b.deg), c.deg));
      CHECK(tot_deg(l) == tot_deg(a) + tot_deg(b) + tot_deg(c));
      CHECK(is_color_symmetric(l));
      ++done;
    }
  }
  CHECK(done >= 20);
}

TEST_CASE("wheel conditions") {
  CHECK(wheel_check(e(3, 1, 4)).ok);
  ShuffleElement w = star(e(3, 0, 0), star(e(3, 0, 1), e(3, 1, 0)));
  CHECK(wheel_check(w).ok);
  ShuffleElement bad{3, {2, 1, 0}, pole_denominator(3, {2, 1, 0})};
  CHECK_FALSE(wheel_check(bad).ok);
  ShuffleElement k3 = star(e(1, 0, 0), star(e(1, 0, 1), e(1, 0, 0)));
  CHECK(wheel_check(k3).ok);
  CHECK(wheel_check(star(e(2, 0, 0), star(e(2, 0, 1), e(2, 1, 0)))).convention_dependent);
}

TEST_CASE("normalize to pole form") {
  RatFunc raw(x(0, 1) + x(1, 1));
  raw.divide_by(x(0, 1) - x(1, 1));
  raw = raw * RatFunc(x(0, 1) - x(1, 1));
  ShuffleElement f = normalize_to_pole_form(raw, 3, {1, 1, 0});
  CHECK(f.numerator == (x(0, 1) + x(1, 1)) * (x(0, 1) - x(1, 1)));
  RatFunc bad(LaurentPoly(1));
  bad.divide_by(x(0, 1) - x(2, 1));
  CHECK_THROWS_AS(normalize_to_pole_form(bad, 4, {1, 0, 1, 0}), PoleViolation);
  // colours 0 and 2 are adjacent when n = 3
  CHECK(normalize_to_pole_form(bad, 3, {1, 0, 1}).numerator == LaurentPoly(-1));
  CHECK_THROWS_AS(normalize_to_pole_form(RatFunc(x(0, 1)), 3, {2, 0, 0}), NotSymmetric);
  ShuffleElement p = star(e(3, 0, 1), e(3, 1, 0));
  CHECK(normalize_to_pole_form(oracle_star(e(3, 0, 1), e(3, 1, 0)), 3, p.deg) == p);
}

TEST_CASE("monomial generators and degrees") {
  CHECK(e(3, 0, 0).numerator == LaurentPoly(1));
  CHECK(e(3, 1, -2).numerator == x(1, 1, -2));
  CHECK(e(1, 0, 3).numerator == x(0, 1, 3));
  CHECK(tot_deg(ShuffleElement::one(3)) == 0);
  CHECK(tot_deg(e(3, 0, 5)) == 5);
  CHECK_THROWS_AS(tot_deg(ShuffleElement{3, {1, 0, 0}, x(0, 1) + LaurentPoly(1)}), Inhomogeneous);
}

TEST_CASE("element json round trip") {
  ShuffleElement p = star(e(3, 0, 1), e(3, 1, 0));
  CHECK(element_from_json(to_json(p)) == p);
}

TEST_CASE("compact and generic symmetrization agree") {
  std::mt19937_64 rng(5);
  int compared = 0;
  for (int n : {1, 2, 3, 4}) {
    for (int t = 0; t < 6; ++t) {
      auto pick = [&] { return e(n, static_cast<int>(rng() % static_cast<unsigned>(n)), static_cast<int>(rng() % 5) - 2); };
      ShuffleElement f = t % 2 ? star(pick(), pick()) : pick();
      ShuffleElement g = t % 3 ? pick() : star(pick(), pick());
      f = f.scaled(LaurentPoly(3) - q(-1));
      auto fast = detail::antisymmetrized_compact(f, g);
      if (!fast) continue;
      CHECK(*fast == kernels::antisymmetrized_serial(f, g));
      auto verdict = detail::commutes_compact(f, g);
      REQUIRE(verdict.has_value());
      CHECK(*verdict == (kernels::antisymmetrized_serial(f, g) == kernels::antisymmetrized_serial(g, f)));
      ++compared;
    }
  }
  CHECK(compared >= 16);
}

TEST_CASE("compact commutation on symmetric inputs") {
  ShuffleElement a = star(e(3, 0, 0), e(3, 1, 0)) + star(e(3, 1, 0), e(3, 0, 0));
  ShuffleElement b = star(e(3, 1, 1), e(3, 2, 0)) + star(e(3, 2, 0), e(3, 1, 1));
  ShuffleElement c = star(e(3, 0, 0), e(3, 0, 1)) + star(e(3, 0, 1), e(3, 0, 0));
  for (const auto& [f, g] : {std::pair{a, b}, std::pair{a, c}, std::pair{c, c}, std::pair{a, a}}) {
    auto verdict = detail::commutes_compact(f, g);
    REQUIRE(verdict.has_value());
    CHECK(*verdict == commutator(f, g).is_zero());
  }
}

TEST_CASE("commutes splits exclusive parameters") {
  LaurentPoly m = LaurentPoly::var(VarId::mu(1));
  LaurentPoly v = LaurentPoly::var(VarId::nu(1));
  ShuffleElement f = e(3, 0, 0).scaled(m) + e(3, 0, 1).scaled(m.pow(2));
  ShuffleElement g = e(3, 1, 0).scaled(v + LaurentPoly(1));
  CHECK(commutes(f, g) == commutator(f, g).is_zero());
  CHECK_FALSE(commutes(f, g));
  ShuffleElement h = e(3, 2, 1).scaled(v);
  CHECK(commutes(f, h) == commutator(f, h).is_zero());
  CHECK(commutes(e(3, 0, 0).scaled(m), e(3, 0, 0).scaled(v)));
  CHECK(commutes(e(3, 0, 0).scaled(m), e(3, 0, 1).scaled(v)) == commutator(e(3, 0, 0), e(3, 0, 1)).is_zero());
}
