#include <map>

#include "doctest.h"
#include "shuffleforge/errors.hpp"
#include "shuffleforge/json_io.hpp"
#include "support.hpp"

using namespace sf_test;

TEST_CASE("add and mul") {
  LaurentPoly f = x(0, 1) * q() - x(1, 1, -2);
  CHECK(LaurentPoly() + f == f);
  CHECK(x(0, 1) * x(0, 1, -1) == LaurentPoly(1));
  LaurentPoly a = x(0, 1) - q(-2) * x(0, 2);
  LaurentPoly b = x(0, 2) - q(-2) * x(0, 1);
  LaurentPoly expect = x(0, 1) * x(0, 2) - q(-2) * x(0, 1).pow(2) - q(-2) * x(0, 2).pow(2) + q(-4) * x(0, 1) * x(0, 2);
  CHECK(a * b == expect);
  CHECK((a * b).size() == 4);
}

TEST_CASE("exact_divide") {
  LaurentPoly f = x(0, 1).pow(2) - x(1, 1).pow(2);
  CHECK(exact_divide(f, form(x(0, 1) - x(1, 1))) == x(0, 1) + x(1, 1));
  CHECK_THROWS_AS(exact_divide(x(0, 1) - q() * x(1, 1), form(x(0, 1) - x(1, 1))), NotDivisible);
  std::mt19937_64 rng(7);
  BinomialForm b = form(x(0, 1) - d(-1) * q() * x(1, 1));
  for (int i = 0; i < 50; ++i) {
    LaurentPoly g = random_poly(rng, 6);
    CHECK(exact_divide(g * b.as_poly(), b) == g);
  }
}

TEST_CASE("binomial orientation") {
  FactorShape s = classify_factor(x(1, 1) - q() * x(0, 1));
  REQUIRE(s.form);
  CHECK(s.form->lhs() == VarId::x(0, 1));
  CHECK(s.monomial * s.form->as_poly() == x(1, 1) - q() * x(0, 1));
  FactorShape c = classify_factor(q(3) * x(0, 1) * x(1, 1) - x(1, 1));
  REQUIRE(c.form);
  CHECK(!c.form->rhs());
  CHECK(c.monomial * c.form->as_poly() == q(3) * x(0, 1) * x(1, 1) - x(1, 1));
  CHECK(classify_factor(x(0, 1) + x(1, 1) + x(0, 2)).general);
}

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    auto c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("serial and parallel products agree") {
  std::mt19937_64 rng(3);
  auto a = random_poly(rng, 200);
  auto b = random_poly(rng, 200);
  CHECK(kernels::mul_serial(a, b) == kernels::mul_parallel(a, b));
}

TEST_CASE("cross_multiply_equal") {
  std::mt19937_64 rng(5);
  auto f = random_poly(rng);
  CHECK(cross_multiply_equal(RatFunc(f), RatFunc(f)));
  RatFunc lhs(x(0, 1).pow(2) - x(1, 1).pow(2));
  lhs.divide_by(x(0, 1) - x(1, 1));
  CHECK(cross_multiply_equal(lhs, RatFunc(x(0, 1) + x(1, 1))));
  for (int i = 0; i < 30; ++i) {
    auto g = random_poly(rng);
    auto h = random_poly(rng);
    BinomialForm b1 = form(x(0, 1) - q() * x(1, 1));
    BinomialForm b2 = form(x(0, 2) - d() * x(0, 1));
    RatFunc F(g * b2.as_poly(), {b1, b2});
    RatFunc G(g, {b1});
    RatFunc H(g * h, {b1});
    H.divide_by(h);
    CHECK(cross_multiply_equal(F, F));
    CHECK(cross_multiply_equal(F, G));
    CHECK(cross_multiply_equal(G, F));
    CHECK(cross_multiply_equal(G, H));
    CHECK(cross_multiply_equal(F, H));
    RatFunc other(g + LaurentPoly(1), {b1});
    bool exact = cross_multiply_equal(F, other);
    CHECK_FALSE(exact);
    CHECK(cross_multiply_equal(F, other, {true, 99}) == exact);
  }
}

TEST_CASE("evaluation oracle disagrees on unrelated functions") {
  LaurentPoly z = LaurentPoly::var(VarId::z());
  RatFunc w(d(-1) * z - q());
  w.divide_by(z - LaurentPoly(1));
  RatFunc other(z * q());
  other.divide_by(z - LaurentPoly(2));
  CHECK_FALSE(cross_multiply_equal(w, other));
  std::uint64_t st = 42;
  int differ = 0;
  for (int i = 0; i < 3; ++i) {
    Point pt = random_point(variables(w * other), st);
    differ += !(evaluate(w, pt) == evaluate(other, pt));
  }
  CHECK(differ == 3);
}

TEST_CASE("substitute") {
  RatFunc F(x(0, 1));
  F.divide_by(x(0, 1) - x(1, 1));
  CHECK(cross_multiply_equal(substitute(F, {}), F));
  LaurentPoly xi = LaurentPoly::var(VarId::xi());
  RatFunc S = substitute(F, {{VarId::x(0, 1), xi * x(0, 1)}});
  RatFunc expect(xi * x(0, 1));
  expect.divide_by(xi * x(0, 1) - x(1, 1));
  CHECK(cross_multiply_equal(S, expect));
  LaurentPoly y1 = LaurentPoly::var(VarId::y(1));
  LaurentPoly phi = substitute(x(0, 1) - x(1, 1), {{VarId::x(0, 1), y1}, {VarId::x(1, 1), (q() * d()).pow(-1) * y1}});
  CHECK(phi == (LaurentPoly(1) - q(-1) * d(-1)) * y1);
  CHECK_THROWS_AS(substitute(F, {{VarId::x(0, 1), x(1, 1)}}), DenominatorVanishes);

  std::mt19937_64 rng(9);
  Assignment sigma{{VarId::x(0, 1), q() * x(1, 1)}, {VarId::d(), q(2)}, {VarId::x(0, 2), x(0, 1) + x(1, 1)}};
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    // keep x(0,2) exponents non-negative for the polynomial-valued substitution
    auto clear = [](const LaurentPoly& p) { return p * x(0, 2, 1).pow(1) * x(0, 2).pow(1); };
    auto ca = clear(a);
    auto cb = clear(b);
    CHECK(substitute(ca * cb, sigma) == substitute(ca, sigma) * substitute(cb, sigma));
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(LaurentPoly(1), {}) == Rational(1));
  CHECK(evaluate(x(0, 1) - x(1, 1), {{VarId::x(0, 1), Rational(3)}, {VarId::x(1, 1), Rational(1)}}) == Rational(2));
  LaurentPoly z = LaurentPoly::var(VarId::z());
  RatFunc w(z - q(-2));
  w.divide_by(z - LaurentPoly(1));
  CHECK(evaluate(w, {{VarId::z(), Rational(2)}, {VarId::q(), Rational(3)}}) == Rational(17, 9));
  CHECK_THROWS_AS(evaluate(w, {{VarId::z(), Rational(1)}, {VarId::q(), Rational(3)}}), DivisionByZero);

  std::mt19937_64 rng(13);
  std::uint64_t st = 1;
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    Point pt = random_point({VarId::x(0, 1), VarId::x(0, 2), VarId::x(1, 1), VarId::q(), VarId::d()}, st);
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
  }
}

TEST_CASE("square root parameter folds") {
  LaurentPoly h = LaurentPoly::var(VarId::h());
  CHECK(h * h == d());
  CHECK(h.pow(-3) * d() == h.pow(-1));
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    auto p = random_poly(rng);
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(to_json(p).dump() == to_json(poly_from_json(to_json(p))).dump());
  }
  CHECK(to_json(q(-2) * x(0, 1)).dump() == R"js([{"coeff":"1","exps":{"x(0,1)":1,"q":-2}}])js");
}
