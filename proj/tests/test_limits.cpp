#include "doctest.h"
#include "oracle.hpp"
#include "shuffleforge/errors.hpp"
#include "shuffleforge/limits.hpp"
#include "shuffleforge/subalg.hpp"

using namespace sf_test;

namespace {

VarId mu(int i) { return VarId::parse("mu" + std::to_string(i)); }

std::vector<VarId> mus(int n) {
  std::vector<VarId> v;
  for (int i = 1; i <= n; ++i) v.push_back(mu(i));
  return v;
}

ShuffleElement e(int n, int i, int k) { return monomial_generator(n, i, k); }

ShuffleElement sym_pair() { return star(e(3, 0, 0), e(3, 1, 0)) + star(e(3, 1, 0), e(3, 0, 0)); }

LaurentPoly xi(int e = 1) { return LaurentPoly::var(VarId::xi(), e); }

LaurentPoly s(int i) { return LaurentPoly(s_monomial(3, i)); }

// All componentwise vectors 0 <= l <= k.
std::vector<DegreeVector> sub_vectors(const DegreeVector& k) {
  std::vector<DegreeVector> out;
  DegreeVector l(k.size(), 0);
  while (true) {
    out.push_back(l);
    std::size_t i = 0;
    while (i < l.size() && l[i] == k[i]) l[i++] = 0;
    if (i == l.size()) return out;
    ++l[i];
  }
}

bool is_multiple_of_delta(const DegreeVector& l) { return std::all_of(l.begin(), l.end(), [&](int v) { return v == l[0]; }); }

}  // namespace

TEST_CASE("interval degree vectors") {
  CHECK(interval_degree_vector(3, 0, 4) == DegreeVector{2, 2, 1});
  CHECK(interval_degree_vector(3, 2, 2) == DegreeVector{0, 0, 1});
  CHECK(interval_degree_vector(3, -1, 1) == DegreeVector{1, 1, 1});
  CHECK(interval_degree_vector(1, 0, 3) == DegreeVector{4});
  CHECK_THROWS_AS(interval_degree_vector(3, 2, 1), Error);
  for (int a = -4; a <= 4; ++a) {
    for (int b = a; b <= a + 7; ++b) {
      DegreeVector l = interval_degree_vector(3, a, b);
      CHECK(l[0] + l[1] + l[2] == b - a + 1);
      CHECK(l == interval_degree_vector(3, a + 3, b + 3));
    }
  }
}

TEST_CASE("s monomials") {
  Monomial all = s_interval(3, 0, 2);
  CHECK(all == Monomial());
  CHECK(s_interval(3, 1, 1) == s_monomial(3, 1));
  CHECK(s_interval(3, 1, 4) == s_interval(3, 1, 1));
  CHECK(s_monomial(1, 0) == Monomial());
}

TEST_CASE("scaling") {
  ShuffleElement p = sym_pair();
  CHECK(cross_multiply_equal(scaled(p, {0, 0, 0}), as_ratfunc(p)));
  RatFunc expect((LaurentPoly(1) + q()) * (d(-1) * xi() * x(0, 1) - x(1, 1)));
  expect.divide_by(xi() * x(0, 1) - x(1, 1));
  CHECK(cross_multiply_equal(scaled(p, {1, 0, 0}), expect));
  ShuffleElement f = gen_F_k_mu(3, 1, mu(1));
  CHECK(cross_multiply_equal(scaled(f, f.deg), as_ratfunc(f)));
  CHECK_THROWS_AS(scaled(p, {2, 0, 0}), Error);
}

TEST_CASE("limits of the symmetrized pair") {
  ShuffleElement p = sym_pair();
  LimitResult inf = limit_infinity(p, {1, 0, 0});
  REQUIRE(inf.exists);
  CHECK(cross_multiply_equal(inf.value, RatFunc((LaurentPoly(1) + q()) * d(-1))));
  LimitResult zero = limit_zero(p, {1, 0, 0});
  REQUIRE(zero.exists);
  CHECK(cross_multiply_equal(zero.value, RatFunc(LaurentPoly(1) + q())));
  LimitResult trivial = limit_infinity(p, {0, 0, 0});
  REQUIRE(trivial.exists);
  CHECK(cross_multiply_equal(trivial.value, as_ratfunc(p)));
}

TEST_CASE("existence follows the xi degree") {
  ShuffleElement x0 = e(3, 0, 1);
  CHECK_FALSE(limit_infinity(x0, {1, 0, 0}).exists);
  CHECK(limit_zero(x0, {1, 0, 0}).exists);
  CHECK(limit_zero(x0, {1, 0, 0}).value.is_zero());
  ShuffleElement inv = e(3, 0, -1);
  CHECK(limit_infinity(inv, {1, 0, 0}).exists);
  CHECK(limit_infinity(inv, {1, 0, 0}).value.is_zero());
  CHECK_FALSE(limit_zero(inv, {1, 0, 0}).exists);
  CHECK(limit_infinity(ShuffleElement::zero(3, {1, 0, 0}), {1, 0, 0}).exists);
}

TEST_CASE("scaling consistency at the full degree") {
  for (const auto& f : {gen_F_k_mu(3, 1, mu(1)), gen_F_k_mu(3, 2, mu(2)), gen_F_k(3, 2), gen_K_m(2)}) {
    for (auto* lim : {&limit_infinity, &limit_zero}) {
      LimitResult r = (*lim)(f, f.deg);
      REQUIRE(r.exists);
      CHECK(cross_multiply_equal(r.value, as_ratfunc(f)));
    }
  }
}

TEST_CASE("membership of generators") {
  CHECK(membership_A(ShuffleElement::one(3)).ok);
  for (int k = 1; k <= 2; ++k) {
    ShuffleElement f = gen_F_k_mu(3, k, mu(1));
    MembershipReport r = membership_A(f);
    CHECK(r.ok);
    CHECK(r.violations.empty());
  }
  MembershipReport bad = membership_A(e(3, 0, 0));
  CHECK_FALSE(bad.ok);
  REQUIRE(!bad.violations.empty());
  CHECK(bad.violations.front().a == 0);
  CHECK(bad.violations.front().b == 0);
  CHECK_FALSE(membership_A(e(3, 0, 1)).ok);
}

TEST_CASE("interval ratio for F_1^mu") {
  ShuffleElement f = gen_F_k_mu(3, 1, mu(1));
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < a + 3; ++b) {
      DegreeVector l = interval_degree_vector(3, a, b);
      LimitResult inf = limit_infinity(f, l);
      LimitResult zero = limit_zero(f, l);
      REQUIRE(inf.exists);
      REQUIRE(zero.exists);
      CHECK_FALSE(inf.value.is_zero());
      LaurentPoly prod(1);
      for (int c = a; c <= b; ++c) prod *= s(c);
      CHECK(cross_multiply_equal(inf.value, zero.value * RatFunc(prod)));
    }
  }
}

TEST_CASE("membership of the product basis") {
  for (int k = 1; k <= 2; ++k) {
    for (const auto& p : product_basis(3, k, mus(3))) CHECK(membership_A(p).ok);
  }
}

TEST_CASE("shift invariance of interval conditions") {
  std::vector<ShuffleElement> elements{gen_F_k_mu(3, 1, mu(1)), gen_F_k_mu(3, 2, mu(1)), e(3, 0, 0), sym_pair(),
                                       gen_F_k(3, 1)};
  for (const auto& f : elements) {
    for (int a = -3; a < 3; ++a) {
      for (int b = a; b < a + 7; ++b) {
        if (!leq(interval_degree_vector(3, a, b), f.deg)) continue;
        CHECK(interval_condition(f, a, b) == interval_condition(f, a + 3, b + 3));
      }
    }
  }
}

TEST_CASE("slope zero membership") {
  CHECK(slope_zero_membership(ShuffleElement::one(3)));
  CHECK(slope_zero_membership(gen_F_k_mu(3, 1, mu(1))));
  CHECK(slope_zero_membership(gen_F_k_mu(3, 2, mu(1))));
  CHECK(slope_zero_membership(gen_F_k(3, 2)));
  CHECK_FALSE(slope_zero_membership(e(3, 0, 1)));
  CHECK_FALSE(slope_zero_membership(e(3, 0, 0) + e(3, 0, 1)));
}

TEST_CASE("limits of F_2 off the diagonal vanish") {
  ShuffleElement f2 = gen_F_k(3, 2);
  int checked = 0;
  for (const auto& l : sub_vectors(f2.deg)) {
    if (is_multiple_of_delta(l)) continue;
    LimitResult r = limit_infinity(f2, l);
    REQUIRE(r.exists);
    CHECK(r.value.is_zero());
    ++checked;
  }
  CHECK(checked == 24);
}

TEST_CASE("limit of F_2 at delta factorizes") {
  ShuffleElement f1 = gen_F_k(3, 1);
  Assignment shift;
  for (int i = 0; i < 3; ++i) shift[VarId::x(i, 1)] = x(i, 2);
  RatFunc expect = as_ratfunc(f1) * substitute(as_ratfunc(f1), shift);
  LimitResult r = limit_infinity(gen_F_k(3, 2), {1, 1, 1});
  REQUIRE(r.exists);
  CHECK(cross_multiply_equal(r.value, expect));
}

TEST_CASE("small shuffle limits") {
  for (int k = 0; k <= 2; ++k) {
    LimitResult inf = limit_infinity(gen_K_m(2), {k});
    LimitResult zero = limit_zero(gen_K_m(2), {k});
    REQUIRE(inf.exists);
    REQUIRE(zero.exists);
    CHECK(cross_multiply_equal(inf.value, zero.value));
  }
}

TEST_CASE("limit at delta of F_1 star F_1 carries a d power") {
  ShuffleElement f1 = gen_F_k(3, 1);
  Assignment shift;
  for (int i = 0; i < 3; ++i) shift[VarId::x(i, 1)] = x(i, 2);
  RatFunc plain = as_ratfunc(f1) * substitute(as_ratfunc(f1), shift);
  LimitResult r = limit_infinity(star(f1, f1), {1, 1, 1});
  REQUIRE(r.exists);
  CHECK(cross_multiply_equal(r.value, plain * RatFunc(LaurentPoly(2) * d(-3))));
}

TEST_CASE("limits of L_2") {
  ShuffleElement l2 = gen_L_k(3, 2);
  ShuffleElement f1 = gen_F_k(3, 1);
  ShuffleElement twisted = gen_F_k(3, 2) - star(f1, f1).scaled(d(3) * LaurentPoly(Rational(1, 2)));
  for (const auto& l : sub_vectors(l2.deg)) {
    if (l == DegreeVector{0, 0, 0} || l == l2.deg) continue;
    LimitResult r = limit_infinity(l2, l);
    REQUIRE(r.exists);
    if (l == DegreeVector{1, 1, 1}) {
      CHECK_FALSE(r.value.is_zero());
    } else {
      CHECK(r.value.is_zero());
    }
    LimitResult t = limit_infinity(twisted, l);
    REQUIRE(t.exists);
    CHECK(t.value.is_zero());
  }
}
