#include <functional>

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

// Number of n-tuples of partitions of total size k, by direct enumeration.
long long count_multipartitions(int n, int k) {
  std::function<long long(int, int)> partitions = [&](int m, int largest) -> long long {
    if (m == 0) return 1;
    long long c = 0;
    for (int p = std::min(m, largest); p >= 1; --p) c += partitions(m - p, p);
    return c;
  };
  std::function<long long(int, int)> tuples = [&](int colours, int left) -> long long {
    if (colours == 0) return left == 0 ? 1 : 0;
    long long c = 0;
    for (int m = 0; m <= left; ++m) c += partitions(m, m) * tuples(colours - 1, left - m);
    return c;
  };
  return tuples(n, k);
}

LaurentPoly with_mu(const LaurentPoly& p, const VarId& m, int value) { return substitute(p, {{m, LaurentPoly(value)}}); }

}  // namespace

TEST_CASE("dim_R matches direct enumeration") {
  CHECK(dim_R(3, 1) == 3);
  CHECK(dim_R(3, 2) == 9);
  CHECK(dim_R(3, 3) == 22);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 6; ++k) CHECK(dim_R(n, k) == mpz_class(std::to_string(count_multipartitions(n, k))));
  }
}

TEST_CASE("product shapes") {
  auto one = product_shapes(3, 1);
  REQUIRE(one.size() == 3);
  CHECK(one[0].str(mus(3)) == "F(1;mu1)");
  auto two = product_shapes(3, 2);
  REQUIRE(two.size() == 9);
  CHECK(two[0].str(mus(3)) == "F(2;mu1)");
  CHECK(two[2].str(mus(3)) == "F(2;mu3)");
  CHECK(two[3].str(mus(3)) == "F(1;mu1)*F(1;mu1)");
  CHECK(two[4].str(mus(3)) == "F(1;mu1)*F(1;mu2)");
  CHECK(two[8].str(mus(3)) == "F(1;mu3)*F(1;mu3)");
  for (int k = 1; k <= 4; ++k) CHECK(static_cast<long long>(product_shapes(3, k).size()) == count_multipartitions(3, k));
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(exact_rank({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == 2);
  CHECK(exact_rank({{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}) == 0);
  // (3x2)(2x4) has rank 2
  std::vector<std::vector<Rational>> a{{Rational(1), Rational(2)}, {Rational(3), Rational(-1)}, {Rational(1, 2), Rational(5)}};
  std::vector<std::vector<Rational>> b{{Rational(1), Rational(0), Rational(2), Rational(7)},
                                       {Rational(4), Rational(1), Rational(-3), Rational(1, 3)}};
  std::vector<std::vector<Rational>> ab(3, std::vector<Rational>(4));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int t = 0; t < 2; ++t) ab[i][j] += a[i][t] * b[t][j];
    }
  }
  CHECK(exact_rank(ab) == 2);
}

TEST_CASE("F_k^mu numerator at k=1") {
  ShuffleElement f = gen_F_k_mu(3, 1, mu(1));
  LaurentPoly s1 = LaurentPoly::var(VarId::s(1));
  LaurentPoly s2 = LaurentPoly::var(VarId::s(2));
  LaurentPoly m = LaurentPoly::var(mu(1));
  LaurentPoly s0 = s1.pow(-1) * s2.pow(-1);
  LaurentPoly expect = (s0 * x(0, 1) - m * x(1, 1)) * (s0 * s1 * x(1, 1) - m * x(2, 1)) * (x(2, 1) - m * x(0, 1));
  CHECK(f.numerator == expect);
  CHECK(f.deg == DegreeVector{1, 1, 1});
  CHECK(tot_deg(gen_F_k_mu(3, 2, mu(1))) == 0);
  CHECK(wheel_check(gen_F_k_mu(3, 2, mu(1))).ok);
  CHECK(is_color_symmetric(gen_F_k_mu(3, 2, mu(1))));
}

TEST_CASE("F_k is proportional to F_k^0") {
  for (int k = 1; k <= 2; ++k) {
    ShuffleElement f0 = gen_F_k_mu(3, k, mu(1));
    f0.numerator = with_mu(f0.numerator, mu(1), 0);
    CHECK(gen_F_k(3, k) == f0.scaled(F_k_ratio(3, k)));
    CHECK(cross_multiply_equal(as_ratfunc(gen_F_k(3, k)), as_ratfunc(f0.scaled(F_k_ratio(3, k)))));
  }
  CHECK(gen_F_k(3, 0) == ShuffleElement::one(3));
  CHECK_THROWS_AS(gen_F_k(2, 1), Error);
}

TEST_CASE("F_k against its displayed fraction") {
  // prod (q^{-1} x_j - q x_j') prod x / prod (x_{i+1,j'} - x_{i,j})
  for (int k = 1; k <= 2; ++k) {
    LaurentPoly num(1);
    RatFunc r(LaurentPoly(1));
    for (int i = 0; i < 3; ++i) {
      for (int j = 1; j <= k; ++j) {
        num *= x(i, j);
        for (int j2 = 1; j2 <= k; ++j2) {
          if (j != j2) num *= q(-1) * x(i, j) - q() * x(i, j2);
          r.divide_by(x((i + 1) % 3, j2) - x(i, j));
        }
      }
    }
    RatFunc expect = RatFunc(num) * r;
    CHECK(cross_multiply_equal(as_ratfunc(gen_F_k(3, k)), expect));
  }
}

TEST_CASE("L_k") {
  CHECK(gen_L_k(3, 1) == gen_F_k(3, 1));
  ShuffleElement f1 = gen_F_k(3, 1);
  ShuffleElement expect = gen_F_k(3, 2) - star(f1, f1).scaled(LaurentPoly(Rational(1, 2)));
  CHECK(gen_L_k(3, 2) == expect);
}

TEST_CASE("K_m") {
  CHECK(gen_K_m(1) == monomial_generator(1, 0, 0));
  // (x1 - q^2 x2)(x2 - q^2 x1) / (x1 - x2)^2
  RatFunc k2((x(0, 1) - q(2) * x(0, 2)) * (x(0, 2) - q(2) * x(0, 1)));
  k2.divide_by(x(0, 1) - x(0, 2));
  k2.divide_by(x(0, 1) - x(0, 2));
  CHECK(cross_multiply_equal(as_ratfunc(gen_K_m(2)), k2));
  RatFunc k3(LaurentPoly(1));
  for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    RatFunc pair((x(0, a) - q(2) * x(0, b)) * (x(0, b) - q(2) * x(0, a)));
    pair.divide_by(x(0, a) - x(0, b));
    pair.divide_by(x(0, a) - x(0, b));
    k3 = k3 * pair;
  }
  CHECK(cross_multiply_equal(as_ratfunc(gen_K_m(3)), k3));
  CHECK(commutes(gen_K_m(1), gen_K_m(2)));
  CHECK(commutes(gen_K_m(2), gen_K_m(2)));
}

TEST_CASE("Gamma0") {
  for (int N = 1; N <= 2; ++N) {
    ShuffleElement g = gen_Gamma0(1, 0, N);
    CHECK(g == gen_K_m(N).scaled(q(-N * (N - 1))));
  }
  for (int p = 0; p < 3; ++p) {
    ShuffleElement g = gen_Gamma0(3, p, 1);
    CHECK(g.deg == DegreeVector{1, 1, 1});
    CHECK(tot_deg(g) == 0);
    CHECK(is_color_symmetric(g));
  }
  // p = 0: the prefactor is trivial; N = 1 numerator is a single term
  ShuffleElement g0 = gen_Gamma0(3, 0, 1);
  LaurentPoly scalar = (LaurentPoly(1) - q(-2)).pow(3) * q(3) * LaurentPoly::var(VarId::h(), -3) * LaurentPoly(-1);
  CHECK(g0.numerator == scalar * x(0, 1) * x(1, 1) * x(2, 1));
  ShuffleElement g1 = gen_Gamma0(3, 1, 1);
  CHECK(g1.numerator == scalar * x(0, 1) * x(0, 1) * x(2, 1));
  CHECK(commutes(gen_Gamma0(3, 0, 1), gen_Gamma0(3, 1, 1)));
  CHECK(commutes(gen_Gamma0(3, 1, 1), gen_Gamma0(3, 2, 1)));
  CHECK_THROWS_AS(gen_Gamma0(3, 3, 1), Error);
  CHECK_THROWS_AS(gen_Gamma0(2, 0, 1), Error);
}

TEST_CASE("generator specs") {
  for (const char* text : {"e(0,2)", "F(2;mu1)", "Fk(1)", "Lk(2)", "K(3)", "Gamma0(1,1)", "e(2,-1)"}) {
    CHECK(GeneratorSpec::parse(text).str() == text);
  }
  CHECK(GeneratorSpec::parse("F(1;mu1)").build(3) == gen_F_k_mu(3, 1, mu(1)));
  CHECK(GeneratorSpec::parse("K(2)").build(1) == gen_K_m(2));
  CHECK(GeneratorSpec::parse("e(1,0)").build(3) == monomial_generator(3, 1, 0));
  for (const char* bad : {"G(1)", "F(1)", "F(1;x(0,1))", "e(1)", "K(a)", "e(0,1", "Fk(1,2)"}) {
    CHECK_THROWS_AS(GeneratorSpec::parse(bad), ParseError);
  }
  CHECK_THROWS_AS(GeneratorSpec::parse("K(2)").build(3), Error);
}

TEST_CASE("rank of span") {
  ShuffleElement a = gen_F_k_mu(3, 1, mu(1));
  ShuffleElement b = gen_F_k_mu(3, 1, mu(2));
  CHECK(rank_of_span({{a}, 7, 3}) == 1);
  CHECK(rank_of_span({{a, b, a + b}, 7, 3}) == 2);
  CHECK(rank_of_span({product_basis(3, 1, mus(3)), 7, 3}) == 3);
  CHECK(rank_of_span({{star(a, b), star(b, a)}, 7, 3}) == 1);
}

TEST_CASE("kernel reflection") {
  for (int n : {3, 4}) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) CHECK(kernel_reflection_holds(n, i, j));
    }
  }
}

TEST_CASE("Serre relations") {
  CHECK(serre_cubic(3, 0, 1, 0, 0, 0).is_zero());
  CHECK(serre_cubic(3, 0, 2, 0, 0, 0).is_zero());
  CHECK(serre_cubic(3, 1, 0, 1, 0, 0).is_zero());
  CHECK(serre_cubic(3, 0, 1, 1, -1, 2).is_zero());
  CHECK(serre_quartic(0, 0, 0, 0, 0).is_zero());
  CHECK(serre_quartic(1, 1, 0, 0, -1).is_zero());
  CHECK(serre_cubic(3, 0, 1, 0, 0, 0).deg == DegreeVector{2, 1, 0});
}

TEST_CASE("commutativity of generators") {
  CHECK(commutes(gen_F_k_mu(3, 1, mu(1)), gen_F_k_mu(3, 1, mu(2))));
  CHECK(commutes(gen_F_k_mu(2, 1, mu(1)), gen_F_k_mu(2, 1, mu(2))));
  CHECK(commutes(gen_F_k_mu(2, 1, mu(1)), gen_F_k_mu(2, 2, mu(2))));
  CHECK(commutator(gen_F_k_mu(3, 1, mu(1)), gen_F_k_mu(3, 1, mu(2))).is_zero());
  CHECK_FALSE(commutes(monomial_generator(3, 0, 0), monomial_generator(3, 1, 0)));
}
