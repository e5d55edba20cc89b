#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "shuffleforge/monomial.hpp"
#include "shuffleforge/rational.hpp"

namespace shuffleforge {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate Laurent polynomial over Q.  Terms are kept sorted by
// the internal monomial order with no zero coefficients and no repeated
// monomials, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Rational c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, Rational c = Rational(1));

  static LaurentPoly var(const VarId& v, int e = 1) { return LaurentPoly(Monomial::of(v, e)); }
  // Sorts, merges duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term value, or zero.
  Rational constant_term() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly times(const Monomial& m, const Rational& c = Rational(1)) const;
  // this * (a - c*b) for monomials a, b.
  LaurentPoly times_binomial(const Monomial& a, const Rational& c, const Monomial& b) const;
  LaurentPoly pow(int k) const;

  bool operator==(const LaurentPoly& o) const;

  // Exponent range of one variable over all terms; {0,0} for zero.
  std::pair<int, int> degree_range(int slot) const;
  // Range of sum_{s in slots} exp(s) over terms; {0,0} for zero.
  std::pair<int, int> degree_range(std::span<const int> slots) const;
  bool is_homogeneous(std::span<const int> slots) const;
  bool involves(int slot) const;

  // Renames variables: slot s -> perm[s] for s < perm.size(); slots mapped
  // to the same target multiply together.
  LaurentPoly relabel(std::span<const std::int8_t> perm) const;

  // Keeps terms whose weighted degree sum_{s in slots} exp(s) equals deg.
  LaurentPoly homogeneous_part(std::span<const int> slots, int deg) const;

  std::string str() const;

 private:
  friend class TermAccumulator;
  std::vector<Term> terms_;
};

// Open-addressed accumulator for sums of many terms.
class TermAccumulator {
 public:
  explicit TermAccumulator(std::size_t expected = 16);

  void add(const Monomial& m, const Rational& c);
  void add(const LaurentPoly& p, const Rational& scale = Rational(1));
  void merge(TermAccumulator&& other);
  std::size_t size() const { return terms_.size(); }
  LaurentPoly finish() &&;

 private:
  void grow();
  std::vector<Term> terms_;
  std::vector<std::int32_t> table_;
  std::size_t mask_ = 0;
};

// Upper bound on the number of terms in any intermediate expansion; zero
// disables the check.  Exceeding it raises TermLimitExceeded.
void set_term_limit(std::size_t limit);
std::size_t term_limit();

namespace kernels {

// Reference product: one accumulator, operand order fixed.
LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b);
// OpenMP product: the larger operand is split across threads, partial sums
// are merged.  Identical result to mul_serial.
LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace kernels

}  // namespace shuffleforge
