#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shuffleforge/laurent_poly.hpp"

namespace shuffleforge {

// lhs - coeff * rhs, where coeff = scalar * (monomial in parameters).  A
// missing rhs stands for the constant 1.  Built through make(), which puts
// the pair in canonical orientation (lhs < rhs) and hands back the scalar
// that the reorientation pulled out.
class BinomialForm {
 public:
  struct Normalized;

  static Normalized make(VarId lhs, std::optional<VarId> rhs, Rational c = Rational(1), Monomial cm = {});

  const VarId& lhs() const { return lhs_; }
  const std::optional<VarId>& rhs() const { return rhs_; }
  const Rational& coeff() const { return c_; }
  const Monomial& coeff_mono() const { return cm_; }

  LaurentPoly as_poly() const;
  std::string str() const;

  bool operator==(const BinomialForm& o) const {
    return lhs_ == o.lhs_ && rhs_ == o.rhs_ && c_ == o.c_ && cm_ == o.cm_;
  }
  bool operator<(const BinomialForm& o) const;

 private:
  BinomialForm() = default;
  VarId lhs_;
  std::optional<VarId> rhs_;
  Rational c_;
  Monomial cm_;
};

// original = scalar * scalar_mono * form
struct BinomialForm::Normalized {
  Rational scalar;
  Monomial scalar_mono;
  BinomialForm form;
};

// f / b exactly, by synthetic division along b.lhs().  Throws NotDivisible.
LaurentPoly exact_divide(const LaurentPoly& f, const BinomialForm& b);

// Splits a Laurent polynomial factor into (monomial) * (binomial form) when
// it has that shape.
struct FactorShape {
  LaurentPoly monomial;               // single term
  std::optional<BinomialForm> form;   // absent: the factor was a monomial
  std::optional<LaurentPoly> general; // neither monomial nor binomial
};
FactorShape classify_factor(const LaurentPoly& p);

// num / (prod den * prod general_den).  Never reduced to lowest terms;
// equality is decided by cross multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, std::vector<BinomialForm> den, std::vector<LaurentPoly> general_den = {});

  const LaurentPoly& num() const { return num_; }
  const std::vector<BinomialForm>& den() const { return den_; }
  const std::vector<LaurentPoly>& general_den() const { return general_den_; }
  bool has_general_den() const { return !general_den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }

  // Divides by one more factor; monomial factors are folded into num.
  RatFunc& divide_by(const LaurentPoly& factor);
  RatFunc& divide_by(const BinomialForm& b) {
    den_.push_back(b);
    return *this;
  }

  LaurentPoly expanded_den() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, general_den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  std::string str() const;

 private:
  LaurentPoly num_;
  std::vector<BinomialForm> den_;
  std::vector<LaurentPoly> general_den_;
};

struct EqualityOptions {
  bool fast_path = false;
  std::uint64_t seed = 0x5eed;
};

// F == G as rational functions, decided by F.num * den(G) == G.num * den(F)
// after cancelling shared denominator factors.  The fast path can only
// short-circuit a false verdict.
bool cross_multiply_equal(const RatFunc& f, const RatFunc& g, const EqualityOptions& opts = {});

// Turns the fast path on for every comparison in the process.
void set_fast_path_default(bool on);
bool fast_path_default();

using Assignment = std::map<VarId, LaurentPoly>;

LaurentPoly substitute(const LaurentPoly& p, const Assignment& a);
// Throws DenominatorVanishes if a denominator factor becomes zero.
RatFunc substitute(const RatFunc& f, const Assignment& a);

using Point = std::map<VarId, Rational>;

Rational evaluate(const LaurentPoly& p, const Point& point);
// Throws DivisionByZero naming the vanishing factor.
Rational evaluate(const RatFunc& f, const Point& point);

// Variables occurring anywhere in f.
std::vector<VarId> variables(const RatFunc& f);
std::vector<VarId> variables(const LaurentPoly& p);

// Random point with numerators and denominators bounded by `bound`.
Point random_point(const std::vector<VarId>& vars, std::uint64_t& state, long long bound = 1000000);

}  // namespace shuffleforge
