#include "shuffleforge/limits.hpp"

#include <algorithm>
#include <climits>

#include "shuffleforge/errors.hpp"

namespace shuffleforge {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<bool> scaled_mask(const ShuffleElement& f, const DegreeVector& l) {
  if (l.size() != f.deg.size() || !leq(l, f.deg)) throw Error("scaling vector " + str(l) + " exceeds " + str(f.deg));
  std::vector<bool> mask(Monomial::kSlots, false);
  for (int i = 0; i < f.n; ++i) {
    for (int j = 1; j <= l[static_cast<std::size_t>(i)]; ++j) {
      mask[static_cast<std::size_t>(VarRegistry::slot(VarId::x(i, j)))] = true;
    }
  }
  return mask;
}

int xi_degree(const Monomial& m, const std::vector<bool>& mask) {
  int e = 0;
  for (int s = 0; s < Monomial::kSlots; ++s) {
    if (mask[static_cast<std::size_t>(s)]) e += m.exp(s);
  }
  return e;
}

// at_infinity: leading xi part; otherwise trailing.
LimitResult limit(const ShuffleElement& f, const DegreeVector& l, bool at_infinity) {
  auto mask = scaled_mask(f, l);
  if (f.is_zero()) return {true, RatFunc(LaurentPoly())};

  int best = at_infinity ? INT_MIN : INT_MAX;
  for (const auto& t : f.numerator.terms()) {
    int e = xi_degree(t.mono, mask);
    best = at_infinity ? std::max(best, e) : std::min(best, e);
  }
  std::vector<Term> part;
  for (const auto& t : f.numerator.terms()) {
    if (xi_degree(t.mono, mask) == best) part.push_back(t);
  }

  int den_degree = 0;
  std::vector<LaurentPoly> den_parts;
  for (const auto& p : pole_factors(f.n, f.deg)) {
    bool sa = mask[static_cast<std::size_t>(VarRegistry::slot(p.a))];
    bool sb = mask[static_cast<std::size_t>(VarRegistry::slot(p.b))];
    LaurentPoly xa = LaurentPoly::var(p.a);
    LaurentPoly xb = LaurentPoly::var(p.b);
    if (sa == sb) {
      den_parts.push_back(xa - xb);
      den_degree += sa ? 1 : 0;
    } else if (at_infinity) {
      den_parts.push_back(sa ? xa : -xb);
      den_degree += 1;
    } else {
      den_parts.push_back(sa ? -xb : xa);
    }
  }

  if (at_infinity ? best > den_degree : best < den_degree) return {false, RatFunc()};
  if (best != den_degree) return {true, RatFunc(LaurentPoly())};
  RatFunc value(LaurentPoly::from_terms(std::move(part)));
  for (const auto& d : den_parts) value.divide_by(d);
  return {true, std::move(value)};
}

}  // namespace

DegreeVector interval_degree_vector(int n, int a, int b) {
  if (a > b) throw Error("interval [" + std::to_string(a) + "," + std::to_string(b) + "] is empty");
  DegreeVector l(static_cast<std::size_t>(n), 0);
  for (int c = a; c <= b; ++c) ++l[static_cast<std::size_t>(mod(c, n))];
  return l;
}

Monomial s_monomial(int n, int i) {
  Monomial m;
  i = mod(i, n);
  if (i != 0) {
    m.set(VarId::s(i), 1);
    return m;
  }
  for (int t = 1; t < n; ++t) m.set(VarId::s(t), -1);
  return m;
}

Monomial s_interval(int n, int a, int b) {
  Monomial m;
  for (int c = a; c <= b; ++c) m *= s_monomial(n, c);
  return m;
}

RatFunc scaled(const ShuffleElement& f, const DegreeVector& l) {
  scaled_mask(f, l);
  Assignment a;
  LaurentPoly xi = LaurentPoly::var(VarId::xi());
  for (int i = 0; i < f.n; ++i) {
    for (int j = 1; j <= l[static_cast<std::size_t>(i)]; ++j) a[VarId::x(i, j)] = xi * LaurentPoly::var(VarId::x(i, j));
  }
  return substitute(as_ratfunc(f), a);
}

LimitResult limit_infinity(const ShuffleElement& f, const DegreeVector& l) { return limit(f, l, true); }

LimitResult limit_zero(const ShuffleElement& f, const DegreeVector& l) { return limit(f, l, false); }

std::optional<std::string> interval_condition(const ShuffleElement& f, int a, int b) {
  DegreeVector l = interval_degree_vector(f.n, a, b);
  LimitResult inf = limit_infinity(f, l);
  if (!inf.exists) return "limit at infinity does not exist";
  LimitResult zero = limit_zero(f, l);
  if (!zero.exists) return "limit at zero does not exist";
  RatFunc rhs = zero.value * RatFunc(LaurentPoly(s_interval(f.n, a, b)));
  if (!cross_multiply_equal(inf.value, rhs)) return "limit at infinity differs from s-product times limit at zero";
  return std::nullopt;
}

MembershipReport membership_A(const ShuffleElement& f) {
  MembershipReport r;
  int td = 0;
  try {
    td = tot_deg(f);
  } catch (const Inhomogeneous&) {
    r.ok = false;
    r.violations.push_back({0, -1, "inhomogeneous"});
    return r;
  }
  if (td != 0) {
    r.ok = false;
    r.violations.push_back({0, -1, "total degree " + std::to_string(td)});
    return r;
  }
  const int kmax = *std::max_element(f.deg.begin(), f.deg.end());
  for (int a = 0; a < f.n; ++a) {
    for (int b = a; b < a + f.n * (kmax + 1); ++b) {
      if (!leq(interval_degree_vector(f.n, a, b), f.deg)) continue;
      if (auto why = interval_condition(f, a, b)) {
        r.ok = false;
        r.violations.push_back({a, b, *why});
      }
    }
  }
  return r;
}

bool slope_zero_membership(const ShuffleElement& f) {
  try {
    if (tot_deg(f) != 0) return false;
  } catch (const Inhomogeneous&) {
    return false;
  }
  DegreeVector l(f.deg.size(), 0);
  while (true) {
    if (!limit_infinity(f, l).exists) return false;
    std::size_t i = 0;
    while (i < l.size() && l[i] == f.deg[i]) l[i++] = 0;
    if (i == l.size()) return true;
    ++l[i];
  }
}

}  // namespace shuffleforge
