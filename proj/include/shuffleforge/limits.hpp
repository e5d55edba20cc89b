#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shuffleforge/shuffle.hpp"

namespace shuffleforge {

struct Interval {
  int a = 0;
  int b = 0;
};

// l_i = #{c in [a,b] : c = i mod n}
DegreeVector interval_degree_vector(int n, int a, int b);

// s_0 s_1 ... with s_0 = (s_1 ... s_{n-1})^{-1}; s_0 = 1 when n = 1.
Monomial s_monomial(int n, int i);
// prod_{c=a}^{b} s_{c mod n}
Monomial s_interval(int n, int a, int b);

// F with x_{i,j} -> xi * x_{i,j} for j <= l_i.
RatFunc scaled(const ShuffleElement& f, const DegreeVector& l);

struct LimitResult {
  bool exists = false;
  RatFunc value;
};

LimitResult limit_infinity(const ShuffleElement& f, const DegreeVector& l);
LimitResult limit_zero(const ShuffleElement& f, const DegreeVector& l);

// Empty when the limits along [a,b] exist and differ by prod s_i.
std::optional<std::string> interval_condition(const ShuffleElement& f, int a, int b);

struct Violation {
  int a = 0;
  int b = 0;
  std::string reason;
};

struct MembershipReport {
  bool ok = true;
  std::vector<Violation> violations;
};

MembershipReport membership_A(const ShuffleElement& f);

bool slope_zero_membership(const ShuffleElement& f);

}  // namespace shuffleforge
