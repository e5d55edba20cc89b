#pragma once

#include <compare>
#include <string>
#include <vector>

#include "shuffleforge/limits.hpp"
#include "shuffleforge/shuffle.hpp"

namespace shuffleforge {

// Intervals ordered by length, longest first; ties by left end.
struct PartitionL {
  std::vector<Interval> intervals;

  static PartitionL parse(const std::string& text);  // "0-1;2-2"
  std::string str() const;

  int size() const { return static_cast<int>(intervals.size()); }
  DegreeVector degree(int n) const;
  // Left ends moved into [0,n) and intervals re-sorted.
  PartitionL canonical(int n) const;
  bool equivalent(const PartitionL& o, int n) const;
  // Lengths compared lexicographically, longest first.
  bool greater_than(const PartitionL& o) const;
  bool operator==(const PartitionL& o) const;
};

// One canonical representative per class.
std::vector<PartitionL> enumerate_partitions(int n, const DegreeVector& k);

// Numerator of F with the variables of the t-th interval sent to
// (qd)^{-a_t} y_t, ..., (qd)^{-b_t} y_t.
LaurentPoly phi_L(const ShuffleElement& f, const PartitionL& L);

struct LinearFactor {
  int u = 0;
  int v = 0;
  std::string item;  // "i" .. "iv"
  LaurentPoly form;
};

std::vector<LinearFactor> Q_L_factors(int n, const PartitionL& L);
LaurentPoly Q_L(int n, const PartitionL& L);

// Divides by the factors of Q_L one at a time.  Throws NotDivisible.
LaurentPoly divide_by_Q_L(const LaurentPoly& p, int n, const PartitionL& L);

struct YoungDiagram {
  std::vector<int> rows;

  static YoungDiagram parse(const std::string& text);  // "2,1"
  std::string str() const;
  int size() const;
  YoungDiagram transpose() const;
  auto operator<=>(const YoungDiagram& o) const = default;
};

// x_{i, l_1+...+l_{t-1}+j} -> q^{2j} y(i,t) on the pole-form fraction.
RatFunc phi_lambda(const ShuffleElement& f, const YoungDiagram& lambda);

// e(c_1, m_{c_1}) * ... * e(c_n, m_{c_n}) over every ordering c of the colours.
std::vector<ShuffleElement> colour_order_products(int n, const std::vector<int>& modes);

// Combinations of `pool` (coefficients are Laurent polynomials in the
// parameters) killed by phi_{L'} for every class L' > L.  Each returned
// element is verified exactly.
std::vector<ShuffleElement> filtered_combinations(const std::vector<ShuffleElement>& pool, const PartitionL& L,
                                                  std::uint64_t seed = 1);

}  // namespace shuffleforge
