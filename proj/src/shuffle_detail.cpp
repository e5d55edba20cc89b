#include "shuffle_detail.hpp"

#include <algorithm>
#include <numeric>

namespace shuffleforge::detail {

namespace {

Monomial qd(int eq, int ed) {
  Monomial m;
  m.set(VarId::q(), eq);
  m.set(VarId::d(), ed);
  return m;
}

std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> s;
    for (int p = 0; p < m; ++p) {
      if (pick[static_cast<std::size_t>(p)]) s.push_back(p + 1);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

KernelEntry kernel_entry(int n, int i, int j) {
  KernelEntry e;
  if (n == 1) {
    for (const Monomial& m : {qd(2, 0), qd(-1, 1), qd(-1, -1)}) e.num.push_back({m, Rational(1), Monomial()});
    e.den_power = 3;
    return e;
  }
  if (i == j) {
    e.num.push_back({Monomial(), Rational(1), qd(-2, 0)});
    e.den_power = 1;
    return e;
  }
  if (n == 2) {
    e.num.push_back({Monomial(), Rational(1), qd(1, 1)});
    e.num.push_back({Monomial(), Rational(1), qd(1, -1)});
    e.den_power = 2;
    return e;
  }
  if (j == mod(i + 1, n)) {
    e.num.push_back({qd(0, -1), Rational(1), qd(1, 0)});
    e.den_power = 1;
  } else if (j == mod(i - 1, n)) {
    e.num.push_back({Monomial(), Rational(1), qd(1, -1)});
    e.den_power = 1;
  }
  return e;
}

std::vector<Shuffle> shuffles(int n, const DegreeVector& k, const DegreeVector& m) {
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= m[static_cast<std::size_t>(i)]; ++j) VarRegistry::slot(VarId::x(i, j));
  }
  const auto slots = static_cast<std::size_t>(VarRegistry::size());
  std::vector<std::int8_t> identity(slots);
  std::iota(identity.begin(), identity.end(), std::int8_t{0});
  std::vector<Shuffle> out{{identity, 1}};
  for (int i = 0; i < n; ++i) {
    const int ki = k[static_cast<std::size_t>(i)];
    const int mi = m[static_cast<std::size_t>(i)];
    std::vector<Shuffle> next;
    for (const auto& first : subsets(mi, ki)) {
      std::vector<int> second;
      for (int p = 1; p <= mi; ++p) {
        if (!std::binary_search(first.begin(), first.end(), p)) second.push_back(p);
      }
      int inversions = 0;
      for (int a : first) {
        for (int b : second) inversions += a > b;
      }
      for (const auto& base : out) {
        Shuffle s = base;
        for (int t = 0; t < ki; ++t) {
          s.perm[static_cast<std::size_t>(VarRegistry::slot(VarId::x(i, t + 1)))] =
              static_cast<std::int8_t>(VarRegistry::slot(VarId::x(i, first[static_cast<std::size_t>(t)])));
        }
        for (int t = 0; t < mi - ki; ++t) {
          s.perm[static_cast<std::size_t>(VarRegistry::slot(VarId::x(i, ki + t + 1)))] =
              static_cast<std::int8_t>(VarRegistry::slot(VarId::x(i, second[static_cast<std::size_t>(t)])));
        }
        if (inversions % 2) s.sign = -s.sign;
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}


int product_sign(int n, const DegreeVector& k, const DegreeVector& l) {
  if (n == 1) return (k[0] * l[0]) % 2 ? -1 : 1;
  if (n == 2) return 1;
  int e = 0;
  for (int i = 0; i < n; ++i) e += l[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(mod(i + 1, n))];
  return e % 2 ? -1 : 1;
}

}  // namespace shuffleforge::detail
