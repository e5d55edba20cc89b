#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "shuffleforge/var.hpp"

namespace shuffleforge {

// Dense exponent vector over the registry slots.  Exponents are signed
// 8-bit; arithmetic that leaves that range throws ExponentOverflow.
class Monomial {
 public:
  static constexpr int kSlots = VarRegistry::kMaxSlots;

  Monomial() { exps_.fill(0); }
  Monomial(std::initializer_list<std::pair<VarId, int>> powers);

  static Monomial of(const VarId& v, int e = 1);

  int exp(int slot) const { return exps_[static_cast<std::size_t>(slot)]; }
  int exp(const VarId& v) const;
  void set(int slot, int e);
  void set(const VarId& v, int e);

  bool is_one() const;
  int total_degree() const;  // sum over all slots
  // Degree restricted to non-parameter variables.
  int variable_degree() const;
  bool only_params() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

  bool operator==(const Monomial& o) const { return std::memcmp(exps_.data(), o.exps_.data(), kSlots) == 0; }
  // Storage order (slot order); used for internal sorting only.
  bool operator<(const Monomial& o) const { return std::memcmp(exps_.data(), o.exps_.data(), kSlots) < 0; }

  std::size_t hash() const;

  // Applies h^2 -> d to the formal square-root slot, if registered.
  void fold_sqrt();

  std::string str() const;

  const std::int8_t* data() const { return exps_.data(); }
  std::int8_t* data() { return exps_.data(); }

 private:
  alignas(16) std::array<std::int8_t, kSlots> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Canonical comparison: lexicographic on exponents taken in VarId order.
// `order` is VarRegistry::canonical_order().
bool canonical_less(const Monomial& a, const Monomial& b, const std::vector<int>& order);

}  // namespace shuffleforge
