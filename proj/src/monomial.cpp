#include "shuffleforge/monomial.hpp"

#include <algorithm>
#include <vector>

#include "shuffleforge/errors.hpp"

namespace shuffleforge {

namespace {

constexpr int kSlotD = 1;
constexpr int kSlotH = 2;

std::int8_t checked(int e) {
  if (e < -128 || e > 127) throw ExponentOverflow("exponent " + std::to_string(e) + " out of range");
  return static_cast<std::int8_t>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::pair<VarId, int>> powers) {
  exps_.fill(0);
  for (const auto& [v, e] : powers) {
    int s = VarRegistry::slot(v);
    set(s, exp(s) + e);
  }
  fold_sqrt();
}

Monomial Monomial::of(const VarId& v, int e) {
  Monomial m;
  m.set(VarRegistry::slot(v), e);
  m.fold_sqrt();
  return m;
}

int Monomial::exp(const VarId& v) const {
  int s = VarRegistry::find(v);
  return s < 0 ? 0 : exp(s);
}

void Monomial::set(int slot, int e) { exps_[static_cast<std::size_t>(slot)] = checked(e); }

void Monomial::set(const VarId& v, int e) { set(VarRegistry::slot(v), e); }

bool Monomial::is_one() const {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

int Monomial::total_degree() const {
  int t = 0;
  for (auto e : exps_) t += e;
  return t;
}

int Monomial::variable_degree() const {
  int t = 0;
  const int n = VarRegistry::size();
  for (int s = 0; s < n; ++s) {
    if (exps_[static_cast<std::size_t>(s)] != 0 && !VarRegistry::is_param(s)) t += exps_[static_cast<std::size_t>(s)];
  }
  return t;
}

bool Monomial::only_params() const {
  const int n = VarRegistry::size();
  for (int s = 0; s < n; ++s) {
    if (exps_[static_cast<std::size_t>(s)] != 0 && !VarRegistry::is_param(s)) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  bool overflow = false;
  for (int s = 0; s < kSlots; ++s) {
    int e = exps_[static_cast<std::size_t>(s)] + o.exps_[static_cast<std::size_t>(s)];
    overflow |= (e < -128) | (e > 127);
    r.exps_[static_cast<std::size_t>(s)] = static_cast<std::int8_t>(e);
  }
  if (overflow) throw ExponentOverflow("monomial product overflows exponent range");
  r.fold_sqrt();
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::inverse() const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) r.set(s, -exps_[static_cast<std::size_t>(s)]);
  r.fold_sqrt();
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) r.set(s, exps_[static_cast<std::size_t>(s)] * k);
  r.fold_sqrt();
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[kSlots / 8];
  std::memcpy(words, exps_.data(), kSlots);
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (auto w : words) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

void Monomial::fold_sqrt() {
  int e = exps_[kSlotH];
  if (e == 0 || e == 1) return;
  int half = (e >= 0) ? e / 2 : -((1 - e) / 2);
  set(kSlotD, exps_[kSlotD] + half);
  set(kSlotH, e - 2 * half);
}

std::string Monomial::str() const {
  std::string out;
  for (int s : VarRegistry::canonical_order()) {
    int e = exps_[static_cast<std::size_t>(s)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += VarRegistry::var(s).str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool canonical_less(const Monomial& a, const Monomial& b, const std::vector<int>& order) {
  // Higher exponents first in VarId order, so x^2 precedes x precedes 1.
  for (int s : order) {
    int ea = a.exp(s);
    int eb = b.exp(s);
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace shuffleforge
