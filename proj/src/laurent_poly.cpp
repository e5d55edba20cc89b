#include "shuffleforge/laurent_poly.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>

#ifdef SHUFFLEFORGE_HAVE_OPENMP
#include <omp.h>
#endif

#include "shuffleforge/errors.hpp"

namespace shuffleforge {

namespace {

std::atomic<std::size_t> g_term_limit{0};

void check_limit(std::size_t n) {
  std::size_t lim = g_term_limit.load(std::memory_order_relaxed);
  if (lim != 0 && n > lim) {
    throw TermLimitExceeded("expansion exceeded term limit of " + std::to_string(lim));
  }
}

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

// Below this many term pairs the parallel product is not worth forking for.
constexpr std::size_t kParallelThreshold = 1u << 14;

}  // namespace

void set_term_limit(std::size_t limit) { g_term_limit.store(limit, std::memory_order_relaxed); }
std::size_t term_limit() { return g_term_limit.load(std::memory_order_relaxed); }

// ---------------------------------------------------------------------------
// TermAccumulator

TermAccumulator::TermAccumulator(std::size_t expected) {
  std::size_t cap = 16;
  while (cap < 2 * expected) cap <<= 1;
  table_.assign(cap, -1);
  mask_ = cap - 1;
  terms_.reserve(expected);
}

void TermAccumulator::grow() {
  std::size_t cap = table_.size() * 2;
  table_.assign(cap, -1);
  mask_ = cap - 1;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::size_t h = terms_[i].mono.hash() & mask_;
    while (table_[h] >= 0) h = (h + 1) & mask_;
    table_[h] = static_cast<std::int32_t>(i);
  }
}

void TermAccumulator::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  std::size_t h = m.hash() & mask_;
  while (true) {
    std::int32_t idx = table_[h];
    if (idx < 0) break;
    if (terms_[static_cast<std::size_t>(idx)].mono == m) {
      terms_[static_cast<std::size_t>(idx)].coeff += c;
      return;
    }
    h = (h + 1) & mask_;
  }
  table_[h] = static_cast<std::int32_t>(terms_.size());
  terms_.push_back({m, c});
  if ((terms_.size() & 0xFFF) == 0) check_limit(terms_.size());
  if (2 * terms_.size() > table_.size()) grow();
}

void TermAccumulator::add(const LaurentPoly& p, const Rational& scale) {
  if (scale.is_one()) {
    for (const auto& t : p.terms()) add(t.mono, t.coeff);
  } else {
    for (const auto& t : p.terms()) add(t.mono, t.coeff * scale);
  }
}

void TermAccumulator::merge(TermAccumulator&& other) {
  for (auto& t : other.terms_) add(t.mono, t.coeff);
  other.terms_.clear();
}

LaurentPoly TermAccumulator::finish() && {
  LaurentPoly p;
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
  std::sort(terms_.begin(), terms_.end(), term_less);
  p.terms_ = std::move(terms_);
  return p;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(Rational c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

LaurentPoly::LaurentPoly(const Monomial& m, Rational c) {
  if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  TermAccumulator acc(terms.size());
  for (auto& t : terms) acc.add(t.mono, t.coeff);
  return std::move(acc).finish();
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational LaurentPoly::constant_term() const {
  Monomial one;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{one, Rational()}, term_less);
  if (it != terms_.end() && it->mono == one) return it->coeff;
  return Rational();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->mono < b->mono) {
      out.push_back(std::move(*a++));
    } else if (b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.size() * b.size() >= kParallelThreshold) return kernels::mul_parallel(a, b);
  return kernels::mul_serial(a, b);
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::times(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  // fold_sqrt can merge monomials, so re-normalize when h is in play.
  if (m.exp(2) != 0) return from_terms(std::move(r.terms_));
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

LaurentPoly LaurentPoly::times_binomial(const Monomial& a, const Rational& c, const Monomial& b) const {
  return times(a) - times(b, c);
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw Error("negative power of a non-monomial Laurent polynomial");
    return LaurentPoly(terms_[0].mono.pow(k), terms_[0].coeff.pow(k));
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  }
  return true;
}

std::pair<int, int> LaurentPoly::degree_range(int slot) const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_[0].mono.exp(slot);
  int hi = lo;
  for (const auto& t : terms_) {
    lo = std::min(lo, t.mono.exp(slot));
    hi = std::max(hi, t.mono.exp(slot));
  }
  return {lo, hi};
}

std::pair<int, int> LaurentPoly::degree_range(std::span<const int> slots) const {
  if (terms_.empty()) return {0, 0};
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = 0;
    for (int s : slots) e += t.mono.exp(s);
    if (first) {
      lo = hi = e;
      first = false;
    }
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return {lo, hi};
}

bool LaurentPoly::is_homogeneous(std::span<const int> slots) const {
  auto [lo, hi] = degree_range(slots);
  return lo == hi;
}

bool LaurentPoly::involves(int slot) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.exp(slot) != 0; });
}

LaurentPoly LaurentPoly::relabel(std::span<const std::int8_t> perm) const {
  const int n = static_cast<int>(perm.size());
  bool bijective = true;
  {
    std::array<bool, Monomial::kSlots> hit{};
    for (int s = 0; s < n; ++s) {
      auto t = static_cast<std::size_t>(perm[static_cast<std::size_t>(s)]);
      bijective &= !hit[t];
      hit[t] = true;
    }
    for (int s = n; s < Monomial::kSlots; ++s) {
      bijective &= !hit[static_cast<std::size_t>(s)];
      hit[static_cast<std::size_t>(s)] = true;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      int e = t.mono.exp(s);
      if (e == 0) continue;
      int target = s < n ? perm[static_cast<std::size_t>(s)] : s;
      m.set(target, m.exp(target) + e);
    }
    out.push_back({m, t.coeff});
  }
  if (!bijective) return from_terms(std::move(out));
  LaurentPoly r;
  r.terms_ = std::move(out);
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

LaurentPoly LaurentPoly::homogeneous_part(std::span<const int> slots, int deg) const {
  LaurentPoly r;
  for (const auto& t : terms_) {
    int e = 0;
    for (int s : slots) e += t.mono.exp(s);
    if (e == deg) r.terms_.push_back(t);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  auto order = VarRegistry::canonical_order();
  std::vector<const Term*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* a, const Term* b) { return canonical_less(a->mono, b->mono, order); });
  std::string out;
  for (const Term* t : sorted) {
    std::string c = t->coeff.str();
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (t->mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t->mono.str();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernels

namespace kernels {

LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  TermAccumulator acc(std::max(a.size(), b.size()) * 2);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) acc.add(ta.mono * tb.mono, ta.coeff * tb.coeff);
  }
  return std::move(acc).finish();
}

LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b) {
#ifdef SHUFFLEFORGE_HAVE_OPENMP
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly& outer = a.size() >= b.size() ? a : b;
  const LaurentPoly& inner = a.size() >= b.size() ? b : a;
  const int threads = omp_get_max_threads();
  if (threads <= 1) return mul_serial(a, b);
  std::vector<TermAccumulator> partial;
  partial.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) partial.emplace_back(outer.size() / static_cast<std::size_t>(threads) * 2);
  const auto n = static_cast<std::int64_t>(outer.size());
  std::exception_ptr failure;
#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        const auto& ta = outer.terms()[static_cast<std::size_t>(i)];
        for (const auto& tb : inner.terms()) acc.add(ta.mono * tb.mono, ta.coeff * tb.coeff);
      } catch (...) {
#pragma omp critical(shuffleforge_mul_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t t = 1; t < partial.size(); ++t) partial[0].merge(std::move(partial[t]));
  return std::move(partial[0]).finish();
#else
  return mul_serial(a, b);
#endif
}

}  // namespace kernels

}  // namespace shuffleforge
