#include "shuffleforge/ratfunc.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>

#include "shuffleforge/errors.hpp"

namespace shuffleforge {

namespace {

constexpr int kSlotD = 1;
constexpr int kSlotH = 2;

bool optional_less(const std::optional<VarId>& a, const std::optional<VarId>& b) {
  if (!a || !b) return !a && b;
  return *a < *b;
}

// Split m into its parameter part and its variable part; the kernel
// variable z counts as a variable.
std::pair<Monomial, Monomial> split_params(const Monomial& m) {
  Monomial p;
  Monomial v;
  const int n = VarRegistry::size();
  const int z = VarRegistry::slot(VarId::z());
  for (int s = 0; s < n; ++s) {
    int e = m.exp(s);
    if (e == 0) continue;
    if (VarRegistry::is_param(s) && s != z) {
      p.set(s, e);
    } else {
      v.set(s, e);
    }
  }
  return {p, v};
}

// The single variable of v with exponent one, if v has that shape.
std::optional<int> single_var(const Monomial& v) {
  std::optional<int> found;
  for (int s = 0; s < Monomial::kSlots; ++s) {
    int e = v.exp(s);
    if (e == 0) continue;
    if (e != 1 || found) return std::nullopt;
    found = s;
  }
  return found;
}

template <class T, class Less>
std::vector<T> multiset_minus(std::vector<T> a, const std::vector<T>& b, Less less) {
  // a - b for sorted inputs
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
  return out;
}

std::vector<LaurentPoly> poly_minus(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
  std::vector<LaurentPoly> out;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool hit = false;
    for (std::size_t i = 0; i < b.size() && !hit; ++i) {
      if (!used[i] && b[i] == p) {
        used[i] = true;
        hit = true;
      }
    }
    if (!hit) out.push_back(p);
  }
  return out;
}

LaurentPoly product_of(const LaurentPoly& base, const std::vector<BinomialForm>& dens,
                       const std::vector<LaurentPoly>& general) {
  LaurentPoly r = base;
  for (const auto& b : dens) {
    Monomial l = Monomial::of(b.lhs());
    Monomial rr = b.coeff_mono();
    if (b.rhs()) rr *= Monomial::of(*b.rhs());
    r = r.times_binomial(l, b.coeff(), rr);
  }
  for (const auto& g : general) r *= g;
  return r;
}

std::vector<BinomialForm> sorted(std::vector<BinomialForm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// BinomialForm

BinomialForm::Normalized BinomialForm::make(VarId lhs, std::optional<VarId> rhs, Rational c, Monomial cm) {
  if (c.is_zero()) throw Error("binomial form with zero coefficient");
  if (rhs && *rhs == lhs) throw Error("binomial form with equal sides: " + lhs.str());
  if (!cm.only_params()) throw Error("binomial coefficient must be a parameter monomial");
  if (cm.exp(VarRegistry::slot(lhs)) != 0 || (rhs && cm.exp(VarRegistry::slot(*rhs)) != 0)) {
    throw Error("binomial coefficient involves its own variable");
  }
  BinomialForm f;
  if (rhs && *rhs < lhs) {
    // lhs - k*rhs = -k * (rhs - k^{-1} lhs)
    f.lhs_ = *rhs;
    f.rhs_ = lhs;
    f.c_ = c.inverse();
    f.cm_ = cm.inverse();
    return {-c, cm, std::move(f)};
  }
  f.lhs_ = lhs;
  f.rhs_ = rhs;
  f.c_ = std::move(c);
  f.cm_ = cm;
  return {Rational(1), Monomial(), std::move(f)};
}

LaurentPoly BinomialForm::as_poly() const {
  Monomial r = cm_;
  if (rhs_) r *= Monomial::of(*rhs_);
  return LaurentPoly(Monomial::of(lhs_)) - LaurentPoly(r, c_);
}

std::string BinomialForm::str() const { return "(" + as_poly().str() + ")"; }

bool BinomialForm::operator<(const BinomialForm& o) const {
  if (lhs_ != o.lhs_) return lhs_ < o.lhs_;
  if (rhs_ != o.rhs_) return optional_less(rhs_, o.rhs_);
  if (!(c_ == o.c_)) return c_ < o.c_;
  return cm_ < o.cm_;
}

// ---------------------------------------------------------------------------
// exact_divide

LaurentPoly exact_divide(const LaurentPoly& f, const BinomialForm& b) {
  if (f.is_zero()) return {};
  const int lslot = VarRegistry::slot(b.lhs());
  Monomial shift = b.coeff_mono();
  if (b.rhs()) shift *= Monomial::of(*b.rhs());
  const Monomial lhs_inv = Monomial::of(b.lhs(), -1);

  std::map<int, std::vector<Term>, std::greater<>> buckets;
  for (const auto& t : f.terms()) buckets[t.mono.exp(lslot)].push_back(t);
  const int emin = buckets.rbegin()->first;

  TermAccumulator quotient(f.size());
  while (!buckets.empty()) {
    auto it = buckets.begin();
    const int e = it->first;
    LaurentPoly level = LaurentPoly::from_terms(std::move(it->second));
    buckets.erase(it);
    if (level.is_zero()) continue;
    if (e == emin) {
      throw NotDivisible("remainder " + level.str() + " dividing by " + b.str());
    }
    auto& below = buckets[e - 1];
    for (const auto& t : level.terms()) {
      Monomial qm = t.mono * lhs_inv;
      quotient.add(qm, t.coeff);
      below.push_back({qm * shift, t.coeff * b.coeff()});
    }
  }
  return std::move(quotient).finish();
}

// ---------------------------------------------------------------------------
// classify_factor

FactorShape classify_factor(const LaurentPoly& p) {
  if (p.is_zero()) throw DenominatorVanishes("zero factor");
  if (p.size() == 1) return {p, std::nullopt, std::nullopt};
  if (p.size() == 2) {
    const Term& t1 = p.terms()[0];
    const Term& t2 = p.terms()[1];
    Monomial g;
    for (int s = 0; s < Monomial::kSlots; ++s) g.set(s, std::min(t1.mono.exp(s), t2.mono.exp(s)));
    // Raw division here: fold_sqrt must not move exponents between h and d.
    Monomial a;
    Monomial bm;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      a.set(s, t1.mono.exp(s) - g.exp(s));
      bm.set(s, t2.mono.exp(s) - g.exp(s));
    }
    auto [pa, va] = split_params(a);
    auto [pb, vb] = split_params(bm);
    auto sa = single_var(va);
    auto sb = single_var(vb);
    bool a_one = va.is_one();
    bool b_one = vb.is_one();
    if ((sa || a_one) && (sb || b_one) && !(a_one && b_one)) {
      // c1*pa*va + c2*pb*vb, at least one side a genuine variable
      const Rational* c1 = &t1.coeff;
      const Rational* c2 = &t2.coeff;
      if (a_one) {
        std::swap(sa, sb);
        std::swap(pa, pb);
        std::swap(c1, c2);
      }
      // = c1*pa * (va - (-c2/c1) * (pb/pa) * vb)
      Rational k = -(*c2) / *c1;
      Monomial km = pb * pa.inverse();
      std::optional<VarId> rhs;
      if (sb) rhs = VarRegistry::var(*sb);
      auto norm = BinomialForm::make(VarRegistry::var(*sa), rhs, k, km);
      Monomial front = g * pa * norm.scalar_mono;
      return {LaurentPoly(front, *c1 * norm.scalar), std::move(norm.form), std::nullopt};
    }
  }
  return {LaurentPoly(1), std::nullopt, p};
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(LaurentPoly num, std::vector<BinomialForm> den, std::vector<LaurentPoly> general_den)
    : num_(std::move(num)), den_(std::move(den)), general_den_(std::move(general_den)) {}

RatFunc& RatFunc::divide_by(const LaurentPoly& factor) {
  FactorShape s = classify_factor(factor);
  const Term& m = s.monomial.terms()[0];
  num_ = num_.times(m.mono.inverse(), m.coeff.inverse());
  if (s.form) den_.push_back(std::move(*s.form));
  if (s.general) general_den_.push_back(std::move(*s.general));
  return *this;
}

LaurentPoly RatFunc::expanded_den() const { return product_of(LaurentPoly(1), den_, general_den_); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r(a.num_ * b.num_, a.den_, a.general_den_);
  r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
  r.general_den_.insert(r.general_den_.end(), b.general_den_.begin(), b.general_den_.end());
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  auto da = sorted(a.den_);
  auto db = sorted(b.den_);
  auto less = [](const BinomialForm& x, const BinomialForm& y) { return x < y; };
  // b's factors missing from a, and vice versa
  auto extra_for_a = multiset_minus(db, da, less);
  auto extra_for_b = multiset_minus(da, db, less);
  auto gen_for_a = poly_minus(b.general_den_, a.general_den_);
  auto gen_for_b = poly_minus(a.general_den_, b.general_den_);
  LaurentPoly num = product_of(a.num_, extra_for_a, gen_for_a) + product_of(b.num_, extra_for_b, gen_for_b);
  std::vector<BinomialForm> den = da;
  den.insert(den.end(), extra_for_a.begin(), extra_for_a.end());
  std::vector<LaurentPoly> gen = a.general_den_;
  gen.insert(gen.end(), gen_for_a.begin(), gen_for_a.end());
  return RatFunc(std::move(num), std::move(den), std::move(gen));
}

std::string RatFunc::str() const {
  if (den_.empty() && general_den_.empty()) return num_.str();
  std::string out = "(" + num_.str() + ")/(";
  bool first = true;
  for (const auto& b : sorted(den_)) {
    if (!first) out += "*";
    out += b.str();
    first = false;
  }
  for (const auto& g : general_den_) {
    if (!first) out += "*";
    out += "(" + g.str() + ")";
    first = false;
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Equality

namespace {
std::atomic<bool> g_fast_path{false};
}  // namespace

void set_fast_path_default(bool on) { g_fast_path = on; }
bool fast_path_default() { return g_fast_path; }

bool cross_multiply_equal(const RatFunc& f, const RatFunc& g, const EqualityOptions& opts) {
  if (opts.fast_path || g_fast_path) {
    auto vars = variables(f);
    auto vg = variables(g);
    vars.insert(vars.end(), vg.begin(), vg.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::uint64_t state = opts.seed;
    for (int attempt = 0; attempt < 32; ++attempt) {
      Point pt = random_point(vars, state);
      try {
        if (!(evaluate(f, pt) == evaluate(g, pt))) return false;
        break;
      } catch (const DivisionByZero&) {
        continue;
      }
    }
  }
  auto df = sorted(f.den());
  auto dg = sorted(g.den());
  auto less = [](const BinomialForm& x, const BinomialForm& y) { return x < y; };
  auto only_f = multiset_minus(df, dg, less);
  auto only_g = multiset_minus(dg, df, less);
  auto gen_f = poly_minus(f.general_den(), g.general_den());
  auto gen_g = poly_minus(g.general_den(), f.general_den());
  return product_of(f.num(), only_g, gen_g) == product_of(g.num(), only_f, gen_f);
}

// ---------------------------------------------------------------------------
// Substitution

LaurentPoly substitute(const LaurentPoly& p, const Assignment& a) {
  if (a.empty() || p.is_zero()) return p;
  std::vector<int> slots;
  std::vector<const LaurentPoly*> values;
  bool all_monomial = true;
  for (const auto& [v, val] : a) {
    int s = VarRegistry::find(v);
    if (s < 0 || !p.involves(s)) continue;
    slots.push_back(s);
    values.push_back(&val);
    all_monomial &= val.size() <= 1;
  }
  if (slots.empty()) return p;

  TermAccumulator acc(p.size());
  if (all_monomial) {
    for (const auto& t : p.terms()) {
      Monomial m = t.mono;
      Rational c = t.coeff;
      bool zero = false;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        int e = m.exp(slots[i]);
        if (e == 0) continue;
        m.set(slots[i], 0);
        if (values[i]->is_zero()) {
          if (e < 0) throw DivisionByZero("negative power of a variable substituted by zero");
          zero = true;
          break;
        }
        const Term& v = values[i]->terms()[0];
        m *= v.mono.pow(e);
        c *= v.coeff.pow(e);
      }
      if (!zero) acc.add(m, c);
    }
    return std::move(acc).finish();
  }

  std::map<std::pair<int, int>, LaurentPoly> powers;
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto key = std::make_pair(static_cast<int>(i), e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, values[i]->pow(e)).first;
    return it->second;
  };
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    std::vector<std::pair<std::size_t, int>> used;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      int e = m.exp(slots[i]);
      if (e == 0) continue;
      m.set(slots[i], 0);
      used.emplace_back(i, e);
    }
    LaurentPoly r(m, t.coeff);
    for (auto [i, e] : used) r *= power(i, e);
    acc.add(r);
  }
  return std::move(acc).finish();
}

RatFunc substitute(const RatFunc& f, const Assignment& a) {
  if (a.empty()) return f;
  RatFunc out(substitute(f.num(), a));
  for (const auto& b : f.den()) {
    LaurentPoly v = substitute(b.as_poly(), a);
    if (v.is_zero()) throw DenominatorVanishes("denominator factor " + b.str() + " vanishes");
    out.divide_by(v);
  }
  for (const auto& g : f.general_den()) {
    LaurentPoly v = substitute(g, a);
    if (v.is_zero()) throw DenominatorVanishes("denominator factor (" + g.str() + ") vanishes");
    out.divide_by(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Rational evaluate(const LaurentPoly& p, const Point& point) {
  std::vector<std::optional<Rational>> vals(Monomial::kSlots);
  for (const auto& [v, r] : point) {
    int s = VarRegistry::find(v);
    if (s >= 0) vals[static_cast<std::size_t>(s)] = r;
  }
  if (vals[kSlotH] && !vals[kSlotD]) vals[kSlotD] = *vals[kSlotH] * *vals[kSlotH];
  Rational total;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      int e = t.mono.exp(s);
      if (e == 0) continue;
      const auto& v = vals[static_cast<std::size_t>(s)];
      if (!v) throw Error("no value for " + VarRegistry::var(s).str());
      if (e < 0 && v->is_zero()) throw DivisionByZero(VarRegistry::var(s).str() + " is zero");
      c *= v->pow(e);
    }
    total += c;
  }
  return total;
}

Rational evaluate(const RatFunc& f, const Point& point) {
  Rational den(1);
  for (const auto& b : f.den()) {
    Rational v = evaluate(b.as_poly(), point);
    if (v.is_zero()) throw DivisionByZero("denominator factor " + b.str() + " vanishes");
    den *= v;
  }
  for (const auto& g : f.general_den()) {
    Rational v = evaluate(g, point);
    if (v.is_zero()) throw DivisionByZero("denominator factor (" + g.str() + ") vanishes");
    den *= v;
  }
  return evaluate(f.num(), point) / den;
}

std::vector<VarId> variables(const LaurentPoly& p) {
  std::vector<VarId> out;
  for (int s = 0; s < VarRegistry::size(); ++s) {
    if (p.involves(s)) out.push_back(VarRegistry::var(s));
  }
  return out;
}

std::vector<VarId> variables(const RatFunc& f) {
  std::set<VarId> all;
  auto add = [&](const LaurentPoly& p) {
    for (const auto& v : variables(p)) all.insert(v);
  };
  add(f.num());
  for (const auto& b : f.den()) add(b.as_poly());
  for (const auto& g : f.general_den()) add(g);
  return {all.begin(), all.end()};
}

Point random_point(const std::vector<VarId>& vars, std::uint64_t& state, long long bound) {
  std::mt19937_64 rng(state);
  state = rng();
  std::uniform_int_distribution<long long> num(1, bound);
  std::uniform_int_distribution<long long> den(1, bound);
  std::bernoulli_distribution neg(0.5);
  Point pt;
  for (const auto& v : vars) {
    long long a = num(rng);
    pt[v] = Rational(neg(rng) ? -a : a, den(rng));
  }
  if (pt.count(VarId::h())) pt[VarId::d()] = pt[VarId::h()] * pt[VarId::h()];
  return pt;
}

}  // namespace shuffleforge
