#include "shuffleforge/shuffle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <exception>
#include <numeric>

#ifdef SHUFFLEFORGE_HAVE_OPENMP
#include <omp.h>
#endif

#include "shuffleforge/errors.hpp"
#include "shuffle_detail.hpp"

namespace shuffleforge {

namespace {

using detail::kernel_entry;
using detail::KernelEntry;
using detail::mod;
using detail::Shuffle;
using detail::shuffles;

void require_same_algebra(const ShuffleElement& f, const ShuffleElement& g) {
  if (f.n != g.n) throw Error("elements of different algebras");
}

void add_permuted(TermAccumulator& acc, const LaurentPoly& p, const Shuffle& s) {
  const std::size_t len = s.perm.size();
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    for (std::size_t slot = 0; slot < len; ++slot) {
      m.data()[static_cast<std::size_t>(s.perm[slot])] = t.mono.data()[slot];
    }
    acc.add(m, s.sign > 0 ? t.coeff : -t.coeff);
  }
}

// P * V_F * V_G for the unpermuted arrangement, sign included.
struct StarSetup {
  DegreeVector m;
  LaurentPoly product;
  std::vector<Shuffle> shuffles;
};

StarSetup setup(const ShuffleElement& f, const ShuffleElement& g) {
  require_same_algebra(f, g);
  const int n = f.n;
  const DegreeVector& k = f.deg;
  const DegreeVector& l = g.deg;
  StarSetup s;
  s.m = add(k, l);

  std::vector<std::int8_t> shift;
  {
    std::vector<std::pair<int, int>> moves;
    for (int i = 0; i < n; ++i) {
      for (int j = l[static_cast<std::size_t>(i)]; j >= 1; --j) {
        moves.emplace_back(VarRegistry::slot(VarId::x(i, j)),
                           VarRegistry::slot(VarId::x(i, k[static_cast<std::size_t>(i)] + j)));
      }
    }
    shift.resize(static_cast<std::size_t>(VarRegistry::size()));
    std::iota(shift.begin(), shift.end(), std::int8_t{0});
    for (auto [from, to] : moves) shift[static_cast<std::size_t>(from)] = static_cast<std::int8_t>(to);
  }
  LaurentPoly p = f.numerator * g.numerator.relabel(shift);

  const int sign = detail::product_sign(n, k, l);
  if (sign < 0) p = -p;

  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k[static_cast<std::size_t>(i)]; ++j) {
      Monomial a = Monomial::of(VarId::x(i, j));
      for (int i2 = 0; i2 < n; ++i2) {
        KernelEntry e = kernel_entry(n, i, i2);
        if (e.num.empty()) continue;
        for (int j2 = 1; j2 <= l[static_cast<std::size_t>(i2)]; ++j2) {
          Monomial b = Monomial::of(VarId::x(i2, k[static_cast<std::size_t>(i2)] + j2));
          for (const auto& kb : e.num) p = p.times_binomial(kb.ma * a, kb.c, kb.mb * b);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const int ki = k[static_cast<std::size_t>(i)];
    const int mi = s.m[static_cast<std::size_t>(i)];
    for (int j = 1; j <= mi; ++j) {
      for (int j2 = j + 1; j2 <= mi; ++j2) {
        if ((j <= ki) != (j2 <= ki)) continue;
        p = p.times_binomial(Monomial::of(VarId::x(i, j)), Rational(1), Monomial::of(VarId::x(i, j2)));
      }
    }
  }
  s.product = std::move(p);
  s.shuffles = shuffles(n, k, s.m);
  return s;
}

LaurentPoly divide_vandermonde(LaurentPoly a, int n, const DegreeVector& m) {
  for (int i = 0; i < n; ++i) {
    const int mi = m[static_cast<std::size_t>(i)];
    for (int j = 1; j <= mi; ++j) {
      for (int j2 = j + 1; j2 <= mi; ++j2) {
        auto b = BinomialForm::make(VarId::x(i, j), VarId::x(i, j2));
        try {
          a = exact_divide(a, b.form);
        } catch (const NotDivisible& e) {
          throw PoleViolation(std::string("symmetrized sum not antisymmetric: ") + e.what());
        }
      }
    }
  }
  return a;
}

LaurentPoly antisymmetrize(const ShuffleElement& f, const ShuffleElement& g) {
  if (auto fast = detail::antisymmetrized_compact(f, g)) return std::move(*fast);
#ifdef SHUFFLEFORGE_HAVE_OPENMP
  return kernels::antisymmetrized_parallel(f, g);
#else
  return kernels::antisymmetrized_serial(f, g);
#endif
}

// A parameter other than q, d, h occurring in f but not in g.
std::optional<int> exclusive_param(const ShuffleElement& f, const ShuffleElement& g) {
  std::array<bool, Monomial::kSlots> in_f{};
  std::array<bool, Monomial::kSlots> in_g{};
  for (const auto& t : f.numerator.terms()) {
    for (int s = 0; s < Monomial::kSlots; ++s) in_f[static_cast<std::size_t>(s)] |= t.mono.exp(s) != 0;
  }
  for (const auto& t : g.numerator.terms()) {
    for (int s = 0; s < Monomial::kSlots; ++s) in_g[static_cast<std::size_t>(s)] |= t.mono.exp(s) != 0;
  }
  const std::array<int, 3> fixed{VarRegistry::slot(VarId::q()), VarRegistry::slot(VarId::d()),
                                 VarRegistry::slot(VarId::h())};
  for (int s = 0; s < VarRegistry::size(); ++s) {
    if (!VarRegistry::is_param(s) || std::find(fixed.begin(), fixed.end(), s) != fixed.end()) continue;
    if (in_f[static_cast<std::size_t>(s)] && !in_g[static_cast<std::size_t>(s)]) return s;
  }
  return std::nullopt;
}

// Coefficients of f in the powers of the parameter at `slot`.
std::vector<ShuffleElement> split_by(const ShuffleElement& f, int slot) {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : f.numerator.terms()) {
    Term c = t;
    c.mono.set(slot, 0);
    parts[t.mono.exp(slot)].push_back(std::move(c));
  }
  std::vector<ShuffleElement> out;
  for (auto& [e, ts] : parts) out.push_back({f.n, f.deg, LaurentPoly::from_terms(std::move(ts))});
  return out;
}

}  // namespace

std::vector<ShuffleElement> coefficients_in(const ShuffleElement& f, const VarId& v) {
  int slot = VarRegistry::find(v);
  if (slot < 0) return {f};
  return split_by(f, slot);
}

// ---------------------------------------------------------------------------
// Degree vectors

DegreeVector add(const DegreeVector& a, const DegreeVector& b) {
  if (a.size() != b.size()) throw Error("degree vectors of different length");
  DegreeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool leq(const DegreeVector& a, const DegreeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int total(const DegreeVector& k) { return std::accumulate(k.begin(), k.end(), 0); }

DegreeVector delta(int n, int times) { return DegreeVector(static_cast<std::size_t>(n), times); }

std::string str(const DegreeVector& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Elements

ShuffleElement ShuffleElement::one(int n) { return {n, DegreeVector(static_cast<std::size_t>(n), 0), LaurentPoly(1)}; }

ShuffleElement ShuffleElement::zero(int n, DegreeVector deg) { return {n, std::move(deg), LaurentPoly()}; }

ShuffleElement ShuffleElement::scaled(const LaurentPoly& c) const { return {n, deg, numerator * c}; }

ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b) {
  require_same_algebra(a, b);
  if (a.deg != b.deg) throw Error("adding elements of degrees " + str(a.deg) + " and " + str(b.deg));
  return {a.n, a.deg, a.numerator + b.numerator};
}

ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b) {
  return a + ShuffleElement{b.n, b.deg, -b.numerator};
}

std::vector<PoleFactor> pole_factors(int n, const DegreeVector& deg) {
  std::vector<PoleFactor> out;
  if (n == 1) {
    for (int j = 1; j <= deg[0]; ++j) {
      for (int j2 = 1; j2 <= deg[0]; ++j2) {
        if (j != j2) out.push_back({VarId::x(0, j), VarId::x(0, j2)});
      }
    }
    return out;
  }
  const int colours = n == 2 ? 1 : n;
  const int mult = n == 2 ? 2 : 1;
  for (int i = 0; i < colours; ++i) {
    const int ip = mod(i + 1, n);
    for (int j = 1; j <= deg[static_cast<std::size_t>(i)]; ++j) {
      for (int j2 = 1; j2 <= deg[static_cast<std::size_t>(ip)]; ++j2) {
        for (int r = 0; r < mult; ++r) out.push_back({VarId::x(i, j), VarId::x(ip, j2)});
      }
    }
  }
  return out;
}

LaurentPoly pole_denominator(int n, const DegreeVector& deg) {
  LaurentPoly p(1);
  for (const auto& f : pole_factors(n, deg)) p = p.times_binomial(Monomial::of(f.a), Rational(1), Monomial::of(f.b));
  return p;
}

int pole_degree(int n, const DegreeVector& deg) { return static_cast<int>(pole_factors(n, deg).size()); }

RatFunc as_ratfunc(const ShuffleElement& f) {
  RatFunc r(f.numerator);
  for (const auto& p : pole_factors(f.n, f.deg)) r.divide_by(LaurentPoly::var(p.a) - LaurentPoly::var(p.b));
  return r;
}

RatFunc omega(const AlgebraConfig& cfg, int i, int j) {
  KernelEntry e = kernel_entry(cfg.n, mod(i, cfg.n), mod(j, cfg.n));
  Monomial z = Monomial::of(VarId::z());
  LaurentPoly num(1);
  for (const auto& kb : e.num) num = num.times_binomial(kb.ma * z, kb.c, kb.mb);
  RatFunc r(num);
  for (int t = 0; t < e.den_power; ++t) r.divide_by(LaurentPoly::var(VarId::z()) - LaurentPoly(1));
  return r;
}

// ---------------------------------------------------------------------------
// Product

namespace kernels {

LaurentPoly antisymmetrized_serial(const ShuffleElement& f, const ShuffleElement& g) {
  StarSetup s = setup(f, g);
  TermAccumulator acc(s.product.size() * 2);
  for (const auto& sh : s.shuffles) add_permuted(acc, s.product, sh);
  return std::move(acc).finish();
}

LaurentPoly antisymmetrized_parallel(const ShuffleElement& f, const ShuffleElement& g) {
#ifdef SHUFFLEFORGE_HAVE_OPENMP
  StarSetup s = setup(f, g);
  const int threads = std::min<int>(omp_get_max_threads(), static_cast<int>(s.shuffles.size()));
  if (threads <= 1) {
    TermAccumulator acc(s.product.size() * 2);
    for (const auto& sh : s.shuffles) add_permuted(acc, s.product, sh);
    return std::move(acc).finish();
  }
  std::vector<TermAccumulator> partial;
  partial.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) partial.emplace_back(s.product.size() * 2);
  const auto count = static_cast<std::int64_t>(s.shuffles.size());
  std::exception_ptr failure;
#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        add_permuted(acc, s.product, s.shuffles[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical(shuffleforge_star_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t t = 1; t < partial.size(); ++t) partial[0].merge(std::move(partial[t]));
  return std::move(partial[0]).finish();
#else
  return antisymmetrized_serial(f, g);
#endif
}

}  // namespace kernels

ShuffleElement star(const ShuffleElement& f, const ShuffleElement& g) {
  require_same_algebra(f, g);
  DegreeVector m = add(f.deg, g.deg);
  if (f.is_zero() || g.is_zero()) return ShuffleElement::zero(f.n, m);
  return {f.n, m, divide_vandermonde(antisymmetrize(f, g), f.n, m)};
}

ShuffleElement commutator(const ShuffleElement& f, const ShuffleElement& g) {
  require_same_algebra(f, g);
  DegreeVector m = add(f.deg, g.deg);
  if (f.is_zero() || g.is_zero()) return ShuffleElement::zero(f.n, m);
  return {f.n, m, divide_vandermonde(antisymmetrize(f, g) - antisymmetrize(g, f), f.n, m)};
}

bool commutes(const ShuffleElement& f, const ShuffleElement& g) {
  require_same_algebra(f, g);
  if (f.is_zero() || g.is_zero()) return true;
  // With mu only in f and nu only in g, [f, g] = sum mu^a nu^b [f_a, g_b].
  if (auto mu = exclusive_param(f, g)) {
    for (const auto& fa : split_by(f, *mu)) {
      if (!commutes(fa, g)) return false;
    }
    return true;
  }
  if (auto nu = exclusive_param(g, f)) {
    for (const auto& gb : split_by(g, *nu)) {
      if (!commutes(f, gb)) return false;
    }
    return true;
  }
  if (auto fast = detail::commutes_compact(f, g)) return *fast;
  return antisymmetrize(f, g) == antisymmetrize(g, f);
}

// ---------------------------------------------------------------------------
// Pole form

ShuffleElement normalize_to_pole_form(const RatFunc& raw, int n, const DegreeVector& deg) {
  if (raw.has_general_den()) throw PoleViolation("denominator factor outside binomial form");
  Rational scalar(1);
  Monomial scalar_mono;
  std::vector<BinomialForm> pole;
  for (const auto& p : pole_factors(n, deg)) {
    auto norm = BinomialForm::make(p.a, p.b);
    scalar *= norm.scalar;
    scalar_mono *= norm.scalar_mono;
    pole.push_back(std::move(norm.form));
  }
  std::vector<BinomialForm> have = raw.den();
  std::sort(pole.begin(), pole.end());
  std::sort(have.begin(), have.end());
  std::vector<BinomialForm> missing;
  std::vector<BinomialForm> surplus;
  std::set_difference(pole.begin(), pole.end(), have.begin(), have.end(), std::back_inserter(missing));
  std::set_difference(have.begin(), have.end(), pole.begin(), pole.end(), std::back_inserter(surplus));

  LaurentPoly num = raw.num().times(scalar_mono, scalar);
  for (const auto& b : missing) num *= b.as_poly();
  for (const auto& b : surplus) {
    try {
      num = exact_divide(num, b);
    } catch (const NotDivisible&) {
      throw PoleViolation("factor " + b.str() + " is not a pole of degree " + str(deg));
    }
  }
  ShuffleElement out{n, deg, std::move(num)};
  if (!is_color_symmetric(out)) throw NotSymmetric("numerator is not colour-symmetric");
  return out;
}

bool is_color_symmetric(const ShuffleElement& f) {
  for (int i = 0; i < f.n; ++i) {
    const int ki = f.deg[static_cast<std::size_t>(i)];
    for (int j = 1; j < ki; ++j) {
      int a = VarRegistry::slot(VarId::x(i, j));
      int b = VarRegistry::slot(VarId::x(i, j + 1));
      std::vector<std::int8_t> perm(static_cast<std::size_t>(VarRegistry::size()));
      std::iota(perm.begin(), perm.end(), std::int8_t{0});
      std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
      if (!(f.numerator.relabel(perm) == f.numerator)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Wheel conditions

WheelReport wheel_check(const ShuffleElement& f) {
  WheelReport r;
  r.convention_dependent = f.n == 2;
  const LaurentPoly u = LaurentPoly::var(VarId::y(0));
  const LaurentPoly q = LaurentPoly::var(VarId::q());
  const LaurentPoly d = LaurentPoly::var(VarId::d());
  auto fail = [&](const Assignment& a, const std::string& name) {
    if (!substitute(f.numerator, a).is_zero()) {
      r.ok = false;
      if (r.failing.empty()) r.failing = name;
    }
  };
  if (f.n == 1) {
    if (f.deg[0] >= 3) {
      fail({{VarId::x(0, 1), q * d * u}, {VarId::x(0, 2), q.pow(-1) * d * u}, {VarId::x(0, 3), u}}, "x1=q1q2u,x2=q2u,x3=u");
    }
    return r;
  }
  for (int i = 0; i < f.n; ++i) {
    for (int eps : {1, -1}) {
      const int ie = mod(i + eps, f.n);
      if (f.deg[static_cast<std::size_t>(i)] < 2 || f.deg[static_cast<std::size_t>(ie)] < 1) continue;
      Assignment a{{VarId::x(i, 1), q.pow(2) * u}, {VarId::x(ie, 1), q * d.pow(-eps) * u}, {VarId::x(i, 2), u}};
      fail(a, "colour " + std::to_string(i) + " with " + std::to_string(ie) + (eps > 0 ? " (+1)" : " (-1)"));
    }
  }
  return r;
}

ShuffleElement monomial_generator(int n, int color, int k) {
  DegreeVector deg(static_cast<std::size_t>(n), 0);
  deg[static_cast<std::size_t>(mod(color, n))] = 1;
  return {n, deg, LaurentPoly::var(VarId::x(mod(color, n), 1), k)};
}

int tot_deg(const ShuffleElement& f) {
  if (f.is_zero()) return 0;
  int deg = f.numerator.terms()[0].mono.variable_degree();
  for (const auto& t : f.numerator.terms()) {
    if (t.mono.variable_degree() != deg) throw Inhomogeneous("numerator is not homogeneous");
  }
  return deg - pole_degree(f.n, f.deg);
}

Json to_json(const ShuffleElement& f) {
  return Json{{"n", f.n}, {"deg", f.deg}, {"numerator", to_json(f.numerator)}};
}

ShuffleElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("deg") || !j.contains("numerator")) {
    throw ParseError("element needs n, deg and numerator");
  }
  ShuffleElement f{j.at("n").get<int>(), j.at("deg").get<DegreeVector>(), poly_from_json(j.at("numerator"))};
  if (f.n < 1 || static_cast<int>(f.deg.size()) != f.n) throw ParseError("degree vector length must equal n");
  return f;
}

}  // namespace shuffleforge
