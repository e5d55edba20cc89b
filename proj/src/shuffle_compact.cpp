#include <algorithm>
#include <array>
#include <cstring>
#include <limits>
#include <numeric>

#include "shuffle_detail.hpp"
#include "shuffleforge/errors.hpp"

namespace shuffleforge::detail {

namespace {

struct Unrepresentable {};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Unrepresentable{};
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Unrepresentable{};
  return r;
}

void check_limit(std::size_t size) {
  const std::size_t lim = term_limit();
  if (lim != 0 && size > lim) throw TermLimitExceeded("expansion exceeded term limit of " + std::to_string(lim));
}

std::int64_t integer_coeff(const Rational& r) {
  if (!r.is_integer()) throw Unrepresentable{};
  mpz_class z = r.to_mpq().get_num();
  if (!z.fits_slong_p()) throw Unrepresentable{};
  return z.get_si();
}

constexpr int kBias = 128;

// Global slot <-> compact index.
class Layout {
 public:
  Layout(const ShuffleElement& f, const ShuffleElement& g) {
    index_.fill(-1);
    const DegreeVector m = add(f.deg, g.deg);
    use(VarRegistry::slot(VarId::q()));
    use(VarRegistry::slot(VarId::d()));
    for (int i = 0; i < f.n; ++i) {
      std::vector<int> idx;
      for (int j = 1; j <= m[static_cast<std::size_t>(i)]; ++j) {
        const int s = VarRegistry::slot(VarId::x(i, j));
        use(s);
        idx.push_back(index(s));
      }
      colours_.push_back(std::move(idx));
    }
    for (const auto* p : {&f.numerator, &g.numerator}) {
      for (const auto& t : p->terms()) {
        if (t.mono.exp(VarId::h()) != 0) throw Unrepresentable{};
        for (int s = 0; s < Monomial::kSlots; ++s) {
          if (t.mono.exp(s) != 0 && VarRegistry::is_param(s)) use(s);
        }
      }
    }
  }

  int index(int slot) const { return index_[static_cast<std::size_t>(slot)]; }
  std::size_t size() const { return slots_.size(); }
  const std::vector<int>& slots() const { return slots_; }
  // Compact indices of x_{i,1..m_i}.
  const std::vector<std::vector<int>>& colours() const { return colours_; }

 private:
  void use(int slot) {
    if (index_[static_cast<std::size_t>(slot)] >= 0) return;
    index_[static_cast<std::size_t>(slot)] = static_cast<int>(slots_.size());
    slots_.push_back(slot);
  }

  std::array<int, Monomial::kSlots> index_{};
  std::vector<int> slots_;
  std::vector<std::vector<int>> colours_;
};

// Exponents stored with a bias so that byte order is numeric order and
// multiplying by a monomial preserves the order of a sorted list.
template <std::size_t W>
struct Kernel {
  using Mono = std::array<std::uint8_t, W>;
  using Poly = std::vector<std::pair<Mono, std::int64_t>>;

  static Mono one() {
    Mono m;
    m.fill(kBias);
    return m;
  }

  static Mono mul(const Mono& a, const Mono& b) {
    Mono r;
    bool ok = true;
    for (std::size_t i = 0; i < W; ++i) {
      const int e = a[i] + b[i] - kBias;
      ok &= e >= 0 && e <= 255;
      r[i] = static_cast<std::uint8_t>(e);
    }
    if (!ok) throw Unrepresentable{};
    return r;
  }

  static std::size_t hash(const Mono& m) {
    std::uint64_t words[W / 8];
    std::memcpy(words, m.data(), W);
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto w : words) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  static Mono compact(const Monomial& m, const Layout& layout) {
    Mono r = one();
    for (int s = 0; s < Monomial::kSlots; ++s) {
      if (m.exp(s) == 0) continue;
      const int i = layout.index(s);
      if (i < 0) throw Unrepresentable{};
      const int e = m.exp(s) + kBias;
      if (e < 0 || e > 255) throw Unrepresentable{};
      r[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }
    return r;
  }

  static Monomial expand(const Mono& m, const Layout& layout) {
    Monomial r;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (m[i] != kBias) r.set(layout.slots()[i], m[i] - kBias);
    }
    return r;
  }

  // Open-addressed map from monomials to checked coefficients.
  class Accumulator {
   public:
    explicit Accumulator(std::size_t expected) {
      expected = std::min<std::size_t>(expected, std::size_t{1} << 22);
      std::size_t cap = 16;
      while (cap < expected * 2) cap <<= 1;
      table_.assign(cap, -1);
      mask_ = cap - 1;
      keys_.reserve(expected);
      vals_.reserve(expected);
    }

    void add(const Mono& m, std::int64_t c) {
      std::size_t h = hash(m) & mask_;
      while (true) {
        const std::int32_t idx = table_[h];
        if (idx < 0) break;
        if (keys_[static_cast<std::size_t>(idx)] == m) {
          auto& v = vals_[static_cast<std::size_t>(idx)];
          v = checked_add(v, c);
          return;
        }
        h = (h + 1) & mask_;
      }
      if (keys_.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) throw Unrepresentable{};
      table_[h] = static_cast<std::int32_t>(keys_.size());
      keys_.push_back(m);
      vals_.push_back(c);
      check_limit(keys_.size());
      if (keys_.size() * 2 > table_.size()) grow();
    }

    bool all_zero() const {
      return std::all_of(vals_.begin(), vals_.end(), [](std::int64_t v) { return v == 0; });
    }

    Poly take() && {
      Poly out;
      out.reserve(keys_.size());
      for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (vals_[i] != 0) out.emplace_back(keys_[i], vals_[i]);
      }
      return out;
    }

   private:
    void grow() {
      const std::size_t cap = table_.size() * 2;
      table_.assign(cap, -1);
      mask_ = cap - 1;
      for (std::size_t i = 0; i < keys_.size(); ++i) {
        std::size_t h = hash(keys_[i]) & mask_;
        while (table_[h] >= 0) h = (h + 1) & mask_;
        table_[h] = static_cast<std::int32_t>(i);
      }
    }

    std::vector<Mono> keys_;
    std::vector<std::int64_t> vals_;
    std::vector<std::int32_t> table_;
    std::size_t mask_ = 0;
  };

  // Sorts by monomial and merges equal monomials, dropping zeros.
  static Poly canonical(Poly p) {
    std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Poly out;
    out.reserve(p.size());
    for (auto& t : p) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = checked_add(out.back().second, t.second);
        if (out.back().second == 0) out.pop_back();
      } else if (t.second != 0) {
        out.push_back(t);
      }
    }
    return out;
  }

  static Poly from(const LaurentPoly& p, const Layout& layout) {
    Poly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.emplace_back(compact(t.mono, layout), integer_coeff(t.coeff));
    return canonical(std::move(out));
  }

  static Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    out.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) out.emplace_back(mul(ma, mb), checked_mul(ca, cb));
    }
    return canonical(std::move(out));
  }

  // p * (ma - c*mb) for sorted p: the two shifted copies merge in one pass.
  static Poly times_binomial(const Poly& p, const Mono& ma, std::int64_t c, const Mono& mb) {
    Poly out;
    out.reserve(p.size() * 2);
    std::size_t i = 0;
    std::size_t j = 0;
    Mono ka{};
    Mono kb{};
    if (!p.empty()) {
      ka = mul(p[0].first, ma);
      kb = mul(p[0].first, mb);
    }
    while (i < p.size() || j < p.size()) {
      const bool both = i < p.size() && j < p.size() && ka == kb;
      const bool take_a = !both && (j == p.size() || (i < p.size() && ka < kb));
      if (both) {
        const std::int64_t v = checked_add(p[i].second, checked_mul(-c, p[j].second));
        if (v != 0) out.emplace_back(ka, v);
      } else if (take_a) {
        out.emplace_back(ka, p[i].second);
      } else {
        out.emplace_back(kb, checked_mul(-c, p[j].second));
      }
      if ((both || take_a) && ++i < p.size()) ka = mul(p[i].first, ma);
      if ((both || !take_a) && ++j < p.size()) kb = mul(p[j].first, mb);
    }
    check_limit(out.size());
    return out;
  }

  struct Setup {
    Poly product;
    std::vector<Shuffle> perms;  // compact indices
  };

  // P * V_F * V_G for the unpermuted arrangement, as in the generic kernel.
  // With staircase set, the block Vandermondes are replaced by their leading
  // monomials.
  static Setup setup(const ShuffleElement& f, const ShuffleElement& g, const Layout& layout, bool staircase = false) {
    const int n = f.n;
    const DegreeVector& k = f.deg;
    const DegreeVector& l = g.deg;
    const DegreeVector m = add(k, l);

    std::vector<Shuffle> global = shuffles(n, k, m);
    std::vector<std::int8_t> shift(static_cast<std::size_t>(VarRegistry::size()));
    std::iota(shift.begin(), shift.end(), std::int8_t{0});
    for (int i = 0; i < n; ++i) {
      for (int j = l[static_cast<std::size_t>(i)]; j >= 1; --j) {
        shift[static_cast<std::size_t>(VarRegistry::slot(VarId::x(i, j)))] =
            static_cast<std::int8_t>(VarRegistry::slot(VarId::x(i, k[static_cast<std::size_t>(i)] + j)));
      }
    }

    Poly p = mul(from(f.numerator, layout), from(g.numerator.relabel(shift), layout));
    if (product_sign(n, k, l) < 0) {
      for (auto& t : p) t.second = -t.second;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 1; j <= k[static_cast<std::size_t>(i)]; ++j) {
        const Monomial a = Monomial::of(VarId::x(i, j));
        for (int i2 = 0; i2 < n; ++i2) {
          KernelEntry e = kernel_entry(n, i, i2);
          for (int j2 = 1; j2 <= l[static_cast<std::size_t>(i2)]; ++j2) {
            const Monomial b = Monomial::of(VarId::x(i2, k[static_cast<std::size_t>(i2)] + j2));
            for (const auto& kb : e.num) {
              p = times_binomial(p, compact(kb.ma * a, layout), integer_coeff(kb.c), compact(kb.mb * b, layout));
            }
          }
        }
      }
    }
    if (staircase) {
      Monomial rho;
      for (int i = 0; i < n; ++i) {
        const int ki = k[static_cast<std::size_t>(i)];
        const int li = l[static_cast<std::size_t>(i)];
        for (int j = 1; j <= ki; ++j) rho.set(VarId::x(i, j), ki - j);
        for (int j = 1; j <= li; ++j) rho.set(VarId::x(i, ki + j), li - j);
      }
      const Mono r = compact(rho, layout);
      for (auto& t : p) t.first = mul(t.first, r);
    } else {
      for (int i = 0; i < n; ++i) {
        const int ki = k[static_cast<std::size_t>(i)];
        const int mi = m[static_cast<std::size_t>(i)];
        for (int j = 1; j <= mi; ++j) {
          for (int j2 = j + 1; j2 <= mi; ++j2) {
            if ((j <= ki) != (j2 <= ki)) continue;
            p = times_binomial(p, compact(Monomial::of(VarId::x(i, j)), layout), 1,
                               compact(Monomial::of(VarId::x(i, j2)), layout));
          }
        }
      }
    }

    Setup s;
    s.product = std::move(p);
    for (const auto& sh : global) {
      Shuffle c;
      c.sign = sh.sign;
      c.perm.resize(layout.size());
      for (std::size_t ci = 0; ci < layout.size(); ++ci) {
        const int target = layout.index(sh.perm[static_cast<std::size_t>(layout.slots()[ci])]);
        if (target < 0) throw Unrepresentable{};
        c.perm[ci] = static_cast<std::int8_t>(target);
      }
      s.perms.push_back(std::move(c));
    }
    return s;
  }

  static LaurentPoly antisymmetrized(const ShuffleElement& f, const ShuffleElement& g, const Layout& layout) {
    Setup s = setup(f, g, layout);
    Accumulator acc(s.product.size() * 2);
    for (const auto& sh : s.perms) {
      for (const auto& [m, v] : s.product) {
        Mono r = one();
        for (std::size_t i = 0; i < sh.perm.size(); ++i) r[static_cast<std::size_t>(sh.perm[i])] = m[i];
        acc.add(r, sh.sign * v);
      }
    }
    std::vector<Term> terms;
    for (const auto& [m, v] : std::move(acc).take()) {
      terms.push_back({expand(m, layout), Rational(static_cast<long long>(v))});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

  // P is antisymmetric within each block, so its full antisymmetrization is
  // a fixed multiple of the shuffle sum.  An antisymmetric polynomial is
  // determined by its coefficients on monomials with strictly decreasing
  // exponents in each colour, and each term of P sorts onto exactly one.
  static void accumulate_sorted(Accumulator& acc, const Poly& product, const Layout& layout, int sign) {
    for (const auto& [m, v] : product) {
      Mono r = m;
      int parity = 0;
      bool repeated = false;
      for (const auto& idx : layout.colours()) {
        for (std::size_t a = 1; a < idx.size() && !repeated; ++a) {
          for (std::size_t b = a; b > 0; --b) {
            auto& hi = r[static_cast<std::size_t>(idx[b - 1])];
            auto& lo = r[static_cast<std::size_t>(idx[b])];
            if (hi > lo) break;
            if (hi == lo) {
              repeated = true;
              break;
            }
            std::swap(hi, lo);
            ++parity;
          }
        }
        if (repeated) break;
      }
      if (!repeated) acc.add(r, parity % 2 ? -sign * v : sign * v);
    }
  }

  // For symmetric f and g, P = S * V_F * V_G with S symmetric in each block,
  // and antisymmetrizing S * V_F * V_G or S times the staircase monomial
  // differs by the factor prod k_i! l_i!, the same for both orders.
  static bool commutes(const ShuffleElement& f, const ShuffleElement& g, const Layout& layout) {
    const bool staircase = is_color_symmetric(f) && is_color_symmetric(g);
    Accumulator acc(1024);
    accumulate_sorted(acc, setup(f, g, layout, staircase).product, layout, 1);
    accumulate_sorted(acc, setup(g, f, layout, staircase).product, layout, -1);
    return acc.all_zero();
  }
};

}  // namespace

std::optional<LaurentPoly> antisymmetrized_compact(const ShuffleElement& f, const ShuffleElement& g) {
  try {
    Layout layout(f, g);
    if (layout.size() <= 16) return Kernel<16>::antisymmetrized(f, g, layout);
    if (layout.size() <= 32) return Kernel<32>::antisymmetrized(f, g, layout);
  } catch (const Unrepresentable&) {
  }
  return std::nullopt;
}

std::optional<bool> commutes_compact(const ShuffleElement& f, const ShuffleElement& g) {
  try {
    Layout layout(f, g);
    if (layout.size() <= 16) return Kernel<16>::commutes(f, g, layout);
    if (layout.size() <= 32) return Kernel<32>::commutes(f, g, layout);
  } catch (const Unrepresentable&) {
  }
  return std::nullopt;
}

}  // namespace shuffleforge::detail
