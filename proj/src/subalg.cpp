#include "shuffleforge/subalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "shuffleforge/errors.hpp"
#include "shuffleforge/limits.hpp"

namespace shuffleforge {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

LaurentPoly Q(int e) { return LaurentPoly::var(VarId::q(), e); }

// prod_i prod_{j != j'} (x_{i,j} - q^{-2} x_{i,j'})
LaurentPoly wheel_factor(int n, int k) {
  LaurentPoly p(1);
  Monomial qm2 = Monomial::of(VarId::q(), -2);
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k; ++j) {
      for (int j2 = 1; j2 <= k; ++j2) {
        if (j != j2) p = p.times_binomial(Monomial::of(VarId::x(i, j)), Rational(1), qm2 * Monomial::of(VarId::x(i, j2)));
      }
    }
  }
  return p;
}

Monomial colour_product(int i, int k) {
  Monomial m;
  for (int j = 1; j <= k; ++j) m *= Monomial::of(VarId::x(i, j));
  return m;
}

Monomial s_prefix(int n, int i) {
  Monomial m;
  for (int t = 0; t <= i; ++t) m *= s_monomial(n, t);
  return m;
}

void require_n(int n, bool ok, const std::string& what) {
  if (!ok) throw Error(what + " is not defined for n = " + std::to_string(n));
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

// Noncommutative polynomial in letters (indices into a list of elements).
using Word = std::vector<int>;
using NCExpr = std::map<Word, LaurentPoly>;

NCExpr letter(int i) { return {{Word{i}, LaurentPoly(1)}}; }

NCExpr nc_mul(const NCExpr& a, const NCExpr& b) {
  NCExpr out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

NCExpr nc_add(NCExpr a, const NCExpr& b, const LaurentPoly& scale = LaurentPoly(1)) {
  for (const auto& [w, c] : b) a[w] += c * scale;
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  return a;
}

// [a, b]_x = ab - x ba
NCExpr bracket(const NCExpr& a, const NCExpr& b, const LaurentPoly& x) {
  return nc_add(nc_mul(a, b), nc_mul(b, a), -x);
}

ShuffleElement realize(const NCExpr& e, const std::vector<ShuffleElement>& letters) {
  std::map<Word, ShuffleElement> memo;
  std::function<const ShuffleElement&(const Word&)> product = [&](const Word& w) -> const ShuffleElement& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    ShuffleElement r = letters[static_cast<std::size_t>(w[0])];
    if (w.size() > 1) r = star(product(Word(w.begin(), w.end() - 1)), letters[static_cast<std::size_t>(w.back())]);
    return memo.emplace(w, std::move(r)).first->second;
  };
  std::optional<ShuffleElement> sum;
  for (const auto& [w, c] : e) {
    ShuffleElement term = product(w).scaled(c);
    sum = sum ? *sum + term : term;
  }
  if (!sum) throw Error("empty relation");
  return *sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators

ShuffleElement gen_F_k_mu(int n, int k, const VarId& mu) {
  if (k < 1) throw Error("F_k^mu needs k >= 1");
  LaurentPoly num = wheel_factor(n, k);
  LaurentPoly m = LaurentPoly::var(mu);
  for (int i = 0; i < n; ++i) {
    num *= LaurentPoly(s_prefix(n, i) * colour_product(i, k)) - m * LaurentPoly(colour_product(mod(i + 1, n), k));
  }
  return {n, delta(n, k), num};
}

ShuffleElement gen_F_k(int n, int k) {
  require_n(n, n >= 3, "F_k");
  if (k == 0) return ShuffleElement::one(n);
  LaurentPoly num(1);
  Monomial qm1 = Monomial::of(VarId::q(), -1);
  Monomial q1 = Monomial::of(VarId::q(), 1);
  Monomial all;
  for (int i = 0; i < n; ++i) {
    all *= colour_product(i, k);
    for (int j = 1; j <= k; ++j) {
      for (int j2 = 1; j2 <= k; ++j2) {
        if (j != j2) num = num.times_binomial(qm1 * Monomial::of(VarId::x(i, j)), Rational(1), q1 * Monomial::of(VarId::x(i, j2)));
      }
    }
  }
  num = num.times(all, (n * k * k) % 2 ? Rational(-1) : Rational(1));
  return {n, delta(n, k), num};
}

LaurentPoly F_k_ratio(int n, int k) {
  Monomial m = Monomial::of(VarId::q(), (k - 1) * n * k);
  for (int i = 0; i < n; ++i) m *= s_monomial(n, i).pow(-(n - i));
  return LaurentPoly(m, (n * k) % 2 ? Rational(-1) : Rational(1));
}

ShuffleElement gen_L_k(int n, int k) {
  if (k < 1) throw Error("L_k needs k >= 1");
  std::map<int, ShuffleElement> F;
  for (int t = 1; t <= k; ++t) F.emplace(t, gen_F_k(n, t));
  ShuffleElement total = ShuffleElement::zero(n, delta(n, k));
  // compositions of k; (-1)^{r+1}/r per composition with r parts
  std::function<void(int, int, const ShuffleElement&)> rec = [&](int left, int parts, const ShuffleElement& acc) {
    if (left == 0) {
      Rational c(parts % 2 ? 1 : -1, parts);
      total = total + acc.scaled(LaurentPoly(c));
      return;
    }
    for (int t = 1; t <= left; ++t) rec(left - t, parts + 1, parts == 0 ? F.at(t) : star(acc, F.at(t)));
  };
  rec(k, 0, ShuffleElement::one(n));
  return total;
}

ShuffleElement gen_K_m(int m) {
  if (m < 1) throw Error("K_m needs m >= 1");
  LaurentPoly num(1);
  Monomial q2 = Monomial::of(VarId::q(), 2);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      Monomial xi = Monomial::of(VarId::x(0, i));
      Monomial xj = Monomial::of(VarId::x(0, j));
      num = num.times_binomial(xi, Rational(1), q2 * xj).times_binomial(xj, Rational(1), q2 * xi);
    }
  }
  if ((m * (m - 1) / 2) % 2) num = -num;
  return {1, {m}, num};
}

ShuffleElement gen_Gamma0(int n, int p, int N) {
  require_n(n, n != 2, "Gamma0");
  if (N < 0 || p < 0 || p >= n) throw Error("Gamma0 needs 0 <= p < n and N >= 0");
  if (N == 0) return ShuffleElement::one(n);
  if (n == 1) {
    LaurentPoly num = wheel_factor(1, N).times(Monomial::of(VarId::q(), N * (N - 1)));
    if ((N * (N - 1) / 2) % 2) num = -num;
    return {1, {N}, num};
  }
  LaurentPoly scalar = (LaurentPoly(1) - Q(-2)).pow(n * N);
  Monomial front = Monomial::of(VarId::q(), n * N * N) * Monomial::of(VarId::h(), -n * N * N);
  for (int i = 0; i < n; ++i) front *= colour_product(i, N);
  front *= colour_product(0, N) * colour_product(p, N).inverse();
  LaurentPoly num = (scalar * wheel_factor(n, N)).times(front, (N * N) % 2 ? Rational(-1) : Rational(1));
  return {n, delta(n, N), num};
}

// ---------------------------------------------------------------------------
// Specs

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  auto body = [&](const std::string& prefix) -> std::optional<std::string> {
    if (text.size() < prefix.size() + 1 || text.compare(0, prefix.size(), prefix) != 0 || text.back() != ')') {
      return std::nullopt;
    }
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  auto ints = [](const std::string& s, std::size_t count, const std::string& what) {
    std::vector<int> v;
    for (const auto& part : split(s, ',')) v.push_back(parse_int(part));
    if (v.size() != count) throw ParseError(what + " takes " + std::to_string(count) + " indices");
    return v;
  };
  GeneratorSpec g;
  if (auto b = body("Gamma0(")) {
    g.family = Family::Gamma0;
    g.indices = ints(*b, 2, "Gamma0");
  } else if (auto b2 = body("Fk(")) {
    g.family = Family::Fk;
    g.indices = ints(*b2, 1, "Fk");
  } else if (auto b3 = body("Lk(")) {
    g.family = Family::Lk;
    g.indices = ints(*b3, 1, "Lk");
  } else if (auto b4 = body("F(")) {
    auto parts = split(*b4, ';');
    if (parts.size() != 2) throw ParseError("F takes the form F(k;mu)");
    g.family = Family::Fmu;
    g.indices = ints(parts[0], 1, "F");
    VarId v = VarId::parse(parts[1]);
    if (!v.is_param()) throw ParseError("F needs a parameter symbol");
    g.param = v.str();
  } else if (auto b5 = body("K(")) {
    g.family = Family::Km;
    g.indices = ints(*b5, 1, "K");
  } else if (auto b6 = body("e(")) {
    g.family = Family::Monomial;
    g.indices = ints(*b6, 2, "e");
  } else {
    throw ParseError("unknown generator '" + text + "'");
  }
  return g;
}

std::string GeneratorSpec::str() const {
  auto join = [&] {
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s;
  };
  switch (family) {
    case Family::Monomial:
      return "e(" + join() + ")";
    case Family::Fmu:
      return "F(" + join() + ";" + param + ")";
    case Family::Fk:
      return "Fk(" + join() + ")";
    case Family::Lk:
      return "Lk(" + join() + ")";
    case Family::Km:
      return "K(" + join() + ")";
    case Family::Gamma0:
      return "Gamma0(" + join() + ")";
  }
  return "";
}

ShuffleElement GeneratorSpec::build(int n) const {
  switch (family) {
    case Family::Monomial:
      return monomial_generator(n, indices[0], indices[1]);
    case Family::Fmu:
      return gen_F_k_mu(n, indices[0], VarId::parse(param));
    case Family::Fk:
      return gen_F_k(n, indices[0]);
    case Family::Lk:
      return gen_L_k(n, indices[0]);
    case Family::Km:
      require_n(n, n == 1, "K_m");
      return gen_K_m(indices[0]);
    case Family::Gamma0:
      return gen_Gamma0(n, indices[0], indices[1]);
  }
  throw Error("unknown family");
}

// ---------------------------------------------------------------------------
// Bases and ranks

std::string BasisEntry::str(const std::vector<VarId>& mus) const {
  std::string s;
  for (const auto& [k, i] : factors) {
    if (!s.empty()) s += "*";
    s += "F(" + std::to_string(k) + ";" + mus[static_cast<std::size_t>(i)].str() + ")";
  }
  return s;
}

std::vector<BasisEntry> product_shapes(int n_symbols, int k) {
  std::vector<std::pair<int, int>> letters;
  for (int part = k; part >= 1; --part) {
    for (int i = 0; i < n_symbols; ++i) letters.emplace_back(part, i);
  }
  std::vector<BasisEntry> out;
  BasisEntry cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t t = from; t < letters.size(); ++t) {
      if (letters[t].first > left) continue;
      cur.factors.push_back(letters[t]);
      rec(t, left - letters[t].first);
      cur.factors.pop_back();
    }
  };
  rec(0, k);
  return out;
}

std::vector<ShuffleElement> product_basis(int n, int k, const std::vector<VarId>& mus) {
  std::vector<ShuffleElement> out;
  std::map<std::pair<int, int>, ShuffleElement> gens;
  auto gen = [&](std::pair<int, int> f) -> const ShuffleElement& {
    auto it = gens.find(f);
    if (it == gens.end()) it = gens.emplace(f, gen_F_k_mu(n, f.first, mus[static_cast<std::size_t>(f.second)])).first;
    return it->second;
  };
  for (const auto& shape : product_shapes(static_cast<int>(mus.size()), k)) {
    ShuffleElement e = gen(shape.factors[0]);
    for (std::size_t t = 1; t < shape.factors.size(); ++t) e = star(e, gen(shape.factors[t]));
    out.push_back(std::move(e));
  }
  return out;
}

mpz_class dim_R(int n, int k) {
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= k; ++m) {
    for (int r = 0; r < n; ++r) {
      for (int j = m; j <= k; ++j) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - m)];
    }
  }
  return c[static_cast<std::size_t>(k)];
}

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t t = c; t < cols; ++t) rows[r][t] -= f * rows[rank][t];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of_span(const SpanProbe& probe) {
  if (probe.elements.empty()) return 0;
  std::vector<RatFunc> fs;
  std::set<VarId> params;
  std::set<VarId> xs;
  for (const auto& e : probe.elements) {
    fs.push_back(as_ratfunc(e));
    for (const auto& v : variables(fs.back())) (v.is_param() ? params : xs).insert(v);
  }
  std::uint64_t state = probe.seed;
  Point fixed = random_point(std::vector<VarId>(params.begin(), params.end()), state, 1000);
  const std::size_t points = probe.elements.size() + static_cast<std::size_t>(std::max(0, probe.extra_points));
  std::vector<std::vector<Rational>> rows(fs.size());
  for (std::size_t p = 0; p < points; ++p) {
    for (int attempt = 0;; ++attempt) {
      Point pt = random_point(std::vector<VarId>(xs.begin(), xs.end()), state, 1000);
      pt.insert(fixed.begin(), fixed.end());
      try {
        std::vector<Rational> col;
        for (const auto& f : fs) col.push_back(evaluate(f, pt));
        for (std::size_t r = 0; r < fs.size(); ++r) rows[r].push_back(col[r]);
        break;
      } catch (const DivisionByZero&) {
        if (attempt >= 32) throw;
      }
    }
  }
  return exact_rank(std::move(rows));
}

// ---------------------------------------------------------------------------
// Relations

bool kernel_reflection_holds(int n, int i, int j) {
  require_n(n, n >= 3, "kernel reflection");
  i = mod(i, n);
  j = mod(j, n);
  int a = 0;
  int m = 0;
  if (i == j) {
    a = 2;
  } else if (j == mod(i + 1, n)) {
    a = -1;
    m = -1;
  } else if (j == mod(i - 1, n)) {
    a = -1;
    m = 1;
  }
  LaurentPoly z = LaurentPoly::var(VarId::z());
  LaurentPoly dz = z * LaurentPoly::var(VarId::d(), m);
  RatFunc g = a == 0 ? RatFunc(LaurentPoly(1)) : RatFunc(Q(a) * dz - LaurentPoly(1));
  if (a != 0) g.divide_by(dz - Q(a));
  RatFunc back = substitute(omega(AlgebraConfig{n}, j, i), {{VarId::z(), z.pow(-1)}});
  return cross_multiply_equal(omega(AlgebraConfig{n}, i, j), g * back);
}

ShuffleElement serre_cubic(int n, int i, int j, int k1, int k2, int l) {
  std::vector<ShuffleElement> letters{monomial_generator(n, i, k1), monomial_generator(n, i, k2), monomial_generator(n, j, l)};
  NCExpr total;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}}) {
    NCExpr inner = bracket(letter(b), letter(2), Q(1));
    total = nc_add(total, bracket(letter(a), inner, Q(-1)));
  }
  return realize(total, letters);
}

ShuffleElement serre_quartic(int i, int k1, int k2, int k3, int l) {
  std::vector<ShuffleElement> letters{monomial_generator(2, i, k1), monomial_generator(2, i, k2),
                                      monomial_generator(2, i, k3), monomial_generator(2, i + 1, l)};
  NCExpr total;
  std::vector<int> order{0, 1, 2};
  do {
    NCExpr x = bracket(letter(order[2]), letter(3), Q(2));
    NCExpr y = bracket(letter(order[1]), x, LaurentPoly(1));
    total = nc_add(total, bracket(letter(order[0]), y, Q(-2)));
  } while (std::next_permutation(order.begin(), order.end()));
  return realize(total, letters);
}

}  // namespace shuffleforge
