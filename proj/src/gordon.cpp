#include "shuffleforge/gordon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "shuffleforge/errors.hpp"

namespace shuffleforge {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int length(const Interval& i) { return i.b - i.a + 1; }

bool interval_before(const Interval& x, const Interval& y) {
  if (length(x) != length(y)) return length(x) > length(y);
  return x.a < y.a;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad integer in " + context);
    return v;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad integer in " + context);
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range in " + context);
  }
}

// (qd)^{-c}
LaurentPoly qd_power(int c) { return LaurentPoly(Monomial{{VarId::q(), -c}, {VarId::d(), -c}}); }

LaurentPoly y(int t) { return LaurentPoly::var(VarId::y(t)); }

void enumerate(int n, DegreeVector& rest, std::vector<Interval>& cur, std::vector<PartitionL>& out) {
  if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
    out.push_back({cur});
    return;
  }
  const int left = total(rest);
  for (int len = left; len >= 1; --len) {
    for (int a = 0; a < n; ++a) {
      Interval iv{a, a + len - 1};
      if (!cur.empty() && interval_before(iv, cur.back())) continue;
      DegreeVector l = interval_degree_vector(n, iv.a, iv.b);
      if (!leq(l, rest)) continue;
      for (int i = 0; i < n; ++i) rest[static_cast<std::size_t>(i)] -= l[static_cast<std::size_t>(i)];
      cur.push_back(iv);
      enumerate(n, rest, cur, out);
      cur.pop_back();
      for (int i = 0; i < n; ++i) rest[static_cast<std::size_t>(i)] += l[static_cast<std::size_t>(i)];
    }
  }
}

// Splits p by its non-parameter monomial.
std::map<Monomial, LaurentPoly> by_variable_monomial(const LaurentPoly& p) {
  std::map<Monomial, std::vector<Term>> parts;
  for (const auto& t : p.terms()) {
    Monomial vars;
    Monomial params;
    for (int s = 0; s < Monomial::kSlots; ++s) {
      if (t.mono.exp(s) == 0) continue;
      (VarRegistry::is_param(s) ? params : vars).set(s, t.mono.exp(s));
    }
    parts[vars].push_back({params, t.coeff});
  }
  std::map<Monomial, LaurentPoly> out;
  for (auto& [m, ts] : parts) out[m] = LaurentPoly::from_terms(std::move(ts));
  return out;
}

// Expansion along rows, memoized over column subsets.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t r = m.size();
  if (r == 0) return LaurentPoly(1);
  if (r > 20) throw Error("determinant too large");
  std::vector<LaurentPoly> f(std::size_t{1} << r);
  f[0] = LaurentPoly(1);
  for (std::size_t set = 1; set < f.size(); ++set) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(set)) - 1;
    LaurentPoly sum;
    int position = 0;
    for (std::size_t c = 0; c < r; ++c) {
      if (!(set >> c & 1)) continue;
      const std::size_t rest = set & ~(std::size_t{1} << c);
      if (!m[row][c].is_zero() && !f[rest].is_zero()) {
        LaurentPoly term = m[row][c] * f[rest];
        sum = ((row + static_cast<std::size_t>(position)) % 2 == 0) ? sum + term : sum - term;
      }
      ++position;
    }
    f[set] = std::move(sum);
  }
  return f.back();
}

struct Pivots {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

Pivots numeric_pivots(std::vector<std::vector<Rational>> a) {
  Pivots p;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> order(rows);
  for (std::size_t i = 0; i < rows; ++i) order[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(order[piv], order[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    p.rows.push_back(order[r]);
    p.cols.push_back(c);
    ++r;
  }
  return p;
}

}  // namespace

PartitionL PartitionL::parse(const std::string& text) {
  PartitionL L;
  for (const auto& part : split(text, ';')) {
    auto ends = split(part, '-');
    // "-1-2" style negative left ends
    if (ends.size() == 3 && ends[0].empty()) ends = {"-" + ends[1], ends[2]};
    if (ends.size() != 2) throw ParseError("bad interval '" + part + "'");
    Interval iv{parse_int(ends[0], part), parse_int(ends[1], part)};
    if (iv.a > iv.b) throw ParseError("empty interval '" + part + "'");
    L.intervals.push_back(iv);
  }
  std::stable_sort(L.intervals.begin(), L.intervals.end(), interval_before);
  return L;
}

std::string PartitionL::str() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < intervals.size(); ++t) {
    if (t) os << ';';
    os << intervals[t].a << '-' << intervals[t].b;
  }
  return os.str();
}

DegreeVector PartitionL::degree(int n) const {
  DegreeVector k(static_cast<std::size_t>(n), 0);
  for (const auto& iv : intervals) k = add(k, interval_degree_vector(n, iv.a, iv.b));
  return k;
}

PartitionL PartitionL::canonical(int n) const {
  PartitionL c = *this;
  for (auto& iv : c.intervals) {
    int shift = iv.a - mod(iv.a, n);
    iv.a -= shift;
    iv.b -= shift;
  }
  std::stable_sort(c.intervals.begin(), c.intervals.end(), interval_before);
  return c;
}

bool PartitionL::equivalent(const PartitionL& o, int n) const { return canonical(n) == o.canonical(n); }

bool PartitionL::greater_than(const PartitionL& o) const {
  const std::size_t r = std::min(intervals.size(), o.intervals.size());
  for (std::size_t s = 0; s < r; ++s) {
    int mine = length(intervals[s]);
    int theirs = length(o.intervals[s]);
    if (mine != theirs) return mine > theirs;
  }
  return false;
}

bool PartitionL::operator==(const PartitionL& o) const {
  if (intervals.size() != o.intervals.size()) return false;
  for (std::size_t t = 0; t < intervals.size(); ++t) {
    if (intervals[t].a != o.intervals[t].a || intervals[t].b != o.intervals[t].b) return false;
  }
  return true;
}

std::vector<PartitionL> enumerate_partitions(int n, const DegreeVector& k) {
  if (static_cast<int>(k.size()) != n) throw Error("degree vector " + str(k) + " has wrong length");
  std::vector<PartitionL> out;
  DegreeVector rest = k;
  std::vector<Interval> cur;
  enumerate(n, rest, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const PartitionL& a, const PartitionL& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.intervals.begin(), a.intervals.end(), b.intervals.begin(), b.intervals.end(),
                                        interval_before);
  });
  return out;
}

LaurentPoly phi_L(const ShuffleElement& f, const PartitionL& L) {
  if (L.degree(f.n) != f.deg) throw Error("partition " + L.str() + " does not match degree " + str(f.deg));
  std::vector<int> next(static_cast<std::size_t>(f.n), 0);
  Assignment a;
  for (int t = 0; t < L.size(); ++t) {
    const Interval& iv = L.intervals[static_cast<std::size_t>(t)];
    for (int c = iv.a; c <= iv.b; ++c) {
      int colour = mod(c, f.n);
      int j = ++next[static_cast<std::size_t>(colour)];
      a[VarId::x(colour, j)] = qd_power(c) * y(t + 1);
    }
  }
  return substitute(f.numerator, a);
}

std::vector<LinearFactor> Q_L_factors(int n, const PartitionL& L) {
  std::vector<LinearFactor> out;
  const LaurentPoly q_over_d(Monomial{{VarId::q(), 1}, {VarId::d(), -1}});
  const LaurentPoly d_over_q(Monomial{{VarId::q(), -1}, {VarId::d(), 1}});
  for (int u = 0; u < L.size(); ++u) {
    const Interval& iu = L.intervals[static_cast<std::size_t>(u)];
    for (int v = u + 1; v < L.size(); ++v) {
      const Interval& iv = L.intervals[static_cast<std::size_t>(v)];
      auto add_factor = [&](const char* item, const LaurentPoly& left, int xp) {
        out.push_back({u + 1, v + 1, item, left * y(u + 1) - qd_power(xp) * y(v + 1)});
      };
      for (int x = iu.a; x <= iu.b; ++x) {
        for (int xp = iv.a; xp <= iv.b; ++xp) {
          if (x < iu.b && mod(xp - x - 1, n) == 0) add_factor("i", q_over_d * qd_power(x), xp);
          if (x > iu.a && mod(xp - x + 1, n) == 0) add_factor("ii", d_over_q * qd_power(x), xp);
        }
      }
      for (int xp = iv.a; xp <= iv.b; ++xp) {
        if (mod(xp - iu.b - 1, n) == 0) add_factor("iii", qd_power(iu.b + 1), xp);
        if (mod(xp - iu.a + 1, n) == 0) add_factor("iv", qd_power(iu.a - 1), xp);
      }
    }
  }
  return out;
}

LaurentPoly Q_L(int n, const PartitionL& L) {
  LaurentPoly p(1);
  for (const auto& f : Q_L_factors(n, L)) p *= f.form;
  return p;
}

LaurentPoly divide_by_Q_L(const LaurentPoly& p, int n, const PartitionL& L) {
  LaurentPoly rest = p;
  for (const auto& f : Q_L_factors(n, L)) {
    FactorShape shape = classify_factor(f.form);
    if (!shape.form) throw Error("Q_L factor is not a binomial");
    rest = exact_divide(rest, *shape.form) * shape.monomial.pow(-1);
  }
  return rest;
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  YoungDiagram l;
  for (const auto& part : split(text, ',')) {
    int v = parse_int(part, text);
    if (v <= 0) throw ParseError("rows must be positive in '" + text + "'");
    if (!l.rows.empty() && v > l.rows.back()) throw ParseError("rows must be weakly decreasing in '" + text + "'");
    l.rows.push_back(v);
  }
  return l;
}

std::string YoungDiagram::str() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < rows.size(); ++t) os << (t ? "," : "") << rows[t];
  return os.str();
}

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

YoungDiagram YoungDiagram::transpose() const {
  YoungDiagram t;
  for (int c = 1; !rows.empty() && c <= rows.front(); ++c) {
    int h = 0;
    for (int r : rows) h += (r >= c) ? 1 : 0;
    t.rows.push_back(h);
  }
  return t;
}

RatFunc phi_lambda(const ShuffleElement& f, const YoungDiagram& lambda) {
  if (f.deg != delta(f.n, lambda.size())) throw Error("phi_lambda needs degree " + str(delta(f.n, lambda.size())));
  Assignment a;
  for (int i = 0; i < f.n; ++i) {
    int offset = 0;
    for (std::size_t t = 0; t < lambda.rows.size(); ++t) {
      for (int j = 1; j <= lambda.rows[t]; ++j) {
        a[VarId::x(i, offset + j)] =
            LaurentPoly::var(VarId::q(), 2 * j) * LaurentPoly::var(VarId::y2(i, static_cast<int>(t) + 1));
      }
      offset += lambda.rows[t];
    }
  }
  try {
    return substitute(as_ratfunc(f), a);
  } catch (const DenominatorVanishes&) {
  }
  LaurentPoly num = f.numerator;
  RatFunc out;
  std::vector<LaurentPoly> kept;
  for (const auto& p : pole_factors(f.n, f.deg)) {
    LaurentPoly factor = LaurentPoly::var(p.a) - LaurentPoly::var(p.b);
    LaurentPoly image = substitute(factor, a);
    if (!image.is_zero()) {
      kept.push_back(image);
      continue;
    }
    FactorShape shape = classify_factor(factor);
    try {
      num = exact_divide(num, *shape.form) * shape.monomial.pow(-1);
    } catch (const NotDivisible&) {
      throw DenominatorVanishes("pole factor " + factor.str() + " vanishes and does not divide the numerator");
    }
  }
  out = RatFunc(substitute(num, a));
  for (const auto& k : kept) out.divide_by(k);
  return out;
}

std::vector<ShuffleElement> colour_order_products(int n, const std::vector<int>& modes) {
  if (static_cast<int>(modes.size()) != n) throw Error("need one mode per colour");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<ShuffleElement> out;
  do {
    ShuffleElement p = ShuffleElement::one(n);
    for (int c : order) p = star(p, monomial_generator(n, c, modes[static_cast<std::size_t>(c)]));
    out.push_back(std::move(p));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<ShuffleElement> filtered_combinations(const std::vector<ShuffleElement>& pool, const PartitionL& L,
                                                  std::uint64_t seed) {
  if (pool.empty()) return {};
  const int n = pool.front().n;
  const DegreeVector k = pool.front().deg;
  for (const auto& p : pool) {
    if (p.n != n || p.deg != k) throw Error("pool elements must share n and degree");
  }
  const PartitionL base = L.canonical(n);
  std::vector<PartitionL> larger;
  for (const auto& other : enumerate_partitions(n, k)) {
    if (other.greater_than(base)) larger.push_back(other);
  }

  std::map<std::pair<std::size_t, Monomial>, std::vector<LaurentPoly>> rows_by_key;
  for (std::size_t li = 0; li < larger.size(); ++li) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      for (auto& [m, c] : by_variable_monomial(phi_L(pool[j], larger[li]))) {
        auto& row = rows_by_key[{li, m}];
        row.resize(pool.size());
        row[j] = c;
      }
    }
  }
  std::vector<std::vector<LaurentPoly>> m;
  for (auto& [key, row] : rows_by_key) m.push_back(row);

  std::set<VarId> params;
  for (const auto& row : m) {
    for (const auto& c : row) {
      for (const auto& v : variables(c)) params.insert(v);
    }
  }
  std::uint64_t state = seed;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Point point = random_point(std::vector<VarId>(params.begin(), params.end()), state, 1000);
    std::vector<std::vector<Rational>> numeric;
    for (const auto& row : m) {
      std::vector<Rational> r;
      for (const auto& c : row) r.push_back(evaluate(c, point));
      numeric.push_back(std::move(r));
    }
    Pivots piv = numeric_pivots(numeric);
    std::vector<std::vector<LaurentPoly>> square;
    for (std::size_t r : piv.rows) {
      std::vector<LaurentPoly> row;
      for (std::size_t c : piv.cols) row.push_back(m[r][c]);
      square.push_back(std::move(row));
    }
    const LaurentPoly det = determinant(square);

    std::vector<ShuffleElement> out;
    bool ok = true;
    for (std::size_t free = 0; free < pool.size() && ok; ++free) {
      if (std::find(piv.cols.begin(), piv.cols.end(), free) != piv.cols.end()) continue;
      std::vector<LaurentPoly> coeff(pool.size());
      coeff[free] = det;
      for (std::size_t p = 0; p < piv.cols.size(); ++p) {
        auto replaced = square;
        for (std::size_t r = 0; r < piv.rows.size(); ++r) replaced[r][p] = m[piv.rows[r]][free];
        coeff[piv.cols[p]] = -determinant(replaced);
      }
      for (const auto& row : m) {
        LaurentPoly s;
        for (std::size_t j = 0; j < pool.size(); ++j) s += row[j] * coeff[j];
        if (!s.is_zero()) ok = false;
      }
      ShuffleElement e = ShuffleElement::zero(n, k);
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (!coeff[j].is_zero()) e = e + pool[j].scaled(coeff[j]);
      }
      if (!e.is_zero()) out.push_back(std::move(e));
    }
    if (ok) return out;
  }
  throw Error("could not certify the kernel of the larger specializations");
}

}  // namespace shuffleforge
