#include "shuffleforge/suite.hpp"

#include <chrono>
#include <random>

#include "shuffleforge/errors.hpp"
#include "shuffleforge/gordon.hpp"
#include "shuffleforge/limits.hpp"
#include "shuffleforge/subalg.hpp"

namespace shuffleforge {

namespace {

std::vector<VarId> mus(int count) {
  std::vector<VarId> v;
  for (int i = 1; i <= count; ++i) v.push_back(VarId::mu(i));
  return v;
}

Json deg_json(const DegreeVector& k) {
  Json j = Json::array();
  for (int v : k) j.push_back(v);
  return j;
}

std::vector<DegreeVector> sub_vectors(const DegreeVector& k) {
  std::vector<DegreeVector> out;
  DegreeVector l(k.size(), 0);
  while (true) {
    out.push_back(l);
    std::size_t i = 0;
    while (i < l.size() && l[i] == k[i]) l[i++] = 0;
    if (i == l.size()) return out;
    ++l[i];
  }
}

bool constant_vector(const DegreeVector& l) {
  for (int v : l) {
    if (v != l.front()) return false;
  }
  return true;
}

CheckResult kernel_reflection() {
  CheckResult r;
  r.passed = true;
  Json failing = Json::array();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!kernel_reflection_holds(3, i, j)) {
        r.passed = false;
        failing.push_back({i, j});
      }
    }
  }
  r.details["pairs"] = 9;
  r.details["failing"] = failing;
  return r;
}

CheckResult serre() {
  CheckResult r;
  r.passed = true;
  Json checks = Json::array();
  for (int i = 0; i < 3; ++i) {
    for (int j : {(i + 1) % 3, (i + 2) % 3}) {
      for (int k1 : {0, 1}) {
        bool zero = serre_cubic(3, i, j, k1, 0, 0).is_zero();
        r.passed = r.passed && zero;
        checks.push_back({{"relation", "cubic"}, {"i", i}, {"j", j}, {"modes", {k1, 0, 0}}, {"zero", zero}});
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    bool zero = serre_quartic(i, 0, 0, 0, 0).is_zero();
    r.passed = r.passed && zero;
    checks.push_back({{"relation", "quartic"}, {"i", i}, {"j", 1 - i}, {"modes", {0, 0, 0, 0}}, {"zero", zero}});
  }
  r.details["checks"] = checks;
  return r;
}

Json report_json(const MembershipReport& m) {
  Json v = Json::array();
  for (const auto& x : m.violations) v.push_back({{"a", x.a}, {"b", x.b}, {"reason", x.reason}});
  return {{"ok", m.ok}, {"violations", v}};
}

CheckResult generator_membership() {
  CheckResult r;
  r.passed = true;
  Json checks = Json::array();
  for (int k = 1; k <= 2; ++k) {
    ShuffleElement f = gen_F_k_mu(3, k, VarId::mu(1));
    MembershipReport m = membership_A(f);
    int intervals = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < a + 3 * (k + 1); ++b) intervals += leq(interval_degree_vector(3, a, b), f.deg) ? 1 : 0;
    }
    r.passed = r.passed && m.ok;
    Json c = report_json(m);
    c["k"] = k;
    c["intervals"] = intervals;
    checks.push_back(c);
  }
  r.details["checks"] = checks;
  return r;
}

CheckResult commutativity(const SuiteOptions& opts) {
  CheckResult r;
  r.passed = true;
  std::vector<std::pair<int, int>> degrees{{1, 1}, {1, 2}};
  if (opts.long_run) degrees.emplace_back(2, 2);
  Json checks = Json::array();
  for (int n : {3, 2}) {
    for (auto [m1, m2] : degrees) {
      bool zero = commutes(gen_F_k_mu(n, m1, VarId::mu(1)), gen_F_k_mu(n, m2, VarId::mu(2)));
      r.passed = r.passed && zero;
      checks.push_back({{"n", n}, {"m1", m1}, {"m2", m2}, {"zero", zero}});
    }
  }
  r.details["checks"] = checks;
  return r;
}

CheckResult dimension(const SuiteOptions& opts) {
  CheckResult r;
  r.passed = true;
  Json checks = Json::array();
  std::vector<int> ks{1, 2};
  if (opts.long_run) ks.push_back(3);
  for (int k : ks) {
    auto basis = product_basis(3, k, mus(3));
    const std::size_t expected = dim_R(3, k).get_ui();
    std::size_t rank = rank_of_span({basis, opts.seed});
    bool resampled = false;
    if (rank != expected) {
      rank = rank_of_span({basis, opts.seed + 1});
      resampled = true;
    }
    r.passed = r.passed && rank == expected;
    checks.push_back({{"k", k}, {"basis", basis.size()}, {"dim_R", expected}, {"rank", rank}, {"resampled", resampled}});
  }
  r.details["checks"] = checks;
  return r;
}

CheckResult off_lattice() {
  CheckResult r;
  MembershipReport m = membership_A(monomial_generator(3, 0, 0));
  r.passed = !m.ok;
  r.details = report_json(m);
  return r;
}

CheckResult slope_limits() {
  CheckResult r;
  ShuffleElement f1 = gen_F_k(3, 1);
  ShuffleElement f2 = gen_F_k(3, 2);

  bool a_ok = true;
  int a_count = 0;
  Json a_fail = Json::array();
  for (const auto& l : sub_vectors(f2.deg)) {
    if (constant_vector(l)) continue;
    ++a_count;
    LimitResult lim = limit_infinity(f2, l);
    if (!lim.exists || !lim.value.is_zero()) {
      a_ok = false;
      a_fail.push_back(deg_json(l));
    }
  }

  Assignment shift;
  for (int i = 0; i < 3; ++i) shift[VarId::x(i, 1)] = LaurentPoly::var(VarId::x(i, 2));
  RatFunc plain = as_ratfunc(f1) * substitute(as_ratfunc(f1), shift);
  LimitResult at_delta = limit_infinity(f2, delta(3));
  bool b_ok = at_delta.exists && cross_multiply_equal(at_delta.value, plain);

  ShuffleElement l2 = gen_L_k(3, 2);
  bool c_ok = true;
  int c_count = 0;
  Json c_fail = Json::array();
  for (const auto& l : sub_vectors(l2.deg)) {
    if (total(l) == 0 || l == l2.deg) continue;
    ++c_count;
    LimitResult lim = limit_infinity(l2, l);
    if (!lim.exists || !lim.value.is_zero()) {
      c_ok = false;
      Json f = {{"l", deg_json(l)}, {"exists", lim.exists}};
      if (lim.exists) f["value"] = to_json(lim.value);
      c_fail.push_back(f);
    }
  }

  r.passed = a_ok && b_ok && c_ok;
  r.details["a"] = {{"vectors", a_count}, {"ok", a_ok}, {"failing", a_fail}};
  r.details["b"] = {{"ok", b_ok}};
  r.details["c"] = {{"vectors", c_count}, {"ok", c_ok}, {"failing", c_fail}};
  return r;
}

CheckResult gamma_family() {
  CheckResult r;
  r.passed = true;
  Json checks = Json::array();
  for (int p = 0; p < 3; ++p) {
    for (int p2 = p + 1; p2 < 3; ++p2) {
      bool zero = commutes(gen_Gamma0(3, p, 1), gen_Gamma0(3, p2, 1));
      r.passed = r.passed && zero;
      checks.push_back({{"p", p}, {"p2", p2}, {"zero", zero}});
    }
  }
  r.details["checks"] = checks;
  return r;
}

CheckResult small_shuffle() {
  CheckResult r;
  r.passed = true;
  Json comm = Json::array();
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      bool zero = commutes(gen_K_m(a), gen_K_m(b));
      r.passed = r.passed && zero;
      comm.push_back({{"a", a}, {"b", b}, {"zero", zero}});
    }
  }
  Json lims = Json::array();
  for (int k = 0; k <= 2; ++k) {
    LimitResult inf = limit_infinity(gen_K_m(2), {k});
    LimitResult zero = limit_zero(gen_K_m(2), {k});
    bool ok = inf.exists && zero.exists && cross_multiply_equal(inf.value, zero.value);
    r.passed = r.passed && ok;
    lims.push_back({{"k", k}, {"equal", ok}});
  }
  Json gam = Json::array();
  for (int N = 1; N <= 2; ++N) {
    bool ok = gen_Gamma0(1, 0, N) == gen_K_m(N).scaled(LaurentPoly::var(VarId::q(), -N * (N - 1)));
    r.passed = r.passed && ok;
    gam.push_back({{"N", N}, {"equal", ok}});
  }
  r.details["commutators"] = comm;
  r.details["limits"] = lims;
  r.details["gamma"] = gam;
  return r;
}

CheckResult gordon_maps() {
  CheckResult r;
  ShuffleElement f2 = gen_F_k_mu(3, 2, VarId::mu(1));
  bool two_zero = phi_lambda(f2, YoungDiagram{{2}}).is_zero();

  auto shape = [](const VarId& m) {
    LaurentPoly p(1);
    for (int i = 0; i < 3; ++i) {
      int next = (i + 1) % 3;
      LaurentPoly Y = LaurentPoly::var(VarId::y2(i, 1)) * LaurentPoly::var(VarId::y2(i, 2));
      LaurentPoly Yn = LaurentPoly::var(VarId::y2(next, 1)) * LaurentPoly::var(VarId::y2(next, 2));
      p *= LaurentPoly(s_interval(3, 0, i)) * Y - LaurentPoly::var(m) * Yn;
    }
    return RatFunc(p);
  };
  RatFunc pm = phi_lambda(f2, YoungDiagram{{1, 1}});
  RatFunc pn = phi_lambda(gen_F_k_mu(3, 2, VarId::mu(2)), YoungDiagram{{1, 1}});
  bool shape_ok = !pm.is_zero() && cross_multiply_equal(pm * shape(VarId::mu(2)), pn * shape(VarId::mu(1)));

  auto classes = enumerate_partitions(3, delta(3));
  std::vector<ShuffleElement> generators = coefficients_in(gen_F_k_mu(3, 1, VarId::mu(1)), VarId::mu(1));
  std::vector<ShuffleElement> products = colour_order_products(3, {0, 0, 1});
  for (const auto& p : colour_order_products(3, {0, 1, 0})) products.push_back(p);
  bool divisible = true;
  Json per_class = Json::array();
  for (const auto& L : classes) {
    int instances = 0;
    int nonzero = 0;
    for (const auto* pool : {&generators, &products}) {
      for (const auto& f : filtered_combinations(*pool, L)) {
        ++instances;
        LaurentPoly image = phi_L(f, L);
        nonzero += image.is_zero() ? 0 : 1;
        try {
          if (divide_by_Q_L(image, 3, L) * Q_L(3, L) != image) divisible = false;
        } catch (const NotDivisible&) {
          divisible = false;
        }
      }
    }
    per_class.push_back({{"L", L.str()}, {"instances", instances}, {"nonzero", nonzero}});
  }

  r.passed = two_zero && shape_ok && divisible;
  r.details["phi_2_zero"] = two_zero;
  r.details["phi_11_shape"] = shape_ok;
  r.details["divisible"] = divisible;
  r.details["classes"] = per_class;
  return r;
}

CheckResult algebra_laws(const SuiteOptions& opts) {
  CheckResult r;
  std::mt19937_64 rng(opts.seed);
  bool unit = true;
  bool assoc = true;
  bool grading = true;
  bool wheel = true;
  int wheel_checked = 0;
  std::vector<ShuffleElement> built = suite_products();
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto pick = [&] {
      return monomial_generator(n, static_cast<int>(rng() % static_cast<unsigned>(n)), static_cast<int>(rng() % 4) - 1);
    };
    ShuffleElement a = pick();
    ShuffleElement b = t % 3 == 0 ? star(pick(), pick()) : pick();
    ShuffleElement c = pick();
    ShuffleElement left = star(star(a, b), c);
    ShuffleElement right = star(a, star(b, c));
    assoc = assoc && left == right;
    grading = grading && left.deg == add(add(a.deg, b.deg), c.deg) && tot_deg(left) == tot_deg(a) + tot_deg(b) + tot_deg(c);
    ShuffleElement one = ShuffleElement::one(n);
    unit = unit && star(one, b) == b && star(b, one) == b;
    built.push_back(left);
  }
  for (const auto& p : built) {
    if (p.n == 2) continue;
    ++wheel_checked;
    wheel = wheel && wheel_check(p).ok;
  }
  r.passed = unit && assoc && grading && wheel;
  r.details = {{"unit", unit}, {"associativity", assoc}, {"triples", 20}, {"grading", grading}, {"wheel", wheel},
               {"wheel_checked", wheel_checked}};
  return r;
}

}  // namespace

std::string criterion_name(int id) {
  switch (id) {
    case 1: return "kernel reflection";
    case 2: return "Serre relations";
    case 3: return "generator membership";
    case 4: return "commutativity of generators";
    case 5: return "dimension certificate";
    case 6: return "off-lattice vanishing";
    case 7: return "slope-zero limits";
    case 8: return "Gamma0 family";
    case 9: return "small shuffle algebra";
    case 10: return "Gordon maps";
    case 11: return "algebra laws";
    default: throw Error("no criterion " + std::to_string(id));
  }
}

CheckResult run_criterion(int id, const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  switch (id) {
    case 1: r = kernel_reflection(); break;
    case 2: r = serre(); break;
    case 3: r = generator_membership(); break;
    case 4: r = commutativity(opts); break;
    case 5: r = dimension(opts); break;
    case 6: r = off_lattice(); break;
    case 7: r = slope_limits(); break;
    case 8: r = gamma_family(); break;
    case 9: r = small_shuffle(); break;
    case 10: r = gordon_maps(); break;
    case 11: r = algebra_laws(opts); break;
    default: throw Error("no criterion " + std::to_string(id));
  }
  r.id = id;
  r.name = criterion_name(id);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_desk_suite(const SuiteOptions& opts) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

std::vector<ShuffleElement> suite_products() {
  std::vector<ShuffleElement> out;
  for (int k = 1; k <= 2; ++k) {
    for (auto& p : product_basis(3, k, mus(3))) out.push_back(std::move(p));
  }
  ShuffleElement f1 = gen_F_k(3, 1);
  out.push_back(star(f1, f1));
  out.push_back(gen_L_k(3, 2));
  for (auto& p : colour_order_products(3, {0, 0, 1})) out.push_back(std::move(p));
  for (auto& p : colour_order_products(3, {0, 1, 0})) out.push_back(std::move(p));
  out.push_back(star(monomial_generator(3, 0, 0), monomial_generator(3, 1, 0)));
  out.push_back(star(gen_K_m(2), gen_K_m(1)));
  out.push_back(star(gen_K_m(1), gen_K_m(2)));
  out.push_back(star(gen_Gamma0(3, 0, 1), gen_Gamma0(3, 1, 1)));
  return out;
}

Json to_json(const CheckResult& r, bool with_timing) {
  Json j = {{"id", r.id}, {"name", r.name}, {"pass", r.passed}, {"details", r.details}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace shuffleforge
