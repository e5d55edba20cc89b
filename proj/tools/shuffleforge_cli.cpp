#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "shuffleforge/errors.hpp"
#include "shuffleforge/gordon.hpp"
#include "shuffleforge/limits.hpp"
#include "shuffleforge/subalg.hpp"
#include "shuffleforge/suite.hpp"

using namespace shuffleforge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  int n = 3;
  std::uint64_t seed = 1;
  std::string mode = "exact";
  std::size_t term_limit = 50'000'000;
  std::string suite = "desk";
  bool long_run = false;
  bool symbolic_s = false;
  bool timings = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SHUFFLEFORGE_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && *env != '\0') return v;
    throw UsageError("SHUFFLEFORGE_SEED must be an unsigned integer");
  }
  return 1;
}

// A generator spec, inline JSON, or a path to a JSON element file.
ShuffleElement load_element(const std::string& arg, int n) {
  if (!arg.empty() && arg.front() == '{') return element_from_json(Json::parse(arg));
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    return element_from_json(Json::parse(in));
  }
  return GeneratorSpec::parse(arg).build(n);
}

std::pair<int, int> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected a,b but got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("expected integers in '" + text + "'");
  }
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("expected a comma separated list of integers in '" + text + "'");
    }
  }
  return out;
}

Json membership_json(const MembershipReport& m) {
  Json v = Json::array();
  for (const auto& x : m.violations) v.push_back({{"a", x.a}, {"b", x.b}, {"reason", x.reason}});
  return {{"ok", m.ok}, {"violations", v}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  int code = kPass;
  try {
    cfg.seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Exact computations in the shuffle algebra of type A"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", cfg.n, "number of colours")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for every random choice (default $SHUFFLEFORGE_SEED or 1)");
  app.add_option("--mode", cfg.mode, "equality testing")->check(CLI::IsMember({"exact", "fastpath"}));
  app.add_option("--term-limit", cfg.term_limit, "abort when a polynomial exceeds this many terms")
      ->check(CLI::PositiveNumber);
  app.add_flag("--symbolic-s", cfg.symbolic_s, "keep s_1..s_{n-1} symbolic (always the case)");
  app.add_flag("--long", cfg.long_run, "include the long-running checks");
  app.add_flag("--timings", cfg.timings, "add wall-clock seconds to reports");

  std::function<int()> action;
  auto timed = [&](auto body) {
    return [&cfg, body]() {
      auto start = std::chrono::steady_clock::now();
      Json out;
      int rc = body(out);
      if (cfg.timings) out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(out);
      return rc;
    };
  };

  std::string a_arg;
  std::string b_arg;

  auto* gen = app.add_subcommand("gen", "build a generator");
  gen->add_option("spec", a_arg, "e(i,k), F(k;mu1), Fk(k), Lk(k), K(m), Gamma0(p,N)")->required();
  gen->callback([&] { action = timed([&](Json& out) { out = to_json(load_element(a_arg, cfg.n)); return kPass; }); });

  auto* st = app.add_subcommand("star", "star product of two elements");
  st->add_option("a", a_arg)->required();
  st->add_option("b", b_arg)->required();
  st->callback([&] {
    action = timed([&](Json& out) {
      out = to_json(star(load_element(a_arg, cfg.n), load_element(b_arg, cfg.n)));
      return kPass;
    });
  });

  auto* com = app.add_subcommand("commute", "decide whether two elements commute");
  com->add_option("a", a_arg)->required();
  com->add_option("b", b_arg)->required();
  com->callback([&] {
    action = timed([&](Json& out) {
      bool zero = commutes(load_element(a_arg, cfg.n), load_element(b_arg, cfg.n));
      out = {{"a", a_arg}, {"b", b_arg}, {"n", cfg.n}, {"zero", zero}};
      return zero ? kPass : kFail;
    });
  });

  auto* wh = app.add_subcommand("wheel", "check the wheel conditions");
  wh->add_option("element", a_arg)->required();
  wh->callback([&] {
    action = timed([&](Json& out) {
      WheelReport w = wheel_check(load_element(a_arg, cfg.n));
      out = {{"ok", w.ok}, {"convention_dependent", w.convention_dependent}, {"failing", w.failing}};
      return w.ok ? kPass : kFail;
    });
  });

  auto* mem = app.add_subcommand("membership", "membership in A(s)");
  mem->add_option("element", a_arg)->required();
  mem->callback([&] {
    action = timed([&](Json& out) {
      MembershipReport m = membership_A(load_element(a_arg, cfg.n));
      out = membership_json(m);
      return m.ok ? kPass : kFail;
    });
  });

  std::string op = "inf";
  std::string interval;
  auto* lim = app.add_subcommand("limits", "scaling limit along an interval");
  lim->add_option("element", a_arg)->required();
  lim->add_option("--op", op)->check(CLI::IsMember({"inf", "zero"}));
  lim->add_option("--interval", interval, "a,b")->required();
  lim->callback([&] {
    action = timed([&](Json& out) {
      ShuffleElement f = load_element(a_arg, cfg.n);
      auto [a, b] = parse_pair(interval);
      if (a > b) throw UsageError("empty interval");
      DegreeVector l = interval_degree_vector(f.n, a, b);
      if (!leq(l, f.deg)) throw UsageError("interval degree " + str(l) + " exceeds " + str(f.deg));
      LimitResult r = op == "inf" ? limit_infinity(f, l) : limit_zero(f, l);
      out = {{"op", op}, {"interval", {a, b}}, {"exists", r.exists}};
      if (r.exists) out["value"] = to_json(r.value);
      return kPass;
    });
  });

  auto* gor = app.add_subcommand("gordon", "specialization maps");
  gor->require_subcommand(1);
  std::string intervals;
  std::string shape;
  auto* phil = gor->add_subcommand("phi-L", "phi_L of an element");
  phil->add_option("element", a_arg)->required();
  phil->add_option("--intervals", intervals, "a-b;c-d;...")->required();
  phil->callback([&] {
    action = timed([&](Json& out) {
      PartitionL L = PartitionL::parse(intervals);
      ShuffleElement f = load_element(a_arg, cfg.n);
      if (L.degree(f.n) != f.deg) throw UsageError("partition " + L.str() + " does not match degree " + str(f.deg));
      out = {{"L", L.str()}, {"value", to_json(phi_L(f, L))}};
      return kPass;
    });
  });
  auto* phil2 = gor->add_subcommand("phi-lambda", "phi_lambda of an element");
  phil2->add_option("element", a_arg)->required();
  phil2->add_option("--shape", shape, "rows, e.g. 2,1")->required();
  phil2->callback([&] {
    action = timed([&](Json& out) {
      YoungDiagram lam = YoungDiagram::parse(shape);
      out = {{"shape", lam.str()}, {"value", to_json(phi_lambda(load_element(a_arg, cfg.n), lam))}};
      return kPass;
    });
  });
  auto* ql = gor->add_subcommand("QL", "the vanishing factor Q_L");
  ql->add_option("--intervals", intervals, "a-b;c-d;...")->required();
  ql->callback([&] {
    action = timed([&](Json& out) {
      PartitionL L = PartitionL::parse(intervals);
      Json factors = Json::array();
      for (const auto& f : Q_L_factors(cfg.n, L)) {
        factors.push_back({{"u", f.u}, {"v", f.v}, {"item", f.item}, {"form", to_json(f.form)}});
      }
      out = {{"L", L.str()}, {"factors", factors}, {"value", to_json(Q_L(cfg.n, L))}};
      return kPass;
    });
  });

  int k = 1;
  auto* dims = app.add_subcommand("dims", "dimension of the degree k part of R");
  dims->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  dims->callback([&] {
    action = timed([&](Json& out) {
      out = {{"n", cfg.n}, {"k", k}, {"dim", dim_R(cfg.n, k).get_str()}};
      return kPass;
    });
  });

  auto* rank = app.add_subcommand("rank", "rank of the product basis at random points");
  rank->add_option("--basis", k, "degree k")->required()->check(CLI::PositiveNumber);
  rank->callback([&] {
    action = timed([&](Json& out) {
      std::vector<VarId> mus;
      for (int i = 1; i <= cfg.n; ++i) mus.push_back(VarId::mu(i));
      auto basis = product_basis(cfg.n, k, mus);
      std::size_t r = rank_of_span({basis, cfg.seed});
      const std::size_t expected = dim_R(cfg.n, k).get_ui();
      bool resampled = false;
      if (r != expected) {
        r = rank_of_span({basis, cfg.seed + 1});
        resampled = true;
      }
      out = {{"n", cfg.n}, {"k", k}, {"basis", basis.size()}, {"rank", r}, {"dim_R", expected},
             {"resampled", resampled}, {"pass", r == expected}};
      return r == expected ? kPass : kFail;
    });
  });

  std::string modes;
  auto* se = app.add_subcommand("serre", "Serre relations (cubic for n >= 3, quartic for n = 2)");
  se->add_option("--modes", modes, "k1,k2,l or k1,k2,k3,l");
  se->callback([&] {
    action = timed([&](Json& out) {
      Json checks = Json::array();
      bool ok = true;
      auto record = [&](const ShuffleElement& e, Json what) {
        what["zero"] = e.is_zero();
        if (!e.is_zero()) {
          if (ok) what["element"] = to_json(e);
          ok = false;
        }
        checks.push_back(what);
      };
      if (cfg.n == 2) {
        std::vector<std::vector<int>> sets{{0, 0, 0, 0}};
        if (!modes.empty()) sets = {parse_list(modes)};
        for (const auto& m : sets) {
          if (m.size() != 4) throw UsageError("quartic relation needs four modes");
          for (int i = 0; i < 2; ++i) record(serre_quartic(i, m[0], m[1], m[2], m[3]), {{"i", i}, {"modes", m}});
        }
      } else if (cfg.n >= 3) {
        std::vector<std::vector<int>> sets{{0, 0, 0}, {1, 0, 0}};
        if (!modes.empty()) sets = {parse_list(modes)};
        for (const auto& m : sets) {
          if (m.size() != 3) throw UsageError("cubic relation needs three modes");
          for (int i = 0; i < cfg.n; ++i) {
            for (int j : {(i + 1) % cfg.n, (i + cfg.n - 1) % cfg.n}) {
              record(serre_cubic(cfg.n, i, j, m[0], m[1], m[2]), {{"i", i}, {"j", j}, {"modes", m}});
            }
          }
        }
      } else {
        throw UsageError("no Serre relations for n = 1");
      }
      out = {{"n", cfg.n}, {"ok", ok}, {"checks", checks}};
      return ok ? kPass : kFail;
    });
  });

  std::string criteria;
  auto* va = app.add_subcommand("verify-all", "run the acceptance suite");
  va->add_option("--suite", cfg.suite)->check(CLI::IsMember({"desk"}));
  va->add_option("--criteria", criteria, "comma separated subset, e.g. 1,2");
  va->callback([&] {
    action = [&]() {
      SuiteOptions opts{cfg.seed, cfg.long_run};
      std::vector<int> ids;
      if (criteria.empty()) {
        for (int id = 1; id <= kCriteria; ++id) ids.push_back(id);
      } else {
        ids = parse_list(criteria);
        for (int id : ids) {
          if (id < 1 || id > kCriteria) throw UsageError("no criterion " + std::to_string(id));
        }
      }
      Json results = Json::array();
      bool ok = true;
      for (int id : ids) {
        CheckResult r = run_criterion(id, opts);
        ok = ok && r.passed;
        results.push_back(to_json(r, cfg.timings));
      }
      emit({{"suite", cfg.suite}, {"seed", cfg.seed}, {"long", cfg.long_run}, {"ok", ok}, {"criteria", results}});
      return ok ? kPass : kFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  set_term_limit(cfg.term_limit);
  set_fast_path_default(cfg.mode == "fastpath");
  try {
    code = action();
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "usage: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const TermLimitExceeded& e) {
    emit({{"error", "term_limit"}, {"message", e.what()}, {"term_limit", cfg.term_limit}});
    return kFail;
  } catch (const Error& e) {
    emit({{"error", "computation"}, {"message", e.what()}});
    return kFail;
  }
  return code;
}
