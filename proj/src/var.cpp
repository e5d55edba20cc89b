#include "shuffleforge/var.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "shuffleforge/errors.hpp"

namespace shuffleforge {

namespace {

struct ParamSpelling {
  ParamName name;
  std::string_view text;
  bool indexed;
};

// Longest prefixes first so that "xi" is not read as an indexed "x".
constexpr std::array<ParamSpelling, 10> kParams{{
    {ParamName::Xi, "xi", false},
    {ParamName::Mu, "mu", true},
    {ParamName::Nu, "nu", true},
    {ParamName::Q, "q", false},
    {ParamName::D, "d", false},
    {ParamName::H, "h", false},
    {ParamName::S, "s", true},
    {ParamName::C, "c", true},
    {ParamName::T, "t", false},
    {ParamName::Z, "z", false},
}};

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad integer in variable name: '" + std::string(s) + "'");
  }
  return value;
}

std::array<std::atomic<bool>, VarRegistry::kMaxSlots> g_param_mask{};

struct Registry {
  std::shared_mutex mutex;
  std::map<VarId, int> slots;
  std::vector<VarId> vars;

  // q, d, h occupy fixed slots 0, 1, 2.
  Registry() {
    for (const auto& v : {VarId::q(), VarId::d(), VarId::h()}) {
      g_param_mask[vars.size()].store(true, std::memory_order_release);
      slots.emplace(v, static_cast<int>(vars.size()));
      vars.push_back(v);
    }
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::string VarId::str() const {
  switch (kind) {
    case VarKind::X:
      return "x(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case VarKind::Y:
      return "y(" + std::to_string(a) + ")";
    case VarKind::Y2:
      return "y(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case VarKind::Param:
      for (const auto& p : kParams) {
        if (static_cast<std::uint8_t>(p.name) == name) {
          return p.indexed ? std::string(p.text) + std::to_string(a) : std::string(p.text);
        }
      }
  }
  return "?";
}

VarId VarId::parse(std::string_view text) {
  auto inner = [&](std::string_view prefix) -> std::string_view {
    if (text.size() < prefix.size() + 2 || text.substr(0, prefix.size()) != prefix ||
        text.back() != ')') {
      return {};
    }
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  if (auto args = inner("x("); !args.empty()) {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ParseError("bad x variable: " + std::string(text));
    return x(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
  }
  if (auto args = inner("y("); !args.empty()) {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) return y(parse_int(args));
    return y2(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
  }
  for (const auto& p : kParams) {
    if (text.substr(0, p.text.size()) != p.text) continue;
    auto rest = text.substr(p.text.size());
    if (p.indexed) {
      if (rest.empty()) continue;
      return param(p.name, parse_int(rest));
    }
    if (rest.empty()) return param(p.name);
  }
  throw ParseError("unknown variable: '" + std::string(text) + "'");
}

int VarRegistry::slot(const VarId& v) {
  auto& r = registry();
  {
    std::shared_lock lock(r.mutex);
    if (auto it = r.slots.find(v); it != r.slots.end()) return it->second;
  }
  std::unique_lock lock(r.mutex);
  if (auto it = r.slots.find(v); it != r.slots.end()) return it->second;
  if (static_cast<int>(r.vars.size()) >= kMaxSlots) {
    throw Error("variable registry exhausted while adding " + v.str());
  }
  int s = static_cast<int>(r.vars.size());
  g_param_mask[static_cast<std::size_t>(s)].store(v.is_param(), std::memory_order_release);
  r.vars.push_back(v);
  r.slots.emplace(v, s);
  return s;
}

bool VarRegistry::is_param(int slot) {
  registry();
  return g_param_mask[static_cast<std::size_t>(slot)].load(std::memory_order_acquire);
}

int VarRegistry::find(const VarId& v) {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  auto it = r.slots.find(v);
  return it == r.slots.end() ? -1 : it->second;
}

VarId VarRegistry::var(int slot) {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  return r.vars.at(static_cast<std::size_t>(slot));
}

int VarRegistry::size() {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  return static_cast<int>(r.vars.size());
}

std::vector<int> VarRegistry::canonical_order() {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  std::vector<int> order;
  order.reserve(r.slots.size());
  for (const auto& [v, s] : r.slots) order.push_back(s);
  return order;
}

}  // namespace shuffleforge
