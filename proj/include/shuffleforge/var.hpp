#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shuffleforge {

// Variable identifiers.  X(i,j) are the shuffle variables x_{i,j} (color i,
// 1-based index j); Y and Y2 appear only in specialization outputs; Param
// covers the symbolic parameters.  The declaration order of the enumerators
// is the canonical term order used by serialization.
enum class VarKind : std::uint8_t { X = 0, Y = 1, Y2 = 2, Param = 3 };

enum class ParamName : std::uint8_t {
  Q = 0,   // q
  D = 1,   // d
  H = 2,   // h, with h^2 = d
  S = 3,   // s_i, i >= 1 (s_0 is eliminated)
  Mu = 4,  // mu_k
  Nu = 5,  // nu_k
  C = 6,   // c_p
  Xi = 7,  // scaling parameter
  T = 8,   // t
  Z = 9,   // formal variable of the kernel matrix
};

struct VarId {
  VarKind kind = VarKind::Param;
  std::uint8_t name = 0;  // ParamName for Param, 0 otherwise
  std::int16_t a = 0;     // color (X, Y2), index (Y), subscript (Param)
  std::int16_t b = 0;     // index (X, Y2)

  static VarId x(int color, int index) {
    return {VarKind::X, 0, static_cast<std::int16_t>(color), static_cast<std::int16_t>(index)};
  }
  static VarId y(int t) { return {VarKind::Y, 0, static_cast<std::int16_t>(t), 0}; }
  static VarId y2(int color, int t) {
    return {VarKind::Y2, 0, static_cast<std::int16_t>(color), static_cast<std::int16_t>(t)};
  }
  static VarId param(ParamName p, int sub = 0) {
    return {VarKind::Param, static_cast<std::uint8_t>(p), static_cast<std::int16_t>(sub), 0};
  }
  static VarId q() { return param(ParamName::Q); }
  static VarId d() { return param(ParamName::D); }
  static VarId h() { return param(ParamName::H); }
  static VarId s(int i) { return param(ParamName::S, i); }
  static VarId mu(int k) { return param(ParamName::Mu, k); }
  static VarId nu(int k) { return param(ParamName::Nu, k); }
  static VarId xi() { return param(ParamName::Xi); }
  static VarId z() { return param(ParamName::Z); }

  bool is_param() const { return kind == VarKind::Param; }
  bool is_x() const { return kind == VarKind::X; }

  auto operator<=>(const VarId&) const = default;
  bool operator==(const VarId&) const = default;

  // "x(i,j)", "q", "d", "s1", "mu1", "xi", "y(t)", "y(i,t)", ...
  std::string str() const;
  static VarId parse(std::string_view text);
};

// Process-wide interning of VarIds into dense exponent slots.
class VarRegistry {
 public:
  static constexpr int kMaxSlots = 64;

  static int slot(const VarId& v);            // registers on first use
  static int find(const VarId& v);            // -1 when unknown
  static VarId var(int slot);
  static int size();
  // Lock-free; valid for any slot returned by slot().
  static bool is_param(int slot);
  // Slots ordered by the VarId total order.
  static std::vector<int> canonical_order();
};

}  // namespace shuffleforge
