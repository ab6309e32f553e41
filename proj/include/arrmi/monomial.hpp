#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace arrmi {

// The plane's coordinates x, y, z plus one auxiliary variable t that only
// appears inside the ideal engine (intersection by elimination).
enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3 };

inline constexpr int kNumVars = 4;
inline constexpr std::array<Var, 3> kPlaneVars{Var::X, Var::Y, Var::Z};

using VarMask = std::uint8_t;

constexpr VarMask mask_of(Var v) { return VarMask(1u << static_cast<int>(v)); }
inline constexpr VarMask kPlaneMask = 0b0111;

char var_name(Var v);

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  static Monomial one() { return {}; }
  static Monomial var(Var v, unsigned power = 1);
  static Monomial xyz(unsigned a, unsigned b, unsigned c);

  unsigned degree() const { return unsigned(exp[0]) + exp[1] + exp[2] + exp[3]; }
  unsigned degree_in(VarMask mask) const;
  unsigned operator[](Var v) const { return exp[static_cast<int>(v)]; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_one() const { return degree() == 0; }
  bool involves(Var v) const { return (*this)[v] != 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, numerator) on the caller side.
  Monomial divided_into(const Monomial& numerator) const;
  Monomial lcm(const Monomial& other) const;

  std::uint64_t packed() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }

  /// e.g. "x^2*y*z", "1"
  std::string to_string() const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.packed());
  }
};

// A total order on monomials compatible with multiplication, 1 minimal.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Block order: monomials first compared by grevlex on the eliminated
  /// variables, ties broken by grevlex on the rest.
  static MonomialOrder eliminating(VarMask eliminated) {
    return MonomialOrder(Kind::Elimination, eliminated);
  }

  Kind kind() const { return kind_; }
  VarMask eliminated() const { return mask_; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

  std::string name() const;

 private:
  MonomialOrder(Kind kind, VarMask mask) : kind_(kind), mask_(mask) {}

  Kind kind_;
  VarMask mask_;
};

/// All monomials of degree d in x, y, z, largest first under grevlex.
/// Has exactly (d+1)(d+2)/2 entries.
std::vector<Monomial> monomials_of_degree(unsigned d);

}  // namespace arrmi
