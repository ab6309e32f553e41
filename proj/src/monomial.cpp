#include "arrmi/monomial.hpp"

#include <algorithm>

namespace arrmi {

char var_name(Var v) {
  static constexpr char names[] = {'x', 'y', 'z', 't'};
  return names[static_cast<int>(v)];
}

Monomial Monomial::var(Var v, unsigned power) {
  Monomial m;
  m.exp[static_cast<int>(v)] = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::xyz(unsigned a, unsigned b, unsigned c) {
  Monomial m;
  m.exp = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
           static_cast<std::uint16_t>(c), 0};
  return m;
}

unsigned Monomial::degree_in(VarMask mask) const {
  unsigned d = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (mask & (1u << i)) d += exp[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  return m;
}

Monomial Monomial::divided_into(const Monomial& numerator) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i)
    m.exp[i] = static_cast<std::uint16_t>(numerator.exp[i] - exp[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.exp[i] = std::max(exp[i], other.exp[i]);
  return m;
}

std::uint64_t Monomial::packed() const {
  return std::uint64_t(exp[0]) | std::uint64_t(exp[1]) << 16 | std::uint64_t(exp[2]) << 32 |
         std::uint64_t(exp[3]) << 48;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(static_cast<Var>(i));
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Degree reverse lexicographic restricted to the variables in mask, with
// x > y > z > t.
int grevlex_on(const Monomial& a, const Monomial& b, VarMask mask) {
  const unsigned da = a.degree_in(mask), db = b.degree_in(mask);
  if (da != db) return da < db ? -1 : 1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (!(mask & (1u << i))) continue;
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_on(a, b, 0b1111);
    case Kind::Lex:
      for (int i = 0; i < kNumVars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    case Kind::Elimination:
      if (int c = grevlex_on(a, b, mask_); c != 0) return c;
      return grevlex_on(a, b, VarMask(~mask_ & 0b1111));
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: {
      std::string vars;
      for (int i = 0; i < kNumVars; ++i)
        if (mask_ & (1u << i)) vars += var_name(static_cast<Var>(i));
      return "elim(" + vars + ")";
    }
  }
  return "?";
}

std::vector<Monomial> monomials_of_degree(unsigned d) {
  std::vector<Monomial> out;
  out.reserve((d + 1) * (d + 2) / 2);
  for (unsigned a = 0; a <= d; ++a)
    for (unsigned b = 0; a + b <= d; ++b) out.push_back(Monomial::xyz(a, b, d - a - b));
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& p, const Monomial& q) { return order.greater(p, q); });
  return out;
}

}  // namespace arrmi
