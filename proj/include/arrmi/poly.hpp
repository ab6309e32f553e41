#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrmi/monomial.hpp"
#include "arrmi/rational.hpp"

namespace arrmi {

struct Term {
  Monomial mono;
  Rat coef;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coef == b.coef;
  }
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted
// largest-first under the polynomial's monomial order and no stored
// coefficient is zero, so two equal polynomials have identical term vectors.
class Poly {
 public:
  Poly() : order_(MonomialOrder::grevlex()) {}
  explicit Poly(MonomialOrder order) : order_(order) {}

  static Poly constant(const Rat& c, MonomialOrder order = MonomialOrder::grevlex());
  static Poly monomial(const Monomial& m, const Rat& c = 1,
                       MonomialOrder order = MonomialOrder::grevlex());
  static Poly variable(Var v, MonomialOrder order = MonomialOrder::grevlex());
  /// Builds from arbitrary (possibly repeated or zero) terms.
  static Poly from_terms(std::vector<Term> terms, MonomialOrder order = MonomialOrder::grevlex());

  /// Parses an expression over x, y, z, t with rational constants, +, -, *, ^
  /// and parentheses, e.g. "x^2*y - 3/2*z^3 + (x+y)^2".
  static Poly parse(std::string_view text, MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<Term>& terms() const { return terms_; }
  MonomialOrder order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rat& leading_coef() const { return terms_.front().coef; }

  /// Maximal total degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool involves(Var v) const;

  Poly with_order(MonomialOrder order) const;
  Poly monic() const;

  Poly operator-() const;
  Poly operator+(const Poly& q) const;
  Poly operator-(const Poly& q) const;
  Poly operator*(const Poly& q) const;
  Poly operator*(const Rat& c) const;
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  Poly times_term(const Monomial& m, const Rat& c) const;
  Poly pow(unsigned k) const;

  /// Quotient when q divides this exactly, nullopt otherwise. Throws
  /// Error(InvalidArgument) when q is zero.
  std::optional<Poly> divide_exact(const Poly& q) const;

  Poly derivative(Var v) const;
  /// Replaces v by a constant (used to dehomogenize onto a chart).
  Poly substitute(Var v, const Rat& value) const;
  Rat evaluate(const std::array<Rat, 3>& xyz) const;

  /// Canonical text, terms in the polynomial's order: "x^2 - 3/2*y*z + 1".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void normalize();  // sort, merge equal monomials, drop zeros

  std::vector<Term> terms_;
  MonomialOrder order_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace arrmi
