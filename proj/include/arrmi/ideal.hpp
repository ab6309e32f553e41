#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "arrmi/poly.hpp"

namespace arrmi {

/// Reduced Groebner basis (monic, auto-reduced, sorted largest leading
/// monomial first) of the ideal generated by gens. Buchberger's algorithm
/// with Gebauer-Moeller pair pruning; S-pairs are taken by smallest lcm
/// degree. The zero ideal yields an empty basis, the unit ideal yields [1].
std::vector<Poly> groebner(std::vector<Poly> gens, MonomialOrder order);

/// Full normal form of p modulo a Groebner basis (any order-consistent
/// basis; monic elements are not required).
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);
/// True when every poly reduces to zero modulo the Gröbner basis.
bool all_reduce_to_zero(const std::vector<Poly>& polys, const std::vector<Poly>& basis);

// An ideal of Q[x, y, z] (optionally t) given by generators. The reduced
// Groebner basis is computed lazily, at most once, and shared between copies.
class Ideal {
 public:
  Ideal() : Ideal(std::vector<Poly>{}) {}
  explicit Ideal(std::vector<Poly> gens, MonomialOrder order = MonomialOrder::grevlex());

  static Ideal zero(MonomialOrder order = MonomialOrder::grevlex()) { return Ideal({}, order); }
  static Ideal unit(MonomialOrder order = MonomialOrder::grevlex());
  /// Parses each string with Poly::parse.
  static Ideal parse(const std::vector<std::string>& gens,
                     MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<Poly>& generators() const { return gens_; }
  MonomialOrder order() const { return order_; }

  const std::vector<Poly>& groebner_basis() const;

  Ideal with_order(MonomialOrder order) const;

  bool contains(const Poly& p) const;
  /// Every generator of other lies in this ideal.
  bool contains(const Ideal& other) const;
  Poly normal_form(const Poly& p) const;

  bool is_zero() const { return groebner_basis().empty(); }
  bool is_unit() const;
  bool is_principal() const { return groebner_basis().size() == 1; }
  /// True when the reduced basis consists of monomials.
  bool is_monomial() const;
  bool is_homogeneous() const;
  bool involves(Var v) const;

  /// Reduced basis as canonical strings.
  std::vector<std::string> basis_strings() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };

  std::vector<Poly> gens_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

/// Equality of reduced bases; both ideals must use the same order.
bool ideal_equal(const Ideal& a, const Ideal& b);
inline bool operator==(const Ideal& a, const Ideal& b) { return ideal_equal(a, b); }
inline bool operator!=(const Ideal& a, const Ideal& b) { return !ideal_equal(a, b); }

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned k);
inline Ideal operator+(const Ideal& a, const Ideal& b) { return ideal_sum(a, b); }
inline Ideal operator*(const Ideal& a, const Ideal& b) { return ideal_product(a, b); }
/// The principal ideal (p) times a.
Ideal operator*(const Poly& p, const Ideal& a);

/// a ∩ b by eliminating t from t*a + (1-t)*b.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const std::vector<Ideal>& ideals);

/// (a : g) = (a ∩ (g)) / g.
Ideal ideal_quotient(const Ideal& a, const Poly& g);
/// (a : b) = ∩ over generators g of b of (a : g).
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

/// (a : b^∞). Iterates quotients until the ideal stops growing; throws
/// Error(Internal) after 50 rounds.
Ideal saturate(const Ideal& a, const Ideal& b);

/// The maximal ideal (x, y, z) of the origin.
Ideal maximal_ideal();

/// a ∩ m^k for a homogeneous ideal a in x, y, z: the forms of a of degree
/// >= k, generated by a basis of the degree-k piece and the higher-degree
/// basis elements. k <= 0 returns a.
Ideal truncate(const Ideal& a, long k);

/// a ∩ Q[remaining variables], returned in grevlex.
Ideal eliminate(const Ideal& a, Var v);
Ideal eliminate(const Ideal& a, VarMask vars);

struct ZeroDimReport {
  bool is_zero_dimensional = false;
  /// Length of the projective scheme; 0 when not zero-dimensional.
  unsigned degree = 0;
  bool is_reduced = false;
};

/// Hilbert function of S/a at degree t, read off the lead-term ideal.
/// Requires a homogeneous ideal in x, y, z.
unsigned hilbert_function(const Ideal& a, unsigned t);

/// For a saturated homogeneous ideal of a subscheme of the projective plane:
/// whether it is finite, its length, and whether it is reduced (checked on
/// the three standard affine charts against the Seidenberg radical).
ZeroDimReport zero_dim_report(const Ideal& a);

/// Radical of a zero-dimensional affine ideal in the variables of ring_vars:
/// adds the squarefree part of the minimal univariate polynomial of each
/// variable. Throws Error(NotZeroDimensional) when some variable has no
/// univariate relation.
Ideal radical_zero_dim(const Ideal& a, VarMask ring_vars = kPlaneMask);

/// The univariate generator of a ∩ Q[v] (monic), or nullopt if it is zero.
std::optional<Poly> univariate_relation(const Ideal& a, Var v, VarMask ring_vars);

/// p / gcd(p, p') for a polynomial in the single variable v.
Poly squarefree_part(const Poly& p, Var v);

}  // namespace arrmi
