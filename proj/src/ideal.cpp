#include "arrmi/ideal.hpp"

#include <algorithm>
#include <unordered_map>

#include "arrmi/error.hpp"
#include "arrmi/linalg.hpp"

namespace arrmi {

Ideal::Ideal(std::vector<Poly> gens, MonomialOrder order)
    : order_(order), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(g.with_order(order));
}

Ideal Ideal::unit(MonomialOrder order) { return Ideal({Poly::constant(1, order)}, order); }

Ideal Ideal::parse(const std::vector<std::string>& gens, MonomialOrder order) {
  std::vector<Poly> polys;
  polys.reserve(gens.size());
  for (const auto& g : gens) polys.push_back(Poly::parse(g, order));
  return Ideal(std::move(polys), order);
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner(gens_, order_); });
  return cache_->basis;
}

Ideal Ideal::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return Ideal(gens_, order);
}

bool Ideal::contains(const Poly& p) const {
  return all_reduce_to_zero({p}, groebner_basis());
}

bool Ideal::contains(const Ideal& other) const {
  return all_reduce_to_zero(other.generators(), groebner_basis());
}

Poly Ideal::normal_form(const Poly& p) const { return arrmi::normal_form(p, groebner_basis()); }

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial() const {
  const auto& gb = groebner_basis();
  return std::all_of(gb.begin(), gb.end(), [](const Poly& g) { return g.is_monomial(); });
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_homogeneous(); });
}

bool Ideal::involves(Var v) const {
  return std::any_of(gens_.begin(), gens_.end(), [v](const Poly& g) { return g.involves(v); });
}

std::vector<std::string> Ideal::basis_strings() const {
  std::vector<std::string> out;
  for (const auto& g : groebner_basis()) out.push_back(g.to_string());
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::InvalidArgument, "ideal comparison across monomial orders");
  return a.groebner_basis() == b.groebner_basis();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(std::move(gens), a.order());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  std::vector<Poly> gens;
  gens.reserve(ga.size() * gb.size());
  for (const auto& f : ga)
    for (const auto& g : gb) gens.push_back(f * g);
  return Ideal(std::move(gens), a.order());
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  Ideal result = Ideal::unit(a.order());
  for (unsigned i = 0; i < k; ++i) result = ideal_product(result, a);
  return result;
}

Ideal operator*(const Poly& p, const Ideal& a) {
  std::vector<Poly> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(p * g);
  return Ideal(std::move(gens), a.order());
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::InvalidArgument, "intersection across monomial orders");
  if (a.involves(Var::T) || b.involves(Var::T))
    throw Error(ErrorCode::InvalidArgument, "intersection inputs must not involve t");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.order());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  const auto elim = MonomialOrder::eliminating(mask_of(Var::T));
  const Poly t = Poly::variable(Var::T, elim);
  const Poly one_minus_t = Poly::constant(1, elim) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.groebner_basis()) gens.push_back(t * f.with_order(elim));
  for (const auto& g : b.groebner_basis()) gens.push_back(one_minus_t * g.with_order(elim));

  std::vector<Poly> kept;
  for (auto& g : groebner(std::move(gens), elim))
    if (!g.involves(Var::T)) kept.push_back(g.with_order(a.order()));
  return Ideal(std::move(kept), a.order());
}

Ideal ideal_intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) return Ideal::unit();
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

Ideal ideal_quotient(const Ideal& a, const Poly& g) {
  if (g.is_zero() || a.contains(g)) return Ideal::unit(a.order());
  const Ideal meet = ideal_intersect(a, Ideal({g}, a.order()));
  std::vector<Poly> gens;
  for (const auto& f : meet.groebner_basis()) {
    auto q = f.divide_exact(g);
    if (!q) throw Error(ErrorCode::Internal, "intersection generator not divisible by " + g.to_string());
    gens.push_back(std::move(*q));
  }
  return Ideal(std::move(gens), a.order());
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  std::vector<Ideal> parts;
  for (const auto& g : b.generators()) parts.push_back(ideal_quotient(a, g));
  if (parts.empty()) return Ideal::unit(a.order());
  return ideal_intersect(parts);
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  constexpr int kMaxRounds = 50;
  Ideal current = a;
  for (int round = 0; round < kMaxRounds; ++round) {
    Ideal next = ideal_quotient(current, b);
    if (next == current) return current;
    current = std::move(next);
  }
  throw Error(ErrorCode::Internal, "saturation did not stabilize after 50 quotients");
}

Ideal maximal_ideal() {
  return Ideal({Poly::variable(Var::X), Poly::variable(Var::Y), Poly::variable(Var::Z)});
}

Ideal truncate(const Ideal& a, long k) {
  if (k <= 0 || a.is_zero()) return a;
  if (!a.is_homogeneous() || a.involves(Var::T))
    throw Error(ErrorCode::InvalidArgument, "truncate needs a homogeneous ideal in x, y, z");
  const Ideal graded = a.with_order(MonomialOrder::grevlex());
  const unsigned degree = unsigned(k);
  const auto monos = monomials_of_degree(degree);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (std::size_t c = 0; c < monos.size(); ++c) column[monos[c]] = c;

  std::vector<RatVector> rows;
  std::vector<Poly> gens;
  for (const auto& g : graded.groebner_basis()) {
    const unsigned dg = unsigned(g.degree());
    if (dg > degree) {
      gens.push_back(g);
      continue;
    }
    for (const auto& m : monomials_of_degree(degree - dg)) {
      RatVector row(monos.size());
      for (const auto& t : g.terms()) row[column.at(t.mono * m)] = t.coef;
      rows.push_back(std::move(row));
    }
  }
  for (const auto& row : row_space_basis(rows, monos.size())) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (sgn(row[c]) != 0) terms.push_back({monos[c], row[c]});
    gens.push_back(Poly::from_terms(std::move(terms)));
  }
  return Ideal(std::move(gens));
}

Ideal eliminate(const Ideal& a, VarMask vars) {
  const auto elim = MonomialOrder::eliminating(vars);
  std::vector<Poly> kept;
  for (const auto& g : groebner(a.generators(), elim)) {
    bool free = true;
    for (int i = 0; i < kNumVars; ++i)
      if ((vars & (1u << i)) && g.involves(static_cast<Var>(i))) free = false;
    if (free) kept.push_back(g.with_order(MonomialOrder::grevlex()));
  }
  return Ideal(std::move(kept), MonomialOrder::grevlex());
}

Ideal eliminate(const Ideal& a, Var v) { return eliminate(a, mask_of(v)); }

}  // namespace arrmi
