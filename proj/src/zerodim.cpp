#include <algorithm>
#include <unordered_map>

#include "arrmi/error.hpp"
#include "arrmi/ideal.hpp"
#include "arrmi/linalg.hpp"

namespace arrmi {

namespace {

std::vector<Monomial> lead_monomials(const Ideal& a) {
  const Ideal g = a.with_order(MonomialOrder::grevlex());
  std::vector<Monomial> out;
  for (const auto& p : g.groebner_basis()) out.push_back(p.leading_monomial());
  return out;
}

// Krull dimension of S/M for the monomial ideal M spanned by lead: the
// largest set of variables U such that no generator is a monomial in U alone.
unsigned monomial_krull_dimension(const std::vector<Monomial>& lead) {
  unsigned best = 0;
  for (VarMask u = 0; u <= kPlaneMask; ++u) {
    bool independent = true;
    for (const auto& m : lead) {
      bool inside = true;
      for (int i = 0; i < 3; ++i)
        if (m.exp[i] != 0 && !(u & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, unsigned(__builtin_popcount(u)));
  }
  return best;
}

unsigned count_standard(const std::vector<Monomial>& lead, unsigned t) {
  unsigned count = 0;
  for (const auto& m : monomials_of_degree(t))
    if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
  return count;
}

using Dense = std::vector<Rat>;  // coefficient of v^i at index i

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Dense to_dense(const Poly& p, Var v) {
  Dense d;
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[v])
      throw Error(ErrorCode::InvalidArgument, "not univariate in " + std::string(1, var_name(v)) + ": " + p.to_string());
    const unsigned e = t.mono[v];
    if (d.size() <= e) d.resize(e + 1);
    d[e] = t.coef;
  }
  return d;
}

Poly from_dense(const Dense& d, Var v, MonomialOrder order) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < d.size(); ++e)
    if (sgn(d[e]) != 0) terms.push_back({Monomial::var(v, unsigned(e)), d[e]});
  return Poly::from_terms(std::move(terms), order);
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  Dense q;
  trim(a);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rat c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return {q, a};
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Standard monomials of an affine zero-dimensional ideal with lead terms lead.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lead) {
  std::vector<Monomial> out;
  for (unsigned t = 0;; ++t) {
    bool any = false;
    for (const auto& m : monomials_of_degree(t))
      if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); })) {
        out.push_back(m);
        any = true;
      }
    if (!any) return out;
  }
}

// Number of distinct points of the zero-dimensional homogeneous ideal a:
// the rank of the trace form of the coordinate ring of an affine chart
// {l = 1} that contains every point.
std::size_t distinct_points(const Ideal& graded, unsigned degree) {
  std::optional<Poly> chart;
  for (long a = 0; a <= 4 && !chart; ++a)
    for (long b = 0; b <= 4 && !chart; ++b) {
      const Poly l = Poly::variable(Var::Z) + Poly::variable(Var::Y) * Rat(a) + Poly::variable(Var::X) * Rat(b);
      std::vector<Poly> gens = graded.groebner_basis();
      gens.push_back(l);
      if (monomial_krull_dimension(lead_monomials(Ideal(std::move(gens)))) == 0) chart = l;
    }
  if (!chart) throw Error(ErrorCode::Internal, "no affine chart contains every point");

  std::vector<Poly> gens = graded.groebner_basis();
  gens.push_back(*chart - Poly::constant(1));
  const Ideal affine(std::move(gens));
  const auto& basis = affine.groebner_basis();
  std::vector<Monomial> lead;
  for (const auto& g : basis) lead.push_back(g.leading_monomial());
  const std::vector<Monomial> standard = standard_monomials(lead);
  const std::size_t n = standard.size();
  if (n != degree) throw Error(ErrorCode::Internal, "affine chart lost part of a zero-dimensional scheme");
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < n; ++i) index[standard[i]] = i;

  auto coordinates = [&](const Monomial& m) {
    RatVector v(n);
    const Poly reduced = normal_form(Poly::monomial(m), basis);
    for (const auto& t : reduced.terms()) v[index.at(t.mono)] = t.coef;
    return v;
  };
  std::vector<std::vector<RatVector>> products(n, std::vector<RatVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) products[i][j] = products[j][i] = coordinates(standard[i] * standard[j]);
  RatVector trace(n);  // trace of multiplication by each standard monomial
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < n; ++b) trace[k] += products[k][b][b];
  RatMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) form(i, j) += products[i][j][k] * trace[k];
  return form.rank();
}

}  // namespace

unsigned hilbert_function(const Ideal& a, unsigned t) {
  if (!a.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "Hilbert function needs a homogeneous ideal");
  return count_standard(lead_monomials(a), t);
}

ZeroDimReport zero_dim_report(const Ideal& a) {
  if (!a.is_homogeneous() || a.involves(Var::T))
    throw Error(ErrorCode::InvalidArgument, "zero_dim_report needs a homogeneous ideal in x, y, z");
  const auto lead = lead_monomials(a);
  if (lead.empty()) return {};
  if (a.is_unit()) return {true, 0, true};
  if (monomial_krull_dimension(lead) > 1) return {};

  unsigned bound = 0;
  for (const auto& m : lead) bound += m.degree();
  const unsigned degree = count_standard(lead, bound);
  if (count_standard(lead, bound + 1) != degree)
    throw Error(ErrorCode::Internal, "Hilbert function of a zero-dimensional scheme did not stabilize");

  ZeroDimReport report{true, degree, true};
  report.is_reduced = distinct_points(a.with_order(MonomialOrder::grevlex()), degree) == degree;
  return report;
}

std::optional<Poly> univariate_relation(const Ideal& a, Var v, VarMask ring_vars) {
  const VarMask others = VarMask(ring_vars & ~mask_of(v));
  const MonomialOrder order = others ? MonomialOrder::eliminating(others) : MonomialOrder::grevlex();
  for (const auto& g : groebner(a.generators(), order)) {
    bool only_v = true;
    for (const auto& t : g.terms())
      if (t.mono.degree() != t.mono[v]) only_v = false;
    if (only_v) return g.with_order(a.order()).monic();
  }
  return std::nullopt;
}

Poly squarefree_part(const Poly& p, Var v) {
  const Dense d = to_dense(p, v);
  if (d.size() <= 1) return p;
  Dense deriv(d.size() - 1);
  for (std::size_t e = 1; e < d.size(); ++e) deriv[e - 1] = d[e] * unsigned(e);
  const Dense g = gcd(d, deriv);
  const Dense q = divmod(d, g).first;
  return from_dense(q, v, p.order()).monic();
}

Ideal radical_zero_dim(const Ideal& a, VarMask ring_vars) {
  if (a.is_unit()) return a;
  std::vector<Poly> gens = a.generators();
  for (int i = 0; i < kNumVars; ++i) {
    if (!(ring_vars & (1u << i))) continue;
    const Var v = static_cast<Var>(i);
    auto rel = univariate_relation(a, v, ring_vars);
    if (!rel)
      throw Error(ErrorCode::NotZeroDimensional,
                  std::string("no univariate relation in ") + var_name(v) + ": ideal is not zero-dimensional");
    gens.push_back(squarefree_part(*rel, v));
  }
  return Ideal(std::move(gens), a.order());
}

}  // namespace arrmi
