#include "arrmi/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "arrmi/error.hpp"

namespace arrmi {

namespace {

using Vec = NewtonPolyhedron::Point;

Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Scales n to a primitive vector with nonnegative entries; nullopt when n is
// zero or has entries of both signs.
std::optional<Vec> orient(Vec n) {
  const bool nonneg = std::all_of(n.begin(), n.end(), [](long c) { return c >= 0; });
  const bool nonpos = std::all_of(n.begin(), n.end(), [](long c) { return c <= 0; });
  if (nonneg && nonpos) return std::nullopt;
  if (!nonneg && !nonpos) return std::nullopt;
  if (nonpos)
    for (auto& c : n) c = -c;
  long g = 0;
  for (long c : n) g = std::gcd(g, c);
  for (auto& c : n) c /= g;
  return n;
}

Rat dot(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

// monomial·F^a for every a <= max_power and total degree <= max_degree.
std::vector<Poly> test_forms(const Poly& f, unsigned max_power, unsigned max_degree) {
  std::vector<Poly> out;
  Poly power = Poly::constant(1);
  for (unsigned a = 0; a <= max_power; ++a) {
    const unsigned used = a * unsigned(f.degree());
    if (used > max_degree) break;
    for (unsigned k = 0; k + used <= max_degree; ++k)
      for (const auto& m : monomials_of_degree(k)) out.push_back(Poly::monomial(m) * power);
    power = power * f;
  }
  return out;
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "Newton polyhedron of an empty generator list");
  for (const auto& m : gens) {
    const Vec p{long(m.exp[0]), long(m.exp[1]), long(m.exp[2])};
    if (std::find(points_.begin(), points_.end(), p) == points_.end()) points_.push_back(p);
  }
  std::sort(points_.begin(), points_.end());

  // Every facet is spanned at some exponent point by two directions taken
  // from edges to other points and the coordinate rays.
  std::vector<Vec> found;
  for (const Vec& p : points_) {
    std::vector<Vec> dirs{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const Vec& q : points_)
      if (q != p) dirs.push_back(sub(q, p));
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        const auto n = orient(cross(dirs[i], dirs[j]));
        if (!n) continue;
        const long at_p = dot(*n, p);
        const bool supporting = std::all_of(points_.begin(), points_.end(),
                                            [&](const Vec& q) { return dot(*n, q) >= at_p; });
        if (supporting && std::find(found.begin(), found.end(), *n) == found.end()) found.push_back(*n);
      }
  }
  std::sort(found.begin(), found.end());
  for (const Vec& n : found) {
    long offset = dot(n, points_.front());
    for (const Vec& q : points_) offset = std::min(offset, dot(n, q));
    facets_.push_back({{Rat(n[0]), Rat(n[1]), Rat(n[2])}, Rat(offset)});
  }
}

bool NewtonPolyhedron::contains(const std::array<Rat, 3>& v) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, v) >= f.offset; });
}

bool NewtonPolyhedron::in_scaled_interior(const std::array<Rat, 3>& v, const Rat& lambda) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, v) > lambda * f.offset; });
}

Ideal monomial_mi(const std::vector<Monomial>& gens, const Rat& lambda) {
  const NewtonPolyhedron poly(gens);
  long top = 0;
  for (const auto& p : poly.exponent_points()) top = std::max({top, p[0], p[1], p[2]});
  // A generator with a coordinate above ceil(λ·top) stays inside after
  // lowering that coordinate, so minimal generators lie well inside this box.
  const long bound = ceil(lambda * Rat(top)).get_si() + 3;
  auto qualifies = [&](long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) return false;
    return poly.in_scaled_interior({Rat(a + 1), Rat(b + 1), Rat(c + 1)}, lambda);
  };
  std::vector<Poly> out;
  for (long a = 0; a <= bound; ++a)
    for (long b = 0; b <= bound; ++b)
      for (long c = 0; c <= bound; ++c)
        if (qualifies(a, b, c) && !qualifies(a - 1, b, c) && !qualifies(a, b - 1, c) && !qualifies(a, b, c - 1))
          out.push_back(Poly::monomial(Monomial::xyz(unsigned(a), unsigned(b), unsigned(c))));
  return Ideal(std::move(out));
}

bool verify_chart_identity(const std::vector<Ideal>& js, const std::vector<unsigned>& exponents) {
  if (js.empty() || js.size() != exponents.size())
    throw Error(ErrorCode::InvalidArgument, "chart identity needs matching nonempty ideal and exponent lists");
  for (std::size_t k = 1; k < exponents.size(); ++k)
    if (exponents[k] <= exponents[k - 1])
      throw Error(ErrorCode::InvalidArgument, "chart identity exponents must be strictly increasing");
  for (const auto& j : js)
    if (j.involves(Var::X) || j.involves(Var::T))
      throw Error(ErrorCode::InvalidArgument, "chart identity ideals must live in y, z");

  const Poly x = Poly::variable(Var::X);
  Ideal left = Ideal::zero();
  for (std::size_t k = 0; k < js.size(); ++k) left = left + x.pow(exponents[k]) * js[k];

  std::vector<Ideal> pieces;
  Ideal partial = Ideal::zero();
  for (std::size_t k = 0; k < js.size(); ++k) {
    partial = partial + js[k];
    if (k + 1 < js.size())
      pieces.push_back(partial + Ideal({x.pow(exponents[k + 1] - exponents[0])}));
    else
      pieces.push_back(partial);
  }
  const Ideal right = x.pow(exponents[0]) * ideal_intersect(pieces);
  return left == right;
}

bool CrossCheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CrossCheckReport cross_check(const PointSet& z, const std::vector<Rat>& grid) {
  return cross_check(z, classify(z), grid);
}

CrossCheckReport cross_check(const PointSet& z, const Classification& c, const std::vector<Rat>& grid) {
  CrossCheckReport report;
  if (const auto* u = std::get_if<Unsupported>(&c.data)) {
    report.checks.push_back({"classification", std::nullopt, false, "unsupported: " + u->reason});
    return report;
  }
  std::vector<Rat> lambdas = grid;
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  std::vector<Ideal> values;
  for (const Rat& l : lambdas) values.push_back(multiplier_ideal(c, l).ideal);

  if (!c.ideal.is_zero() && c.ideal.is_monomial()) {
    std::vector<Monomial> gens;
    for (const auto& g : c.ideal.groebner_basis()) gens.push_back(g.leading_monomial());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const Ideal expected = monomial_mi(gens, lambdas[i]);
      CheckResult r{"monomial-oracle", lambdas[i], expected == values[i], ""};
      if (!r.passed) r.witness = "Newton polyhedron gives [" + join(expected.basis_strings()) + "]";
      report.checks.push_back(std::move(r));
    }
  }

  if (!std::holds_alternative<CaseC>(c.data)) {
    const auto* b = std::get_if<CaseB>(&c.data);
    const auto forms = b ? test_forms(b->form, 3, 8) : test_forms(Poly::constant(1), 0, 8);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      if (lambdas[i] >= 3) continue;
      CheckResult r{"valuation-oracle", lambdas[i], true, ""};
      for (const auto& g : forms) {
        const bool by_valuation = membership_by_valuation(c, z, g, lambdas[i]);
        if (by_valuation != values[i].contains(g)) {
          r.passed = false;
          r.witness = g.to_string() + (by_valuation ? " passes the valuation test but is not in J"
                                                    : " is in J but fails the valuation test");
          break;
        }
      }
      report.checks.push_back(std::move(r));
    }
  }

  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
    CheckResult r{"monotonicity", lambdas[i + 1], values[i].contains(values[i + 1]), ""};
    if (!r.passed) r.witness = "J(" + to_string(lambdas[i + 1]) + ") is not contained in J(" + to_string(lambdas[i]) + ")";
    report.checks.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const unsigned k = unsigned(ceil(lambdas[i]).get_si());
    const Ideal power = ideal_power(c.ideal, k);
    CheckResult r{"power-containment", lambdas[i], values[i].contains(power), ""};
    if (!r.passed) r.witness = "I^" + std::to_string(k) + " is not contained in J";
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace arrmi
