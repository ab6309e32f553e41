#include "arrmi/envelope.hpp"

#include <algorithm>
#include <random>

#include "arrmi/error.hpp"

namespace arrmi {

std::string to_string(EnvelopeShape shape) {
  switch (shape) {
    case EnvelopeShape::AllOfPlane: return "all-of-plane";
    case EnvelopeShape::Curve: return "curve";
    case EnvelopeShape::FiniteScheme: return "finite-scheme";
    case EnvelopeShape::EqualsZ: return "equals-Z";
    case EnvelopeShape::Mixed: return "mixed";
  }
  return "?";
}

Ideal envelope(const PointSet& z, unsigned d) {
  GradedPiece piece = graded_piece(z, d);
  if (piece.basis.empty()) return Ideal::zero();
  return saturate(Ideal(std::move(piece.basis)), maximal_ideal());
}

namespace {

EnvelopeShape shape_of(const Ideal& env, const Ideal& target) {
  if (env.is_zero()) return EnvelopeShape::AllOfPlane;
  if (env == target) return EnvelopeShape::EqualsZ;
  if (env.is_principal()) return EnvelopeShape::Curve;
  if (zero_dim_report(env).is_zero_dimensional) return EnvelopeShape::FiniteScheme;
  return EnvelopeShape::Mixed;
}

unsigned binom2(unsigned k) { return k * (k - 1) / 2; }  // C(k, 2)
unsigned dim_forms(unsigned d) { return binom2(d + 2); }  // dim S_d

}  // namespace

EnvelopeReport envelope_report(const PointSet& z) {
  EnvelopeReport report;
  const Ideal target = ideal_of_points(z);
  Ideal previous = Ideal::zero();
  const unsigned limit = unsigned(z.size()) + 2;
  for (unsigned d = 1;; ++d) {
    if (d > limit)
      throw Error(ErrorCode::Internal, "envelope chain did not reach Z by degree " + std::to_string(limit));
    Ideal env = envelope(z, d);
    const EnvelopeShape shape = shape_of(env, target);
    if (env != previous) report.ggds.push_back(d);
    report.entries.push_back({d, env, shape});
    if (shape == EnvelopeShape::EqualsZ) break;
    previous = std::move(env);
  }
  report.generator_degrees = generator_degrees(z);
  return report;
}

std::vector<unsigned> geometric_generating_degrees(const PointSet& z) { return envelope_report(z).ggds; }

std::vector<unsigned> generator_degrees(const PointSet& z) {
  const Ideal ideal = ideal_of_points(z);
  unsigned top = 0;
  for (const auto& g : ideal.groebner_basis()) top = std::max(top, unsigned(g.degree()));

  std::vector<unsigned> out;
  GradedPiece below = graded_piece(z, 0);
  for (unsigned d = 1; d <= top; ++d) {
    GradedPiece piece = graded_piece(z, d);
    const auto monos = monomials_of_degree(d);
    std::vector<RatVector> rows;
    for (const auto& b : below.basis) {
      for (Var v : kPlaneVars) {
        const Poly shifted = b * Poly::variable(v);
        RatVector row(monos.size());
        for (const auto& t : shifted.terms())
          row[std::find(monos.begin(), monos.end(), t.mono) - monos.begin()] = t.coef;
        rows.push_back(std::move(row));
      }
    }
    const std::size_t spanned = row_space_basis(rows, monos.size()).size();
    if (piece.dimension() > spanned) out.push_back(d);
    below = std::move(piece);
  }
  return out;
}

bool is_smooth_plane_curve(const Poly& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
    throw Error(ErrorCode::InvalidArgument, "expected a nonconstant form, got " + f.to_string());
  std::vector<Poly> gens{f};
  for (Var v : kPlaneVars) gens.push_back(f.derivative(v));
  return saturate(Ideal(std::move(gens)), maximal_ideal()).is_unit();
}

std::string Classification::case_name() const {
  switch (data.index()) {
    case 0: return "A";
    case 1: return "B";
    case 2: return "C";
    default: return "unsupported";
  }
}

unsigned Classification::d() const {
  if (ggds.empty()) throw Error(ErrorCode::Internal, "classification without generating degrees");
  return ggds.front();
}

std::optional<unsigned> Classification::e() const {
  if (const auto* b = std::get_if<CaseB>(&data)) return b->e;
  if (const auto* c = std::get_if<CaseC>(&data)) return c->e;
  return std::nullopt;
}

Classification classify(const PointSet& z) { return classify(z, envelope_report(z)); }

Classification classify(const PointSet& z, const EnvelopeReport& report) {
  Classification c{ideal_of_points(z), report.ggds, report.generator_degrees, Unsupported{}};
  const auto& ggds = report.ggds;
  if (ggds.size() == 1) {
    c.data = CaseA{ggds[0]};
    return c;
  }
  if (ggds.size() != 2) {
    c.data = Unsupported{std::to_string(ggds.size()) + " geometric generating degrees"};
    return c;
  }
  const unsigned d = ggds[0], e = ggds[1];
  const Ideal& zd = report.entries.at(d - 1).ideal;
  if (zd.is_principal()) {
    const Poly form = zd.groebner_basis().front().monic();
    if (form.degree() != int(d)) {
      c.data = Unsupported{"intermediate envelope is a curve of degree " + std::to_string(form.degree()) +
                           ", not " + std::to_string(d)};
    } else if (!is_smooth_plane_curve(form)) {
      c.data = Unsupported{"intermediate envelope is a singular curve"};
    } else {
      c.data = CaseB{d, e, form};
    }
    return c;
  }
  const ZeroDimReport rep = zero_dim_report(zd);
  if (!rep.is_zero_dimensional) {
    c.data = Unsupported{"intermediate envelope has components of different dimensions"};
  } else if (!rep.is_reduced) {
    c.data = Unsupported{"intermediate envelope is a non-reduced finite scheme"};
  } else {
    Ideal residual = saturate(ideal_quotient(zd, c.ideal), maximal_ideal());
    c.data = CaseC{d, e, std::move(residual), zd, rep.degree};
  }
  return c;
}

GeneralPrediction predict_general(unsigned n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "predictions need at least two points");
  unsigned d = 1;
  while (dim_forms(d) <= n) ++d;
  const unsigned r = dim_forms(d) - n;
  GeneralPrediction p{n, d, r, "", {}};
  if (r == 1) {
    p.expected_case = "B";
    p.ggds = {d, d + 1};
  } else if (r == 2 && d > 2) {
    p.expected_case = "C";
    p.ggds = {d, d + 1};
  } else {
    p.expected_case = "A";
    p.ggds = {d};
  }
  return p;
}

bool has_generic_hilbert_function(const PointSet& z) {
  const unsigned n = unsigned(z.size());
  unsigned d = 1;
  while (dim_forms(d) <= n) ++d;
  for (unsigned t = 1; t <= d + 1; ++t) {
    const unsigned expected = dim_forms(t) > n ? dim_forms(t) - n : 0;
    if (graded_piece(z, t).dimension() != expected) return false;
  }
  return true;
}

PointSet generate_general_points(unsigned n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot generate an empty arrangement");
  constexpr long kBound = 50;
  constexpr int kAttempts = 20;
  std::mt19937_64 rng(seed);
  auto coordinate = [&] { return Rat(long(rng() % (2 * kBound + 1)) - kBound); };
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<PointP2> points;
    while (points.size() < n) {
      Rat x = coordinate(), y = coordinate(), w = coordinate();
      if (x == 0 && y == 0 && w == 0) continue;
      PointP2 p(x, y, w);
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    PointSet z(std::move(points));
    if (has_generic_hilbert_function(z)) return z;
  }
  throw Error(ErrorCode::Internal, "no sufficiently general sample after 20 attempts");
}

}  // namespace arrmi
