#include "arrmi/points.hpp"

#include "arrmi/error.hpp"

namespace arrmi {

PointP2::PointP2(Rat x, Rat y, Rat z) : c_{std::move(x), std::move(y), std::move(z)} {
  std::size_t lead = 0;
  while (lead < 3 && sgn(c_[lead]) == 0) ++lead;
  if (lead == 3) throw Error(ErrorCode::InvalidArgument, "the point [0:0:0] is not in the projective plane");
  const Rat scale = c_[lead];
  for (auto& c : c_) c /= scale;
}

std::array<Poly, 2> PointP2::linear_forms() const {
  RatMatrix row(1, 3);
  for (std::size_t i = 0; i < 3; ++i) row(0, i) = c_[i];
  const auto kernel = kernel_basis(row);
  std::array<Poly, 2> forms;
  for (std::size_t k = 0; k < 2; ++k) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < 3; ++i) terms.push_back({Monomial::var(static_cast<Var>(i)), kernel[k][i]});
    forms[k] = Poly::from_terms(std::move(terms));
  }
  return forms;
}

Ideal PointP2::prime() const {
  auto forms = linear_forms();
  return Ideal({forms[0], forms[1]});
}

std::string PointP2::to_string() const {
  return "[" + arrmi::to_string(c_[0]) + ":" + arrmi::to_string(c_[1]) + ":" + arrmi::to_string(c_[2]) + "]";
}

PointSet::PointSet(std::vector<PointP2> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::InvalidArgument, "an arrangement needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points_[i] == points_[j])
        throw Error(ErrorCode::InvalidArgument,
                    "repeated point " + points_[i].to_string() + " (entries " + std::to_string(j) + " and " +
                        std::to_string(i) + ")");
}

bool vanishes_on(const Poly& p, const PointSet& z) {
  for (const auto& pt : z)
    if (sgn(pt.evaluate(p)) != 0) return false;
  return true;
}

RatMatrix evaluation_matrix(const PointSet& z, unsigned d) {
  const auto monos = monomials_of_degree(d);
  RatMatrix m(z.size(), monos.size());
  for (std::size_t r = 0; r < z.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) m(r, c) = Poly::monomial(monos[c]).evaluate(z[r].coords());
  return m;
}

GradedPiece graded_piece(const PointSet& z, unsigned d) {
  const auto monos = monomials_of_degree(d);
  GradedPiece piece{d, {}};
  for (const auto& v : kernel_basis(evaluation_matrix(z, d))) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (sgn(v[c]) != 0) terms.push_back({monos[c], v[c]});
    piece.basis.push_back(Poly::from_terms(std::move(terms)));
  }
  return piece;
}

Ideal ideal_of_points(const PointSet& z) {
  // The points impose independent conditions from degree t on, and the
  // saturated ideal is generated in degrees <= t + 1.
  const std::size_t n = z.size();
  std::vector<Poly> gens;
  for (unsigned d = 1;; ++d) {
    GradedPiece piece = graded_piece(z, d);
    const bool independent = piece.dimension() + n == monomials_of_degree(d).size();
    for (auto& f : piece.basis) gens.push_back(std::move(f));
    if (independent) {
      for (auto& f : graded_piece(z, d + 1).basis) gens.push_back(std::move(f));
      return Ideal(Ideal(std::move(gens)).groebner_basis());
    }
  }
}

Ideal symbolic_power(const PointSet& z, unsigned k) {
  if (k == 0) return Ideal::unit();
  std::vector<Ideal> parts;
  for (const auto& p : z) parts.push_back(ideal_power(p.prime(), k));
  return ideal_intersect(parts);
}

}  // namespace arrmi
