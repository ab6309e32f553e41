#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrmi/multiplier.hpp"

namespace arrmi {

// Newton polyhedron conv(exponents) + (nonnegative orthant) of a monomial
// ideal, as the list of its facet inequalities normal·v >= offset.
class NewtonPolyhedron {
 public:
  using Point = std::array<long, 3>;
  struct Facet {
    std::array<Rat, 3> normal;  // nonnegative, primitive integer vector
    Rat offset;
  };

  /// Throws Error(InvalidArgument) on an empty generator list.
  explicit NewtonPolyhedron(const std::vector<Monomial>& gens);

  const std::vector<Point>& exponent_points() const { return points_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const std::array<Rat, 3>& v) const;
  /// v lies strictly inside lambda * P.
  bool in_scaled_interior(const std::array<Rat, 3>& v, const Rat& lambda) const;

 private:
  std::vector<Point> points_;
  std::vector<Facet> facets_;
};

/// Multiplier ideal of a monomial ideal: generated by the x^v with v + (1,1,1)
/// strictly inside lambda times the Newton polyhedron.
Ideal monomial_mi(const std::vector<Monomial>& gens, const Rat& lambda);

/// Checks, in Q[x, y, z] with R = Q[y, z] and x the extra variable,
///   sum_k x^{a_k} J_k  ==  x^{a_1} * intersect_k (J_1 + ... + J_k + (x^{a_{k+1} - a_1}))
/// where the last term of the intersection has no power of x.
/// Throws Error(InvalidArgument) if the lists differ in length or are empty,
/// the exponents are not strictly increasing, or some J_k involves x.
bool verify_chart_identity(const std::vector<Ideal>& js, const std::vector<unsigned>& exponents);

struct CheckResult {
  std::string name;
  std::optional<Rat> lambda;
  bool passed = true;
  std::string witness;  // first counterexample when the check fails
};

struct CrossCheckReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs every applicable oracle on the arrangement over the grid: the
/// Newton-polyhedron comparison when the ideal is monomial, the valuation
/// test on monomial·F^a forms of degree <= 8 in cases A and B, and the
/// monotonicity and I^ceil(λ) containment checks.
CrossCheckReport cross_check(const PointSet& z, const std::vector<Rat>& grid);
CrossCheckReport cross_check(const PointSet& z, const Classification& c, const std::vector<Rat>& grid);

}  // namespace arrmi
