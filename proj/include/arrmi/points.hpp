#pragma once

#include <array>
#include <vector>

#include "arrmi/ideal.hpp"
#include "arrmi/linalg.hpp"

namespace arrmi {

// A point of the projective plane, i.e. a line through the origin of affine
// 3-space. Coordinates are scaled so the first nonzero one is 1, which makes
// equality literal.
class PointP2 {
 public:
  /// Throws Error(InvalidArgument) when all coordinates are zero.
  PointP2(Rat x, Rat y, Rat z);

  const std::array<Rat, 3>& coords() const { return c_; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }

  /// The two linear forms spanning the point's ideal, read off the reduced
  /// echelon kernel of the 1x3 evaluation row.
  std::array<Poly, 2> linear_forms() const;
  Ideal prime() const;

  Rat evaluate(const Poly& p) const { return p.evaluate(c_); }

  std::string to_string() const;

  friend bool operator==(const PointP2& a, const PointP2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PointP2& a, const PointP2& b) { return !(a == b); }

 private:
  std::array<Rat, 3> c_;
};

// Nonempty set of pairwise distinct points: a reduced line arrangement.
class PointSet {
 public:
  /// Throws Error(InvalidArgument) on an empty list or a repeated point.
  explicit PointSet(std::vector<PointP2> points);

  std::size_t size() const { return points_.size(); }
  const PointP2& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const std::vector<PointP2>& points() const { return points_; }

 private:
  std::vector<PointP2> points_;
};

bool vanishes_on(const Poly& p, const PointSet& z);

/// Degree-d forms through every point, as an echelon basis over the grevlex
/// monomial list (kernel of the point-evaluation matrix).
struct GradedPiece {
  unsigned degree = 0;
  std::vector<Poly> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Evaluation matrix: one row per point, one column per degree-d monomial.
RatMatrix evaluation_matrix(const PointSet& z, unsigned d);

GradedPiece graded_piece(const PointSet& z, unsigned d);

/// Saturated homogeneous ideal of z, generated by its graded pieces up to one
/// past the degree where the points impose independent conditions.
Ideal ideal_of_points(const PointSet& z);

/// Intersection of the k-th powers of the point primes; k = 0 is the unit
/// ideal.
Ideal symbolic_power(const PointSet& z, unsigned k);

}  // namespace arrmi
