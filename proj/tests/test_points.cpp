#include <random>

#include "arrmi/error.hpp"
#include "arrmi/points.hpp"
#include "doctest.h"

using namespace arrmi;

namespace {

PointP2 pt(long a, long b, long c) { return PointP2(a, b, c); }
Ideal I(std::vector<std::string> gens) { return Ideal::parse(gens); }

std::vector<int> basis_degrees(const Ideal& a) {
  std::vector<int> out;
  for (const auto& g : a.groebner_basis()) out.push_back(g.degree());
  std::sort(out.begin(), out.end());
  return out;
}

unsigned dim_forms(unsigned d) { return (d + 1) * (d + 2) / 2; }

PointSet random_points(std::mt19937_64& rng, unsigned n) {
  std::vector<PointP2> pts;
  while (pts.size() < n) {
    long a = long(rng() % 9) - 4, b = long(rng() % 9) - 4, c = long(rng() % 9) - 4;
    if (a == 0 && b == 0 && c == 0) continue;
    PointP2 p(a, b, c);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointSet(pts);
}

}  // namespace

TEST_CASE("points normalize so the first nonzero coordinate is 1") {
  CHECK(pt(2, 4, 6) == pt(1, 2, 3));
  CHECK(pt(0, -3, 6) == pt(0, 1, -2));
  CHECK(pt(0, 0, 5).to_string() == "[0:0:1]");
  CHECK(PointP2(frac(1, 2), 1, 0).to_string() == "[1:2:0]");
  CHECK_THROWS_AS(pt(0, 0, 0), Error);
}

TEST_CASE("point sets reject duplicates") {
  CHECK_THROWS_AS(PointSet({pt(1, 0, 0), pt(2, 0, 0)}), Error);
  CHECK_THROWS_AS(PointSet({}), Error);
}

TEST_CASE("single point and coordinate points") {
  CHECK(ideal_of_points(PointSet({pt(1, 0, 0)})) == I({"y", "z"}));
  const PointSet coord({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  CHECK(ideal_of_points(coord) == I({"x*y", "x*z", "y*z"}));
  CHECK(graded_piece(coord, 1).dimension() == 0);
  CHECK(graded_piece(coord, 2).dimension() == 3);
}

TEST_CASE("three collinear points have generators in degrees 1 and 3") {
  const PointSet line({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)});
  const Ideal a = ideal_of_points(line);
  CHECK(basis_degrees(a) == std::vector<int>{1, 3});
  CHECK(a.contains(Poly::parse("z")));
  CHECK(a.contains(Poly::parse("x*y*(x - y)")));
  CHECK(graded_piece(line, 1).dimension() == 1);
  CHECK(graded_piece(line, 2).dimension() == 3);
}

TEST_CASE("linear forms of a point cut it out") {
  for (const auto& p : {pt(1, 2, 3), pt(0, 1, -5), pt(0, 0, 1)}) {
    for (const auto& l : p.linear_forms()) CHECK(p.evaluate(l) == 0);
    CHECK(zero_dim_report(p.prime()).degree == 1);
  }
}

TEST_CASE("second symbolic power of the coordinate points") {
  const PointSet coord({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  const Ideal s2 = symbolic_power(coord, 2);
  const Ideal ordinary = ideal_power(ideal_of_points(coord), 2);
  CHECK(s2.contains(Poly::parse("x*y*z")));
  CHECK_FALSE(ordinary.contains(Poly::parse("x*y*z")));
  CHECK(s2.contains(ordinary));
  CHECK(symbolic_power(coord, 0).is_unit());
}

TEST_CASE("property: Hilbert function and graded pieces of random point sets") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned n = 1 + rng() % 6;
    const PointSet z = random_points(rng, n);
    const Ideal a = ideal_of_points(z);
    // In degree >= n - 1 the points impose independent conditions.
    for (unsigned d = n - 1; d <= n + 1; ++d) CHECK(graded_piece(z, d).dimension() + n == dim_forms(d));
    for (unsigned d = 0; d <= 4; ++d) {
      const auto piece = graded_piece(z, d);
      CHECK(piece.dimension() == dim_forms(d) - hilbert_function(a, d));
      for (const auto& f : piece.basis) {
        CHECK(vanishes_on(f, z));
        CHECK(a.contains(f));
      }
    }
    CHECK(symbolic_power(z, 1) == a);
    CHECK(symbolic_power(z, 2).contains(ideal_power(a, 2)));
    const auto rep = zero_dim_report(a);
    CHECK(rep.degree == n);
    CHECK(rep.is_reduced);
  }
}

TEST_CASE("property: ideal of points equals the intersection of the point primes") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet z = random_points(rng, 1 + rng() % 7);
    std::vector<Ideal> primes;
    for (const auto& p : z) primes.push_back(p.prime());
    CHECK(ideal_of_points(z) == ideal_intersect(primes));
  }
}
