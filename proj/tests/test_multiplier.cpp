#include "arrmi/error.hpp"
#include "arrmi/multiplier.hpp"
#include "doctest.h"

using namespace arrmi;

namespace {

PointP2 pt(long a, long b, long c) { return PointP2(a, b, c); }
Poly P(const char* s) { return Poly::parse(s); }
Rat R(const char* s) { return parse_rat(s); }

PointSet coordinate_points() { return PointSet({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}); }
PointSet three_collinear() { return PointSet({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)}); }
PointSet six_on_conic() {
  std::vector<PointP2> pts;
  for (long t : {0, 1, -1, 2, -2, 3}) pts.push_back(pt(1, t, t * t));
  return PointSet(pts);
}
PointSet four_with_three_collinear() { return PointSet({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(0, 0, 1)}); }

// Every monomial of degree <= max_degree - a*deg F, times F^a, for a <= 3.
std::vector<Poly> test_forms(const Poly& f, unsigned max_degree) {
  std::vector<Poly> out;
  Poly power = Poly::constant(1);
  for (unsigned a = 0; a <= 3; ++a) {
    const unsigned used = a * unsigned(f.degree());
    if (used > max_degree) break;
    for (unsigned k = 0; k + used <= max_degree; ++k)
      for (const auto& m : monomials_of_degree(k)) out.push_back(Poly::monomial(m) * power);
    power = power * f;
  }
  return out;
}

struct Fixture {
  PointSet z;
  Classification c;
};

std::vector<Fixture> supported_fixtures() {
  std::vector<Fixture> out;
  for (const auto& z : {coordinate_points(), three_collinear(), six_on_conic(), generate_general_points(6, 21),
                        generate_general_points(8, 22)})
    out.push_back({z, classify(z)});
  return out;
}

}  // namespace

TEST_CASE("powers of the maximal ideal") {
  CHECK(power_of_m(-1).is_unit());
  CHECK(power_of_m(0).is_unit());
  CHECK(power_of_m(2) == Ideal::parse({"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
  CHECK(power_of_m(1) == maximal_ideal());
}

TEST_CASE("case A closed form at the coordinate points") {
  const Classification c = classify(coordinate_points());
  CHECK(multiplier_ideal(c, 0).ideal.is_unit());
  CHECK(multiplier_ideal(c, 1).ideal.is_unit());
  const auto at = multiplier_ideal(c, R("3/2"));
  CHECK(at.ideal == maximal_ideal());
  CHECK(at.branch == "A[0,2)");
  const auto two = multiplier_ideal(c, 2);
  CHECK(two.branch == "A[2,3)");
  CHECK(two.ideal == truncate(c.ideal, 2));
}

TEST_CASE("case B threshold for three collinear points") {
  const Classification c = classify(three_collinear());
  const auto at = multiplier_ideal(c, R("5/3"));
  CHECK(at.branch == "B[1,2)");
  CHECK_FALSE(at.ideal.is_unit());
  CHECK(multiplier_ideal(c, R("5/3") - R("1/100")).ideal.is_unit());
}

TEST_CASE("log canonical thresholds") {
  CHECK(lct(classify(coordinate_points())) == R("3/2"));
  CHECK(lct(classify(three_collinear())) == R("5/3"));
  CHECK(lct(classify(six_on_conic())) == R("4/3"));
  CHECK(lct(classify(generate_general_points(6, 7))) == 1);
  CHECK(lct(classify(PointSet({pt(1, 0, 0)}))) == 2);
  CHECK_THROWS_AS(lct(classify(four_with_three_collinear())), Error);
}

TEST_CASE("jumping numbers") {
  const auto coord = jumping_numbers(classify(coordinate_points()), 2);
  REQUIRE_FALSE(coord.jumps.empty());
  CHECK(coord.jumps.front().lambda == R("3/2"));
  CHECK(coord.jumps.front().ideal == maximal_ideal());
  CHECK(coord.lct == R("3/2"));

  const auto conic = jumping_numbers(classify(six_on_conic()), 2);
  REQUIRE(conic.lct);
  CHECK(*conic.lct == R("4/3"));

  const auto early = jumping_numbers(classify(coordinate_points()), 1);
  CHECK(early.jumps.empty());
  CHECK_FALSE(early.lct);

  for (std::size_t i = 0; i + 1 < conic.jumps.size(); ++i) {
    CHECK(conic.jumps[i].lambda < conic.jumps[i + 1].lambda);
    CHECK(conic.jumps[i].ideal.contains(conic.jumps[i + 1].ideal));
    CHECK(conic.jumps[i].ideal != conic.jumps[i + 1].ideal);
  }
}

TEST_CASE("candidate grid") {
  const auto cand = jump_candidates(classify(three_collinear()), 2);
  const std::vector<Rat> expected{R("1/3"), R("2/3"), 1, R("4/3"), R("5/3"), 2};
  CHECK(cand == expected);
}

TEST_CASE("argument errors") {
  const Classification c = classify(coordinate_points());
  CHECK_THROWS_AS(multiplier_ideal(c, -1), Error);
  CHECK_THROWS_AS(multiplier_ideal(c, 11), Error);
  CHECK_THROWS_AS(jumping_numbers(c, 11), Error);
  try {
    multiplier_ideal(classify(four_with_three_collinear()), 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
    CHECK(std::string(e.what()).find("different dimensions") != std::string::npos);
  }
  const PointSet eight = generate_general_points(8, 3);
  CHECK_THROWS_AS(membership_by_valuation(classify(eight), eight, P("x"), 1), Error);
}

TEST_CASE("valuation test examples") {
  const PointSet coord = coordinate_points();
  CHECK(membership_by_valuation(classify(coord), coord, P("x"), R("3/2")));
  CHECK_FALSE(membership_by_valuation(classify(coord), coord, P("x"), 2));
  const PointSet line = three_collinear();
  CHECK(membership_by_valuation(classify(line), line, P("z"), 1));
  const auto [a, h] = split_power(P("z^3*x"), P("z"));
  CHECK(a == 3);
  CHECK(h == P("x"));
}

TEST_CASE("property: valuation test agrees with the assembled ideal") {
  for (const auto& z : {three_collinear(), six_on_conic(), coordinate_points()}) {
    const Classification c = classify(z);
    const Poly f = c.case_name() == "B" ? std::get<CaseB>(c.data).form : P("x");
    const auto forms = test_forms(f, 8);
    for (const Rat& lambda : jump_candidates(c, R("29/10"))) {
      CAPTURE(to_string(lambda));
      const Ideal j = multiplier_ideal(c, lambda).ideal;
      for (const auto& g : forms) {
        CAPTURE(g.to_string());
        CHECK(membership_by_valuation(c, z, g, lambda) == j.contains(g));
      }
    }
  }
}

TEST_CASE("property: monotone in λ, unit below the threshold, proper at it") {
  for (const auto& [z, c] : supported_fixtures()) {
    CAPTURE(c.case_name());
    const unsigned step = 2 * c.d() * c.e().value_or(1);
    std::optional<Ideal> previous;
    for (long k = 0; Rat(k, step) <= 4; ++k) {
      const Rat lambda = frac(k, long(step));
      const Ideal j = multiplier_ideal(c, lambda).ideal;
      for (const auto& g : j.generators()) CHECK(g.is_homogeneous());
      if (previous) CHECK(previous->contains(j));
      if (lambda < lct(c)) CHECK(j.is_unit());
      previous = j;
    }
    CHECK_FALSE(multiplier_ideal(c, lct(c)).ideal.is_unit());
    CHECK(jumping_numbers(c, 2).lct == lct(c));
  }
}

TEST_CASE("property: I^⌈λ⌉ lies in J(I^λ) and Skoda consistency") {
  for (const auto& [z, c] : supported_fixtures()) {
    CAPTURE(c.case_name());
    for (const char* s : {"1/2", "1", "3/2", "2", "5/2", "3"}) {
      const Rat lambda = R(s);
      const Ideal j = multiplier_ideal(c, lambda).ideal;
      CHECK(j.contains(ideal_power(c.ideal, unsigned(ceil(lambda).get_si()))));
      CHECK(j.contains(c.ideal * j));
    }
    for (const char* s : {"3", "10/3", "7/2"}) {
      const Rat lambda = R(s);
      const auto r = multiplier_ideal(c, lambda);
      CHECK(r.branch == "skoda-recursion");
      CHECK(r.ideal == c.ideal * multiplier_ideal(c, lambda - 1).ideal);
    }
  }
}
