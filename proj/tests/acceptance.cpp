// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arrmi/error.hpp"
#include "arrmi/oracle.hpp"

using namespace arrmi;

namespace {

// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    if (count_ > failures_.size()) s += "; +" + std::to_string(count_ - failures_.size()) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

struct Named {
  std::string name;
  PointSet z;
};

PointP2 pt(long a, long b, long c) { return PointP2(a, b, c); }

PointSet coordinate_points() { return PointSet({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}); }
PointSet three_collinear() { return PointSet({pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)}); }
PointSet six_on_conic() {
  std::vector<PointP2> pts;
  for (long t : {0, 1, -1, 2, -2, 3}) pts.push_back(pt(1, t, t * t));
  return PointSet(pts);
}
// Integral points of the smooth cubic y^2 z = x^3 + 17 z^3 and its flex [0:1:0].
PointSet eleven_on_cubic() {
  std::vector<PointP2> pts{pt(0, 1, 0)};
  for (auto [x, y] : {std::pair{-2L, 3L}, {-1L, 4L}, {2L, 5L}, {4L, 9L}, {8L, 23L}}) {
    pts.push_back(pt(x, y, 1));
    pts.push_back(pt(x, -y, 1));
  }
  return PointSet(pts);
}

std::vector<Named> supported_arrangements() {
  return {{"coordinate points", coordinate_points()},
          {"3 collinear", three_collinear()},
          {"6 on a conic", six_on_conic()},
          {"4 general", generate_general_points(4, 4)},
          {"5 general", generate_general_points(5, 1)},
          {"6 general", generate_general_points(6, 21)},
          {"8 general", generate_general_points(8, 5)}};
}

std::string str(const Rat& r) { return to_string(r); }

unsigned binom2(unsigned k) { return k * (k - 1) / 2; }

// Test forms monomial·F^a of total degree <= 8, a <= 3.
std::vector<Poly> valuation_forms(const Poly& f) {
  std::vector<Poly> out;
  Poly power = Poly::constant(1);
  for (unsigned a = 0; a <= 3 && a * f.degree() <= 8; ++a) {
    for (unsigned k = 0; k + a * f.degree() <= 8; ++k)
      for (const auto& m : monomials_of_degree(k)) out.push_back(Poly::monomial(m) * power);
    power = power * f;
  }
  return out;
}

void criterion_lct(Check& check) {
  const PointSet six = generate_general_points(6, 21);
  check.expect(has_generic_hilbert_function(six), "6 seeded points fail the generality check");
  const std::vector<std::pair<Named, Rat>> cases{{{"3 non-collinear", coordinate_points()}, Rat(3, 2)},
                                                 {{"3 collinear", three_collinear()}, Rat(5, 3)},
                                                 {{"6 general", six}, Rat(1)},
                                                 {{"6 on a conic", six_on_conic()}, Rat(4, 3)}};
  for (const auto& [a, expected] : cases) {
    const Rat got = lct(classify(a.z));
    check.expect(got == expected, a.name + ": lct " + str(got) + ", expected " + str(expected));
  }
}

void criterion_general(Check& check) {
  for (unsigned n = 2; n <= 12; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const PointSet z = generate_general_points(n, 1000 + n);
    check.expect(has_generic_hilbert_function(z), tag + "generality check failed");
    unsigned d = 1;
    while ((d + 2) * (d + 1) / 2 <= n) ++d;
    const unsigned r = (d + 2) * (d + 1) / 2 - n;
    const Classification c = classify(z);
    std::vector<unsigned> expected_ggds = (r == 1 || (r == 2 && d > 2)) ? std::vector<unsigned>{d, d + 1}
                                                                         : std::vector<unsigned>{d};
    check.expect(c.ggds == expected_ggds, tag + "ggds differ");
    check.expect(graded_piece(z, d).dimension() == r && graded_piece(z, d - 1).dimension() == 0,
                 tag + "d or r differs");
    if (r == 1) {
      const auto* b = std::get_if<CaseB>(&c.data);
      check.expect(b != nullptr, tag + "expected case B, got " + c.case_name());
      if (b) {
        check.expect(b->d == d && b->form.degree() == d, tag + "curve degree differs");
        check.expect(is_smooth_plane_curve(b->form), tag + "Z_d is not a smooth curve");
      }
    } else if (r == 2 && d > 2) {
      const auto* cc = std::get_if<CaseC>(&c.data);
      check.expect(cc != nullptr, tag + "expected case C, got " + c.case_name());
      if (cc) {
        const ZeroDimReport env = zero_dim_report(cc->envelope);
        check.expect(cc->envelope_degree == d * d && env.degree == d * d, tag + "deg Z_d differs from d^2");
        check.expect(env.is_reduced, tag + "Z_d is not reduced");
        check.expect(zero_dim_report(cc->residual).degree == binom2(d - 1), tag + "|W| differs from C(d-1,2)");
        check.expect(zero_dim_report(cc->residual).is_reduced, tag + "W is not reduced");
        check.expect(ideal_intersect(cc->residual, c.ideal) == cc->envelope, tag + "Z_d differs from Z u W");
      }
    } else {
      check.expect(std::holds_alternative<CaseA>(c.data), tag + "expected case A, got " + c.case_name());
    }
  }
}

void criterion_envelopes(Check& check) {
  const PointSet five = generate_general_points(5, 1);
  const Ideal z2 = envelope(five, 2);
  check.expect(z2.is_principal() && z2.groebner_basis().front().degree() == 2, "5 general: Z_2 is not a conic");
  check.expect(geometric_generating_degrees(five) == std::vector<unsigned>{2, 3}, "5 general: ggds differ from {2,3}");

  const PointSet eight = generate_general_points(8, 5);
  const ZeroDimReport z3 = zero_dim_report(envelope(eight, 3));
  check.expect(z3.is_zero_dimensional && z3.degree == 9, "8 general: deg Z_3 = " + std::to_string(z3.degree));
  check.expect(z3.is_reduced, "8 general: Z_3 is not reduced");

  const PointSet cubic = eleven_on_cubic();
  const Poly f = Poly::parse("y^2*z - x^3 - 17*z^3");
  check.expect(is_smooth_plane_curve(f) && vanishes_on(f, cubic), "points do not lie on a smooth cubic");
  const Classification c = classify(cubic);
  check.expect(c.ggds == std::vector<unsigned>{3, 4, 5}, "cubic: ggds differ from {3,4,5}");
  const auto* u = std::get_if<Unsupported>(&c.data);
  check.expect(u && u->reason == "3 geometric generating degrees", "cubic: not reported unsupported");
}

void criterion_monomial(Check& check) {
  const Classification c = classify(coordinate_points());
  std::vector<Monomial> gens;
  for (const auto& g : c.ideal.groebner_basis()) {
    check.expect(g.is_monomial(), "ideal of the coordinate points is not monomial");
    gens.push_back(g.leading_monomial());
  }
  for (const char* l : {"1/2", "1", "5/4", "3/2", "7/4", "2", "5/2"}) {
    const Rat lambda = parse_rat(l);
    check.expect(multiplier_ideal(c, lambda).ideal == monomial_mi(gens, lambda), std::string("differs at ") + l);
  }
}

void criterion_valuation(Check& check) {
  for (const Named& a : {Named{"3 collinear", three_collinear()}, Named{"6 on a conic", six_on_conic()}}) {
    const Classification c = classify(a.z);
    const auto* b = std::get_if<CaseB>(&c.data);
    check.expect(b != nullptr, a.name + ": not case B");
    if (!b) continue;
    const auto forms = valuation_forms(b->form);
    for (const Rat& l : jump_candidates(c, Rat(3))) {
      if (l >= 3) continue;
      const Ideal j = multiplier_ideal(c, l).ideal;
      for (const auto& g : forms)
        check.expect(membership_by_valuation(c, a.z, g, l) == j.contains(g),
                     a.name + ": " + g.to_string() + " at " + str(l));
    }
  }
}

void criterion_properties(Check& check) {
  for (const Named& a : supported_arrangements()) {
    const Classification c = classify(a.z);
    check.expect(c.supported(), a.name + ": unsupported");
    if (!c.supported()) continue;
    const Rat threshold = lct(c);
    Ideal previous = Ideal::unit();
    for (const Rat& l : jump_candidates(c, Rat(4))) {
      const Ideal j = multiplier_ideal(c, l).ideal;
      check.expect(previous.contains(j), a.name + ": not monotone at " + str(l));
      const unsigned k = unsigned(ceil(l).get_si());
      check.expect(j.contains(ideal_power(c.ideal, k)), a.name + ": I^" + std::to_string(k) + " not in J(" + str(l) + ")");
      if (l < threshold) check.expect(j.is_unit(), a.name + ": proper below lct at " + str(l));
      previous = j;
    }
    for (const Rat& below : {Rat(threshold - Rat(1, 100)), Rat(threshold * Rat(1, 2))})
      check.expect(multiplier_ideal(c, below).ideal.is_unit(), a.name + ": proper below lct at " + str(below));
    check.expect(!multiplier_ideal(c, threshold).ideal.is_unit(), a.name + ": unit at lct");

    const EnvelopeReport r = envelope_report(a.z);
    bool subset = !r.ggds.empty() && r.ggds.front() == r.generator_degrees.front();
    for (unsigned g : r.ggds)
      subset = subset && std::find(r.generator_degrees.begin(), r.generator_degrees.end(), g) != r.generator_degrees.end();
    check.expect(subset, a.name + ": ggds not within generator degrees with equal minima");
    for (std::size_t i = 0; i + 1 < r.entries.size(); ++i)
      check.expect(r.entries[i + 1].ideal.contains(r.entries[i].ideal), a.name + ": envelope chain not monotone");

    const Ideal i_z = ideal_of_points(a.z);
    check.expect(symbolic_power(a.z, 1) == i_z, a.name + ": I^<1> differs from I");
    check.expect(symbolic_power(a.z, 2).contains(ideal_power(i_z, 2)), a.name + ": I^2 not in I^<2>");
  }

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Ideal> js;
    for (int k = 0; k < 3; ++k) {
      std::vector<Poly> gens;
      const int count = 1 + int(rng() % 3);
      for (int i = 0; i < count; ++i)
        gens.push_back(Poly::monomial(Monomial::xyz(0, unsigned(rng() % 5), unsigned(rng() % 5))));
      js.emplace_back(gens);
    }
    std::vector<unsigned> exps{unsigned(rng() % 3)};
    for (int k = 1; k < 3; ++k) exps.push_back(exps.back() + 1 + unsigned(rng() % 4));
    check.expect(verify_chart_identity(js, exps), "chart identity fails on instance " + std::to_string(trial));
  }
}

// Ideal generated by all products of basis elements, bypassing ideal_product.
Ideal naive_product(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens;
  for (const auto& f : a.groebner_basis())
    for (const auto& g : b.groebner_basis()) gens.push_back(f * g);
  return Ideal(std::move(gens));
}

void criterion_skoda(Check& check) {
  for (const Named& a : supported_arrangements()) {
    const Classification c = classify(a.z);
    if (!c.supported()) continue;
    for (const Rat& l : {Rat(3), Rat(10, 3), Rat(7, 2)}) {
      const MultiplierIdealResult lower = multiplier_ideal(c, l - 1);
      check.expect(lower.branch.find("[2,3)") != std::string::npos,
                   a.name + ": λ-1 = " + str(l - 1) + " evaluated by " + lower.branch);
      const MultiplierIdealResult upper = multiplier_ideal(c, l);
      check.expect(upper.ideal == naive_product(c.ideal, lower.ideal), a.name + ": Skoda fails at " + str(l));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"lct regression", criterion_lct},
      {"classification of general points", criterion_general},
      {"envelope examples", criterion_envelopes},
      {"monomial oracle equivalence", criterion_monomial},
      {"valuation oracle equivalence", criterion_valuation},
      {"property suite", criterion_properties},
      {"Skoda consistency", criterion_skoda},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60) check.expect(false, "took " + std::to_string(secs) + " s, limit 60 s");
    std::printf("%s %zu %s (%.1f s)%s%s\n", check.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                check.ok() ? "" : ": ", check.summary().c_str());
    std::fflush(stdout);
    if (!check.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
