#include "arrmi/multiplier.hpp"

#include <algorithm>

#include "arrmi/error.hpp"

namespace arrmi {

namespace {

long floor_times(const Rat& lambda, unsigned k) { return floor_long(lambda * Rat(long(k))); }

// m^k · (f)
Ideal times_power_of_m(long k, const Poly& f) { return f * power_of_m(k); }

const Classification& require_supported(const Classification& c) {
  if (const auto* u = std::get_if<Unsupported>(&c.data))
    throw Error(ErrorCode::Unsupported, "classification unsupported: " + u->reason);
  return c;
}

MultiplierIdealResult closed_form(const Classification& c, const Rat& lambda) {
  const Ideal& ideal = c.ideal;
  if (const auto* a = std::get_if<CaseA>(&c.data)) {
    const long k = floor_times(lambda, a->d) - 2;
    if (lambda < 2) return {lambda, power_of_m(k), "A[0,2)"};
    return {lambda, truncate(ideal, k), "A[2,3)"};
  }
  if (const auto* b = std::get_if<CaseB>(&c.data)) {
    const long d = b->d, e = b->e;
    const Poly& f = b->form;
    if (lambda < 1) return {lambda, power_of_m(floor_times(lambda, b->d) - 2), "B[0,1)"};
    if (lambda < 2) {
      Ideal j = power_of_m(floor_times(lambda, b->e) - (2 + e - d)) +
                times_power_of_m(floor_times(lambda, b->d) - (2 + d), f);
      return {lambda, j, "B[1,2)"};
    }
    Ideal sum = power_of_m(floor_times(lambda, b->e) - (2 + e - d)) +
                times_power_of_m(floor_times(lambda, b->e) - (2 + 2 * e - d), f) +
                times_power_of_m(floor_times(lambda, b->d) - (2 + 2 * d), f * f);
    return {lambda, ideal_intersect(sum, ideal), "B[2,3)"};
  }
  const auto& cc = std::get<CaseC>(c.data);
  const long d = cc.d, e = cc.e;
  if (lambda < 2) return {lambda, power_of_m(floor_times(lambda, cc.d) - 2), "C[0,2)"};
  Ideal sum = truncate(cc.residual, floor_times(lambda, cc.d) - 2) +
              power_of_m(floor_times(lambda, cc.e) - 2 * (1 + e - d));
  return {lambda, ideal_intersect(sum, ideal), "C[2,3)"};
}

}  // namespace

Ideal power_of_m(long k) {
  if (k <= 0) return Ideal::unit();
  std::vector<Poly> gens;
  for (const auto& m : monomials_of_degree(unsigned(k))) gens.push_back(Poly::monomial(m));
  return Ideal(std::move(gens));
}

MultiplierIdealResult multiplier_ideal(const Classification& c, const Rat& lambda) {
  require_supported(c);
  if (lambda < 0) throw Error(ErrorCode::InvalidArgument, "λ must be non-negative, got " + to_string(lambda));
  if (lambda > kMaxLambda)
    throw Error(ErrorCode::InvalidArgument, "λ is capped at " + to_string(kMaxLambda) + ", got " + to_string(lambda));
  if (lambda < 3) return closed_form(c, lambda);
  // Skoda: J(I^λ) = I · J(I^(λ-1)) for λ >= 3.
  MultiplierIdealResult base = closed_form(c, lambda - floor(lambda) + 2);
  Ideal j = base.ideal;
  for (long k = floor_long(lambda) - 2; k > 0; --k) j = c.ideal * j;
  return {lambda, j, "skoda-recursion"};
}

Rat lct(const Classification& c) {
  require_supported(c);
  const unsigned d = c.d();
  Rat best = std::min(frac(3, long(d)), Rat(2));
  if (const auto* b = std::get_if<CaseB>(&c.data))
    best = std::min(best, frac(long(3 + b->e - b->d), long(b->e)));
  return best;
}

std::vector<Rat> jump_candidates(const Classification& c, const Rat& lambda_max) {
  require_supported(c);
  if (lambda_max > kMaxLambda)
    throw Error(ErrorCode::InvalidArgument, "λ_max is capped at " + to_string(kMaxLambda));
  std::vector<unsigned> denominators{1, c.d()};
  if (auto e = c.e()) denominators.push_back(*e);
  std::vector<Rat> out;
  for (unsigned q : denominators)
    for (long k = 1;; ++k) {
      const Rat r = frac(k, long(q));
      if (r > lambda_max) break;
      out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

JumpTable jumping_numbers(const Classification& c, const Rat& lambda_max) {
  JumpTable table;
  Rat previous = 0;
  for (const Rat& candidate : jump_candidates(c, lambda_max)) {
    const Ideal before = multiplier_ideal(c, (previous + candidate) / 2).ideal;
    MultiplierIdealResult at = multiplier_ideal(c, candidate);
    if (at.ideal != before) {
      if (!before.contains(at.ideal))
        throw Error(ErrorCode::VerificationFailed,
                    "multiplier ideals are not decreasing across λ = " + to_string(candidate));
      table.jumps.push_back({candidate, std::move(at.ideal), std::move(at.branch)});
    }
    previous = candidate;
  }
  if (!table.jumps.empty()) table.lct = table.jumps.front().lambda;
  return table;
}

std::pair<unsigned, Poly> split_power(const Poly& g, const Poly& f) {
  unsigned a = 0;
  Poly h = g;
  while (auto q = h.divide_exact(f)) {
    h = std::move(*q);
    ++a;
  }
  return {a, h};
}

bool membership_by_valuation(const Classification& c, const PointSet& z, const Poly& g, const Rat& lambda) {
  require_supported(c);
  if (g.is_zero() || !g.is_homogeneous())
    throw Error(ErrorCode::InvalidArgument, "valuation test needs a nonzero form, got " + g.to_string());
  if (lambda < 0 || lambda >= 3)
    throw Error(ErrorCode::InvalidArgument, "valuation test needs 0 <= λ < 3, got " + to_string(lambda));
  if (std::holds_alternative<CaseC>(c.data)) throw Error(ErrorCode::Unsupported, "no valuation oracle for Case C");

  // Divisors over the lines of the arrangement.
  if (lambda >= 2 && !vanishes_on(g, z)) return false;
  if (const auto* a = std::get_if<CaseA>(&c.data)) return g.degree() >= floor_times(lambda, a->d) - 2;

  const auto& b = std::get<CaseB>(c.data);
  const auto [power, cofactor] = split_power(g, b.form);
  for (unsigned j = 0; j <= b.e - b.d; ++j) {
    const long lhs = long(cofactor.degree()) + long((b.d + j) * power);
    if (lhs < floor_times(lambda, b.d + j) - long(2 + j)) return false;
  }
  return true;
}

}  // namespace arrmi
