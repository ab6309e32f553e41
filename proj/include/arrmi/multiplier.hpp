#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrmi/envelope.hpp"

namespace arrmi {

/// Largest λ accepted by multiplier_ideal and jumping_numbers.
inline const Rat kMaxLambda = 10;

struct MultiplierIdealResult {
  Rat lambda;
  Ideal ideal;
  /// A[0,2) | A[2,3) | B[0,1) | B[1,2) | B[2,3) | C[0,2) | C[2,3) | skoda-recursion
  std::string branch;
};

/// m^k, or the unit ideal for k <= 0.
Ideal power_of_m(long k);

/// J(I^λ) for the arrangement behind c. Throws Error(Unsupported) for an
/// unsupported classification and Error(InvalidArgument) unless 0 <= λ <= 10.
MultiplierIdealResult multiplier_ideal(const Classification& c, const Rat& lambda);

/// Closed-form log canonical threshold.
Rat lct(const Classification& c);

struct Jump {
  Rat lambda;
  Ideal ideal;
  std::string branch;
};

struct JumpTable {
  std::vector<Jump> jumps;
  /// The first jump; absent when no jump lies in (0, λ_max].
  std::optional<Rat> lct;
};

/// Candidate breakpoints k/d, k/e and integers in (0, λ_max], ascending.
std::vector<Rat> jump_candidates(const Classification& c, const Rat& lambda_max);

/// Scans the candidates, comparing J at each candidate with J at the
/// midpoint before it.
JumpTable jumping_numbers(const Classification& c, const Rat& lambda_max);

/// Largest a with F^a dividing g, and the cofactor H = g / F^a.
std::pair<unsigned, Poly> split_power(const Poly& g, const Poly& f);

/// Membership of the form g in J(I^λ), λ < 3, decided from the divisorial
/// valuations of the log resolution rather than from the assembled ideal.
/// Throws Error(Unsupported) in case C.
bool membership_by_valuation(const Classification& c, const PointSet& z, const Poly& g, const Rat& lambda);

}  // namespace arrmi
