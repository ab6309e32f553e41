#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arrmi/points.hpp"

namespace arrmi {

enum class EnvelopeShape { AllOfPlane, Curve, FiniteScheme, EqualsZ, Mixed };

std::string to_string(EnvelopeShape shape);

struct EnvelopeEntry {
  unsigned degree = 0;
  Ideal ideal;  // saturated ideal of the degree envelope
  EnvelopeShape shape = EnvelopeShape::AllOfPlane;
};

struct EnvelopeReport {
  /// One entry per degree from 1 up to the degree where the chain reaches Z.
  std::vector<EnvelopeEntry> entries;
  std::vector<unsigned> ggds;
  std::vector<unsigned> generator_degrees;
};

/// Saturated ideal of the subscheme cut out by the degree-d forms through z;
/// the zero ideal when there are none.
Ideal envelope(const PointSet& z, unsigned d);

std::vector<unsigned> geometric_generating_degrees(const PointSet& z);

/// Degrees of a minimal generating set of the ideal of z: d qualifies when
/// the degree-d piece is larger than the span of linear multiples of the
/// degree-(d-1) piece.
std::vector<unsigned> generator_degrees(const PointSet& z);

EnvelopeReport envelope_report(const PointSet& z);

/// True when F = 0 is a smooth plane curve: (F, dF/dx, dF/dy, dF/dz) has
/// empty projective zero set.
bool is_smooth_plane_curve(const Poly& f);

// The three supported shapes of the envelope chain.
struct CaseA {
  unsigned d;
};
struct CaseB {
  unsigned d, e;
  Poly form;  // F_d, monic
};
struct CaseC {
  unsigned d, e;
  Ideal residual;  // saturated ideal of the extra envelope points W
  Ideal envelope;  // saturated ideal of Z_d = Z ∪ W
  unsigned envelope_degree;
};
struct Unsupported {
  std::string reason;
};

using CaseData = std::variant<CaseA, CaseB, CaseC, Unsupported>;

struct Classification {
  Ideal ideal;  // saturated ideal of the arrangement
  std::vector<unsigned> ggds;
  std::vector<unsigned> generator_degrees;
  CaseData data;

  bool supported() const { return !std::holds_alternative<Unsupported>(data); }
  /// "A", "B", "C" or "unsupported".
  std::string case_name() const;
  /// The lowest geometric generating degree d.
  unsigned d() const;
  /// The second geometric generating degree (cases B and C only).
  std::optional<unsigned> e() const;
};

Classification classify(const PointSet& z);
/// Same, reusing an already computed envelope report.
Classification classify(const PointSet& z, const EnvelopeReport& report);

// Expected behaviour of n general points: d is the least degree of a curve
// through them and r the number of independent such curves.
struct GeneralPrediction {
  unsigned n, d, r;
  std::string expected_case;  // "A", "B" or "C"
  std::vector<unsigned> ggds;
};

GeneralPrediction predict_general(unsigned n);

/// Every graded piece has the expected dimension max(0, dim S_t - n) for
/// t up to d + 1.
bool has_generic_hilbert_function(const PointSet& z);

/// n points with integer coordinates drawn uniformly from [-50, 50] by a
/// seeded mt19937_64; samples failing has_generic_hilbert_function are
/// redrawn (at most 20 attempts, then Error(Internal)).
PointSet generate_general_points(unsigned n, std::uint64_t seed);

}  // namespace arrmi
