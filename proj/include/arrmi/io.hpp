#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrmi/oracle.hpp"

namespace arrmi {

struct GeneratorSpec {
  unsigned general = 0;
  std::uint64_t seed = 0;
};

struct Arrangement {
  PointSet points;
  std::optional<GeneratorSpec> generator;  // set when the points were generated
};

/// Largest n accepted by "generator": {"general": n}.
inline constexpr unsigned kMaxGeneratedPoints = 30;

/// Parses an arrangement file: {"points": [["1","0","0"], ...]} or
/// {"generator": {"general": n, "seed": s}}. A seed override replaces the
/// generator seed. Throws Error(Parse) naming the offending field.
Arrangement parse_arrangement(std::string_view text, std::optional<std::uint64_t> seed_override = std::nullopt);

/// FNV-1a 64 over the sorted canonical point strings, as "fnv1a64:<16 hex>".
std::string input_digest(const PointSet& z);

/// {"points": [...]} with normalized coordinates; parses back to the same digest.
std::string input_echo(const PointSet& z);

/// Comma-separated exact rationals. Throws Error(Parse).
std::vector<Rat> parse_grid(std::string_view text);

struct DocumentOptions {
  bool timings = false;
};

struct CommandOutput {
  std::string document;  // one JSON object
  int status = 0;        // 0, or 4 when a verification check failed
};

// Each command returns its output document, or throws Error: Unsupported when
// the classification does not support the request, InvalidArgument for a bad λ.
CommandOutput run_classify(const Arrangement& a, const DocumentOptions& opts = {});
CommandOutput run_envelopes(const Arrangement& a, const DocumentOptions& opts = {});
CommandOutput run_mi(const Arrangement& a, const Rat& lambda, const DocumentOptions& opts = {});
CommandOutput run_jumps(const Arrangement& a, const Rat& lambda_max, const DocumentOptions& opts = {});
CommandOutput run_lct(const Arrangement& a, const DocumentOptions& opts = {});
/// An empty grid means the jump candidates up to 3.
CommandOutput run_verify(const Arrangement& a, const std::vector<Rat>& grid, const DocumentOptions& opts = {});

/// Indented "key: value" text rendering of an output document.
std::string render_text(std::string_view document);

}  // namespace arrmi
