#include "arrmi/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "arrmi/error.hpp"

namespace arrmi {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::Parse, field + ": " + message);
}

Rat parse_coordinate(const Json& value, const std::string& field) {
  if (!value.is_string()) parse_error(field, "expected a string holding an exact rational");
  try {
    return parse_rat(value.get<std::string>());
  } catch (const Error& e) {
    parse_error(field, e.what());
  }
}

PointSet parse_points(const Json& list) {
  if (!list.is_array()) parse_error("points", "expected an array of coordinate triples");
  if (list.empty()) parse_error("points", "an arrangement needs at least one point");
  std::vector<PointP2> pts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    const Json& triple = list[i];
    if (!triple.is_array() || triple.size() != 3) parse_error(field, "expected three coordinates");
    std::array<Rat, 3> c;
    for (std::size_t k = 0; k < 3; ++k) c[k] = parse_coordinate(triple[k], field + "[" + std::to_string(k) + "]");
    try {
      pts.emplace_back(c[0], c[1], c[2]);
    } catch (const Error& e) {
      parse_error(field, e.what());
    }
    for (std::size_t j = 0; j + 1 < pts.size(); ++j)
      if (pts[j] == pts.back())
        parse_error(field, "duplicate of points[" + std::to_string(j) + "] after normalization");
  }
  return PointSet(std::move(pts));
}

std::uint64_t read_unsigned(const Json& value, const std::string& field) {
  if (!value.is_number_integer() || value.get<long long>() < 0)
    parse_error(field, "expected a nonnegative integer");
  return value.get<std::uint64_t>();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json point_json(const PointP2& p) {
  return Json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])});
}

Json echo_json(const PointSet& z) {
  Json pts = Json::array();
  for (const auto& p : z) pts.push_back(point_json(p));
  return Json{{"points", pts}};
}

Json ideal_json(const Ideal& a) { return Json(a.basis_strings()); }

Json degrees_json(const std::vector<unsigned>& ds) { return Json(ds); }

Json rat_list(const std::vector<Rat>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

using Clock = std::chrono::steady_clock;

// Shared envelope of every output document.
class Document {
 public:
  Document(std::string command, const Arrangement& a, const DocumentOptions& opts)
      : opts_(opts), start_(Clock::now()) {
    doc_["command"] = std::move(command);
    doc_["input"] = echo_json(a.points);
    doc_["input_digest"] = input_digest(a.points);
    if (a.generator) doc_["source"] = Json{{"general", a.generator->general}, {"seed", a.generator->seed}};
  }

  Json& result() { return doc_["result"]; }

  CommandOutput finish(int status = 0) {
    if (opts_.timings) {
      const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
      doc_["timings"] = Json{{"total_ms", ms}};
    }
    return {doc_.dump(), status};
  }

 private:
  Json doc_;
  DocumentOptions opts_;
  Clock::time_point start_;
};

Json classification_json(const Classification& c, std::size_t points) {
  Json r;
  r["case"] = c.case_name();
  r["ggds"] = degrees_json(c.ggds);
  r["generator_degrees"] = degrees_json(c.generator_degrees);
  r["ideal"] = ideal_json(c.ideal);
  std::visit(
      [&](const auto& data) {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, CaseA>) {
          r["d"] = data.d;
        } else if constexpr (std::is_same_v<T, CaseB>) {
          r["d"] = data.d;
          r["e"] = data.e;
          r["form"] = data.form.to_string();
        } else if constexpr (std::is_same_v<T, CaseC>) {
          r["d"] = data.d;
          r["e"] = data.e;
          r["envelope"] = ideal_json(data.envelope);
          r["envelope_degree"] = data.envelope_degree;
          r["residual"] = ideal_json(data.residual);
          r["residual_degree"] = data.envelope_degree - points;
        } else {
          r["reason"] = data.reason;
        }
      },
      c.data);
  return r;
}

Classification require_supported(const Arrangement& a) {
  Classification c = classify(a.points);
  if (const auto* u = std::get_if<Unsupported>(&c.data))
    throw Error(ErrorCode::Unsupported, "classification unsupported: " + u->reason);
  return c;
}

void render(const Json& value, const std::string& indent, std::ostringstream& out) {
  for (auto it = value.begin(); it != value.end(); ++it) {
    const std::string key = value.is_object() ? it.key() : "-";
    const Json& v = *it;
    const bool scalar_list = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
    if (v.is_structured() && !scalar_list) {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    } else if (scalar_list) {
      out << indent << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      out << "]\n";
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

Arrangement parse_arrangement(std::string_view text, std::optional<std::uint64_t> seed_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) parse_error("document", "expected an object");
  const bool has_points = doc.contains("points");
  const bool has_generator = doc.contains("generator");
  if (has_points == has_generator) parse_error("document", "expected exactly one of \"points\" or \"generator\"");
  if (has_points) {
    if (seed_override) parse_error("points", "a seed applies only to generated arrangements");
    return {parse_points(doc["points"]), std::nullopt};
  }
  const Json& gen = doc["generator"];
  if (!gen.is_object() || !gen.contains("general")) parse_error("generator", "expected {\"general\": n, \"seed\": s}");
  GeneratorSpec spec;
  const std::uint64_t n = read_unsigned(gen["general"], "generator.general");
  if (n == 0 || n > kMaxGeneratedPoints)
    parse_error("generator.general", "expected 1 to " + std::to_string(kMaxGeneratedPoints) + " points");
  spec.general = unsigned(n);
  spec.seed = gen.contains("seed") ? read_unsigned(gen["seed"], "generator.seed") : 0;
  if (seed_override) spec.seed = *seed_override;
  return {generate_general_points(spec.general, spec.seed), spec};
}

std::string input_digest(const PointSet& z) {
  std::vector<std::string> keys;
  for (const auto& p : z) keys.push_back(to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]));
  std::sort(keys.begin(), keys.end());
  std::string joined;
  for (const auto& k : keys) joined += k + ";";
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(joined)));
  return std::string("fnv1a64:") + hex;
}

std::string input_echo(const PointSet& z) { return echo_json(z).dump(); }

std::vector<Rat> parse_grid(std::string_view text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string item(text.substr(start, comma - start));
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) throw Error(ErrorCode::Parse, "grid: empty entry");
    out.push_back(parse_rat(item));
    start = comma + 1;
  }
  return out;
}

CommandOutput run_classify(const Arrangement& a, const DocumentOptions& opts) {
  Document doc("classify", a, opts);
  doc.result() = classification_json(classify(a.points), a.points.size());
  return doc.finish();
}

CommandOutput run_envelopes(const Arrangement& a, const DocumentOptions& opts) {
  Document doc("envelopes", a, opts);
  const EnvelopeReport report = envelope_report(a.points);
  Json entries = Json::array();
  for (const auto& e : report.entries)
    entries.push_back(Json{{"degree", e.degree}, {"shape", to_string(e.shape)}, {"ideal", ideal_json(e.ideal)}});
  doc.result() = Json{{"entries", entries},
                      {"ggds", degrees_json(report.ggds)},
                      {"generator_degrees", degrees_json(report.generator_degrees)}};
  return doc.finish();
}

CommandOutput run_mi(const Arrangement& a, const Rat& lambda, const DocumentOptions& opts) {
  Document doc("mi", a, opts);
  const Classification c = require_supported(a);
  const MultiplierIdealResult r = multiplier_ideal(c, lambda);
  doc.result() = Json{{"case", c.case_name()},
                      {"lambda", to_string(r.lambda)},
                      {"branch", r.branch},
                      {"ideal", ideal_json(r.ideal)}};
  return doc.finish();
}

CommandOutput run_jumps(const Arrangement& a, const Rat& lambda_max, const DocumentOptions& opts) {
  Document doc("jumps", a, opts);
  const Classification c = require_supported(a);
  const JumpTable table = jumping_numbers(c, lambda_max);
  Json jumps = Json::array();
  for (const auto& j : table.jumps)
    jumps.push_back(Json{{"lambda", to_string(j.lambda)}, {"branch", j.branch}, {"ideal", ideal_json(j.ideal)}});
  doc.result() = Json{{"case", c.case_name()},
                      {"lambda_max", to_string(lambda_max)},
                      {"lct", table.lct ? Json(to_string(*table.lct)) : Json(nullptr)},
                      {"jumps", jumps}};
  return doc.finish();
}

CommandOutput run_lct(const Arrangement& a, const DocumentOptions& opts) {
  Document doc("lct", a, opts);
  const Classification c = require_supported(a);
  doc.result() = Json{{"case", c.case_name()}, {"lct", to_string(lct(c))}};
  return doc.finish();
}

CommandOutput run_verify(const Arrangement& a, const std::vector<Rat>& grid, const DocumentOptions& opts) {
  Document doc("verify", a, opts);
  const Classification c = classify(a.points);
  std::vector<Rat> lambdas = grid;
  if (lambdas.empty() && c.supported()) lambdas = jump_candidates(c, Rat(3));
  for (const auto& l : lambdas)
    if (l < 0 || l > kMaxLambda) throw Error(ErrorCode::InvalidArgument, "grid entries must lie in [0, 10]");
  const CrossCheckReport report = cross_check(a.points, c, lambdas);
  Json checks = Json::array();
  for (const auto& r : report.checks) {
    Json item{{"name", r.name}, {"lambda", r.lambda ? Json(to_string(*r.lambda)) : Json(nullptr)}, {"passed", r.passed}};
    if (!r.witness.empty()) item["witness"] = r.witness;
    checks.push_back(std::move(item));
  }
  doc.result() = Json{{"case", c.case_name()}, {"grid", rat_list(lambdas)}, {"passed", report.passed()}, {"checks", checks}};
  if (report.passed()) return doc.finish();
  return doc.finish(c.supported() ? int(ErrorCode::VerificationFailed) : int(ErrorCode::Unsupported));
}

std::string render_text(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed document: ") + e.what());
  }
  std::ostringstream out;
  render(doc, "", out);
  return out.str();
}

}  // namespace arrmi
