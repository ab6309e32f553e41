#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrmi/arrmi.h"

namespace {

struct Settings {
  std::string file;
  std::string lambda;
  std::string lambda_max = "3";
  std::string grid;
  std::optional<std::uint64_t> seed;
  bool pretty = false;
  bool timings = false;
};

using ArrangementPtr = std::unique_ptr<arrmi_arrangement, decltype(&arrmi_arrangement_free)>;
using Command = std::function<arrmi_status(const arrmi_arrangement*, const arrmi_options*, char**)>;

// Exit codes: 0 success, 2 parse or validation error, 3 unsupported
// classification, 4 verification failure, 1 anything else.
int exit_code(int status) {
  switch (status) {
    case ARRMI_OK:
    case ARRMI_PARSE_ERROR:
    case ARRMI_UNSUPPORTED:
    case ARRMI_VERIFICATION_FAILED:
      return status;
    case ARRMI_INVALID_ARGUMENT:
      return ARRMI_PARSE_ERROR;
    default:
      return 1;
  }
}

int fail(int status, const std::string& message) {
  std::cerr << "arrmi: " << message << "\n";
  return exit_code(status);
}

bool read_input(const std::string& path, std::string& text) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) return false;
    buffer << in.rdbuf();
  }
  text = buffer.str();
  return true;
}

int emit(const char* document, bool pretty) {
  if (!pretty) {
    std::cout << document << "\n";
    return 0;
  }
  char* text = nullptr;
  const arrmi_status s = arrmi_render_text(document, &text);
  if (s != ARRMI_OK) return fail(s, arrmi_last_error_message());
  std::cout << text;
  arrmi_string_free(text);
  return 0;
}

int run(const Settings& settings, const Command& command) {
  std::string text;
  if (!read_input(settings.file, text)) return fail(ARRMI_PARSE_ERROR, "cannot read " + settings.file);

  arrmi_arrangement* raw = nullptr;
  arrmi_status s = arrmi_arrangement_parse(text.c_str(), settings.seed.has_value(), settings.seed.value_or(0), &raw);
  if (s != ARRMI_OK) return fail(s, settings.file + ": " + arrmi_last_error_message());
  const ArrangementPtr arrangement(raw, &arrmi_arrangement_free);

  const arrmi_options opts{settings.timings ? 1 : 0};
  char* document = nullptr;
  s = command(arrangement.get(), &opts, &document);
  if (document) {
    if (const int e = emit(document, settings.pretty); e != 0) s = static_cast<arrmi_status>(e);
    arrmi_string_free(document);
  }
  if (s != ARRMI_OK) return fail(s, arrmi_last_error_message());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplier ideals of line arrangements through the origin of affine 3-space"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--pretty", settings.pretty, "Print indented text instead of JSON");
  app.add_flag("--timings", settings.timings, "Add wall-clock timings to the document");
  app.add_option("--seed", settings.seed, "Override the seed of a generated arrangement");

  auto subcommand = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", settings.file, "Arrangement file, or - for standard input")->required();
    return sub;
  };

  CLI::App* classify = subcommand("classify", "Classify the arrangement by its envelope chain");
  CLI::App* envelopes = subcommand("envelopes", "Print the degree envelopes");
  CLI::App* mi = subcommand("mi", "Multiplier ideal J(I^lambda)");
  mi->add_option("--lambda", settings.lambda, "Exponent as an exact rational, e.g. 3/2")->required();
  CLI::App* jumps = subcommand("jumps", "Jumping numbers up to lambda-max");
  jumps->add_option("--lambda-max", settings.lambda_max, "Upper end of the scan, at most 10")->capture_default_str();
  CLI::App* lct = subcommand("lct", "Log canonical threshold");
  CLI::App* verify = subcommand("verify", "Cross-check against the independent oracles");
  verify->add_option("--grid", settings.grid, "Comma-separated exponents; default the jump candidates up to 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ARRMI_PARSE_ERROR;
  }

  if (*classify) return run(settings, arrmi_classify);
  if (*envelopes) return run(settings, arrmi_envelopes);
  if (*lct) return run(settings, arrmi_lct);
  if (*mi)
    return run(settings, [&](const arrmi_arrangement* a, const arrmi_options* o, char** out) {
      return arrmi_multiplier_ideal(a, settings.lambda.c_str(), o, out);
    });
  if (*jumps)
    return run(settings, [&](const arrmi_arrangement* a, const arrmi_options* o, char** out) {
      return arrmi_jumps(a, settings.lambda_max.c_str(), o, out);
    });
  if (*verify)
    return run(settings, [&](const arrmi_arrangement* a, const arrmi_options* o, char** out) {
      return arrmi_verify(a, settings.grid.c_str(), o, out);
    });
  return ARRMI_PARSE_ERROR;
}
