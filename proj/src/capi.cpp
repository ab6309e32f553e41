#include "arrmi/arrmi.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "arrmi/error.hpp"
#include "arrmi/io.hpp"

struct arrmi_arrangement {
  arrmi::Arrangement value;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
arrmi_status guarded(F&& body) {
  try {
    const arrmi_status status = body();
    if (status == ARRMI_OK) last_error.clear();
    return status;
  } catch (const arrmi::Error& e) {
    last_error = e.what();
    return static_cast<arrmi_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ARRMI_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ARRMI_INTERNAL;
  }
}

arrmi_status require(const void* p, const char* name) {
  if (p) return ARRMI_OK;
  last_error = std::string(name) + " must not be NULL";
  return ARRMI_INVALID_ARGUMENT;
}

arrmi::DocumentOptions options(const arrmi_options* opts) {
  arrmi::DocumentOptions o;
  if (opts) o.timings = opts->timings != 0;
  return o;
}

arrmi::Rat parse_lambda(const char* text, const char* name) {
  if (!text) throw arrmi::Error(arrmi::ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
  try {
    return arrmi::parse_rat(text);
  } catch (const arrmi::Error& e) {
    throw arrmi::Error(arrmi::ErrorCode::Parse, std::string(name) + ": " + e.what());
  }
}

template <class F>
arrmi_status command(const arrmi_arrangement* a, char** out, F&& run) {
  if (auto s = require(a, "arrangement"); s != ARRMI_OK) return s;
  if (auto s = require(out, "out"); s != ARRMI_OK) return s;
  *out = nullptr;
  return guarded([&] {
    const arrmi::CommandOutput result = run(a->value);
    *out = copy_string(result.document);
    if (result.status == ARRMI_VERIFICATION_FAILED) last_error = "verification failed";
    if (result.status == ARRMI_UNSUPPORTED) last_error = "classification unsupported";
    return static_cast<arrmi_status>(result.status);
  });
}

}  // namespace

extern "C" {

const char* arrmi_version(void) { return "1.0.0"; }

const char* arrmi_last_error_message(void) { return last_error.c_str(); }

arrmi_status arrmi_arrangement_parse(const char* text, int has_seed, uint64_t seed_override,
                                     arrmi_arrangement** out) {
  if (auto s = require(text, "text"); s != ARRMI_OK) return s;
  if (auto s = require(out, "out"); s != ARRMI_OK) return s;
  *out = nullptr;
  return guarded([&] {
    std::optional<std::uint64_t> seed;
    if (has_seed) seed = seed_override;
    *out = new arrmi_arrangement{arrmi::parse_arrangement(text, seed)};
    return ARRMI_OK;
  });
}

void arrmi_arrangement_free(arrmi_arrangement* a) { delete a; }

arrmi_status arrmi_arrangement_size(const arrmi_arrangement* a, uint64_t* out) {
  if (auto s = require(a, "arrangement"); s != ARRMI_OK) return s;
  if (auto s = require(out, "out"); s != ARRMI_OK) return s;
  *out = a->value.points.size();
  last_error.clear();
  return ARRMI_OK;
}

arrmi_status arrmi_arrangement_digest(const arrmi_arrangement* a, char** out) {
  if (auto s = require(a, "arrangement"); s != ARRMI_OK) return s;
  if (auto s = require(out, "out"); s != ARRMI_OK) return s;
  return guarded([&] {
    *out = copy_string(arrmi::input_digest(a->value.points));
    return ARRMI_OK;
  });
}

arrmi_status arrmi_arrangement_echo(const arrmi_arrangement* a, char** out) {
  if (auto s = require(a, "arrangement"); s != ARRMI_OK) return s;
  if (auto s = require(out, "out"); s != ARRMI_OK) return s;
  return guarded([&] {
    *out = copy_string(arrmi::input_echo(a->value.points));
    return ARRMI_OK;
  });
}

arrmi_status arrmi_classify(const arrmi_arrangement* a, const arrmi_options* opts, char** out) {
  return command(a, out, [&](const arrmi::Arrangement& v) { return arrmi::run_classify(v, options(opts)); });
}

arrmi_status arrmi_envelopes(const arrmi_arrangement* a, const arrmi_options* opts, char** out) {
  return command(a, out, [&](const arrmi::Arrangement& v) { return arrmi::run_envelopes(v, options(opts)); });
}

arrmi_status arrmi_multiplier_ideal(const arrmi_arrangement* a, const char* lambda, const arrmi_options* opts,
                                    char** out) {
  return command(a, out, [&](const arrmi::Arrangement& v) {
    return arrmi::run_mi(v, parse_lambda(lambda, "lambda"), options(opts));
  });
}

arrmi_status arrmi_jumps(const arrmi_arrangement* a, const char* lambda_max, const arrmi_options* opts, char** out) {
  return command(a, out, [&](const arrmi::Arrangement& v) {
    return arrmi::run_jumps(v, parse_lambda(lambda_max, "lambda_max"), options(opts));
  });
}

arrmi_status arrmi_lct(const arrmi_arrangement* a, const arrmi_options* opts, char** out) {
  return command(a, out, [&](const arrmi::Arrangement& v) { return arrmi::run_lct(v, options(opts)); });
}

arrmi_status arrmi_verify(const arrmi_arrangement* a, const char* grid, const arrmi_options* opts, char** out) {
  return command(a, out, [&](const arrmi::Arrangement& v) {
    std::vector<arrmi::Rat> lambdas;
    if (grid && *grid) lambdas = arrmi::parse_grid(grid);
    return arrmi::run_verify(v, lambdas, options(opts));
  });
}

arrmi_status arrmi_render_text(const char* document, char** out) {
  if (auto s = require(document, "document"); s != ARRMI_OK) return s;
  if (auto s = require(out, "out"); s != ARRMI_OK) return s;
  return guarded([&] {
    *out = copy_string(arrmi::render_text(document));
    return ARRMI_OK;
  });
}

void arrmi_string_free(char* s) { std::free(s); }

}  // extern "C"
