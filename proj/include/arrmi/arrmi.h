#ifndef ARRMI_ARRMI_H
#define ARRMI_ARRMI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ARRMI_API __attribute__((visibility("default")))
#else
#define ARRMI_API
#endif

/* Status codes; the CLI uses them as exit codes. */
typedef enum arrmi_status {
  ARRMI_OK = 0,
  ARRMI_INVALID_ARGUMENT = 1,
  ARRMI_PARSE_ERROR = 2,
  ARRMI_UNSUPPORTED = 3,
  ARRMI_VERIFICATION_FAILED = 4,
  ARRMI_NOT_ZERO_DIMENSIONAL = 5,
  ARRMI_INTERNAL = 6
} arrmi_status;

typedef struct arrmi_arrangement arrmi_arrangement;

typedef struct arrmi_options {
  int timings; /* nonzero adds a "timings" object to documents */
} arrmi_options;

ARRMI_API const char* arrmi_version(void);

/* Message of the last failing call on this thread; "" after a success. */
ARRMI_API const char* arrmi_last_error_message(void);

/* Parses an arrangement document. seed_override is used when has_seed is
   nonzero and the document uses a generator. */
ARRMI_API arrmi_status arrmi_arrangement_parse(const char* text, int has_seed, uint64_t seed_override,
                                               arrmi_arrangement** out);
ARRMI_API void arrmi_arrangement_free(arrmi_arrangement* a);
ARRMI_API arrmi_status arrmi_arrangement_size(const arrmi_arrangement* a, uint64_t* out);

/* The returned strings are owned by the caller; release with arrmi_string_free. */
ARRMI_API arrmi_status arrmi_arrangement_digest(const arrmi_arrangement* a, char** out);
ARRMI_API arrmi_status arrmi_arrangement_echo(const arrmi_arrangement* a, char** out);

/* Each command writes one JSON document to *out. ARRMI_UNSUPPORTED leaves
   *out NULL, except that arrmi_verify always writes its report, also when it
   returns ARRMI_VERIFICATION_FAILED or ARRMI_UNSUPPORTED. Rationals are strings such as "5/3". */
ARRMI_API arrmi_status arrmi_classify(const arrmi_arrangement* a, const arrmi_options* opts, char** out);
ARRMI_API arrmi_status arrmi_envelopes(const arrmi_arrangement* a, const arrmi_options* opts, char** out);
ARRMI_API arrmi_status arrmi_multiplier_ideal(const arrmi_arrangement* a, const char* lambda,
                                              const arrmi_options* opts, char** out);
ARRMI_API arrmi_status arrmi_jumps(const arrmi_arrangement* a, const char* lambda_max, const arrmi_options* opts,
                                   char** out);
ARRMI_API arrmi_status arrmi_lct(const arrmi_arrangement* a, const arrmi_options* opts, char** out);
/* grid: comma-separated rationals, or NULL / "" for the jump candidates up to 3. */
ARRMI_API arrmi_status arrmi_verify(const arrmi_arrangement* a, const char* grid, const arrmi_options* opts,
                                    char** out);

/* Indented text rendering of a document. */
ARRMI_API arrmi_status arrmi_render_text(const char* document, char** out);

ARRMI_API void arrmi_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
