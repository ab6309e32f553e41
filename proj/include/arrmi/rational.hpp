#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrmi {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// n/d in canonical form (mpq_class's two-argument constructor does not
/// canonicalize).
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "-p/q" or an integer. Throws Error(Parse) on malformed text or
/// a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& r);

BigInt floor(const Rat& r);
BigInt ceil(const Rat& r);

/// floor(r) as a long; throws if it does not fit.
long floor_long(const Rat& r);

}  // namespace arrmi
