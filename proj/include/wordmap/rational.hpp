#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wordmap {

/// Arbitrary-precision rational, always canonical (positive denominator, reduced).
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" with an optional leading '-'. Throws Error(Syntax).
Rat parse_rat(std::string_view text);

/// Inverse of parse_rat: "p/q", or "p" when the denominator is 1.
std::string format_rat(const Rat& value);

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
  Rat r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

/// value^e for integer e (value != 0 when e < 0).
Rat pow(const Rat& value, std::int64_t e);

}  // namespace wordmap
