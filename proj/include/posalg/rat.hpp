#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace posalg {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rat = mpq_class;

/// num/den in lowest terms; den must be nonzero.
Rat make_rat(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading '-', decimal digits only).
/// Returns nullopt for anything else, including a zero denominator.
std::optional<Rat> parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace posalg
