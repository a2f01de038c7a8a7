// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace prym {

/// Exact rational number. gmp keeps results of arithmetic in lowest terms
/// with a positive denominator, so equality is structural.
using Rat = mpq_class;
using Int = mpz_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rat& q);

/// Parses "p", "-p", "p/q". Returns nullopt on malformed text or q == 0.
std::optional<Rat> parse_rational(std::string_view text);

/// Nonnegative rational square root when it exists in Q.
std::optional<Rat> rational_sqrt(const Rat& q);

inline int sign(const Rat& q) { return sgn(q); }

}  // namespace prym
