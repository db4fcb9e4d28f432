#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conic {

/// Exact rational numbers, backed by GMP.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

/// Exact conversion of a finite double.
Rational from_double(double v);

bool is_integer(const Rational& r);

/// floor(r) as a Rational with unit denominator.
Rational floor_of(const Rational& r);

Rational abs_of(const Rational& r);

}  // namespace conic
