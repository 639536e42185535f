#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace centorb {

/// Exact rational scalar. GMP keeps it canonical: lowest terms, positive
/// denominator, zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q" (optional surrounding whitespace). Throws
/// InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p" form.
std::string to_string(const Rational& q);

}  // namespace centorb
