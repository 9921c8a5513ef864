#pragma once

#include <gmpxx.h>

#include <string>

namespace cpoly {

/*
 * Exact rational scalar, backed by GMP. mpq_class arithmetic keeps results
 * canonical (reduced fraction, positive denominator), but the two-argument
 * constructor does not reduce, so the helpers below canonicalize before
 * inspecting numerators or denominators.
 */
using Rational = mpq_class;
using Integer = mpz_class;

/* Parse "p" or "p/q" (decimal, optional leading '-'). Throws
 * std::invalid_argument on malformed input or q = 0. */
Rational parse_rational(const std::string& s);

/* Inverse of parse_rational: "p" when the denominator is 1, else "p/q". */
std::string format_rational(const Rational& r);

bool is_integer(const Rational& r);

/* Checked narrowing conversions; throw std::overflow_error or, for a
 * non-integral rational, std::invalid_argument. */
long to_long(const Integer& z);
long rational_to_long(const Rational& r);

}  // namespace cpoly
