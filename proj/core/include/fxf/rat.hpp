#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace fxf {

using Int = boost::multiprecision::mpz_int;

// Exact rational scalar. GMP keeps the canonical form (positive denominator,
// fully reduced) as long as values are built through arithmetic or the
// (num, den) constructor; never construct one from a raw "p/q" string.
using Rat = boost::multiprecision::mpq_rational;

// Arbitrary-precision binary float (MPFR). Precision is set in bits through
// set_precision_bits(); the library initialises it to 128 bits at load.
// Boost keeps the default precision thread-local, so worker threads must
// call set_precision_bits() themselves before creating Float values.
using Float = boost::multiprecision::mpfr_float;

void set_precision_bits(unsigned bits); // clamped to >= 64
unsigned precision_bits();

Float to_float(const Rat& r);
Float to_float(const Int& n);

// Exact binary value of an MPFR float as a rational.
Rat to_rat_exact(const Float& x);

Rat rat_from_string(std::string_view s); // "p" or "p/q", throws ParseError
std::string rat_to_string(const Rat& r);

bool is_integer(const Rat& r);
std::optional<Int> to_integer(const Rat& r);
bool is_nonpositive_integer(const Rat& r);

// Exact square root of a perfect rational square, otherwise empty.
std::optional<Rat> exact_sqrt(const Rat& r);

} // namespace fxf
