#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace oddquad {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using ExactScalar = mpq_class;

/// num/den reduced. gmpxx's own two-argument constructor does not reduce, and
/// comparisons on unreduced values are wrong. Throws std::domain_error if den == 0.
ExactScalar rational(long num, long den);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const ExactScalar& x);

/// Parses the format produced by to_string. Throws std::invalid_argument.
ExactScalar parse_scalar(std::string_view text);

bool is_integer(const ExactScalar& x);

/// True when the reduced denominator is 1 or 2.
bool has_half_integer_denominator(const ExactScalar& x);

double to_double(const ExactScalar& x);

}  // namespace oddquad
