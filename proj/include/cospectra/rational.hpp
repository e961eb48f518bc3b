#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cospectra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or a plain decimal such as "-0.25" into an exact,
/// canonicalized rational. Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace cospectra
