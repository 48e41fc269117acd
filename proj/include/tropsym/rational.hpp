#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace tropsym {

// Exact rational scalar. Tropical arithmetic is min/plus over these;
// singularity detection is tie detection, so floats are never used here.
using Rational = boost::multiprecision::cpp_rational;

/// Parse "3", "-1/2", "4.25" (decimals become exact: 17/4).
/// Returns std::nullopt on malformed input, infinities, or NaN-like tokens.
std::optional<Rational> parse_rational(const std::string& token);

/// Render as "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& r);

}  // namespace tropsym
