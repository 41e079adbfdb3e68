#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace paraline {

/// Exact point on the line; always kept in lowest terms with a positive
/// denominator.
using Rational = boost::rational<std::int64_t>;

/// Greatest integer not exceeding x (rounds toward -inf for negatives).
std::int64_t floor_of(const Rational& x);

/// x - floor_of(x), in [0, 1).
Rational frac_of(const Rational& x);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& x);

/// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace paraline
