#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paraline/freegroup.hpp"

namespace paraline {

/// Parses whitespace-separated tokens `x<j>` / `X<j>` with an optional
/// `^<m>` exponent (m nonzero; negative flips the sign). For rank 2 the
/// aliases g, G, h, H are accepted. `e` (alone) is the empty word.
/// Letters are returned unreduced.
std::vector<Letter> parse_letters(std::string_view text, const Rank& rank);

/// parse_letters followed by free reduction.
ReducedWord parse_word(std::string_view text, const Rank& rank);

/// Canonical form: runs of equal letters collapse to `x1^3`, tokens are
/// space separated, the identity prints as `e`.
std::string format_word(const ReducedWord& w);

}  // namespace paraline
