#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paraline/labeling.hpp"
#include "paraline/paradox.hpp"
#include "paraline/rigid.hpp"

namespace paraline {

/// Dark2 palette; the first four entries are A, B, C, D for rank 2, and
/// further classes cycle through the rest.
inline constexpr std::array<std::string_view, 8> kClassPalette = {
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string_view class_color(const WordClass& cls);

/// Graph of a piecewise rigid map over x in [lo, hi]: one segment per piece,
/// closed dot on the left endpoint and open circle on the right one.
std::string render_function_svg(const std::vector<Piece>& pieces, std::int64_t lo, std::int64_t hi);

/// Directed edges w -> x_j w of the ball, nodes named by label.
std::string render_cayley_dot(const CayleyBall& ball);

/// One colored cell per interval [n, n+1), n in [lo, hi], plus a legend.
std::string render_line_strip_svg(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi);

}  // namespace paraline
