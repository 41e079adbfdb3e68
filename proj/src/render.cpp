#include "paraline/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "paraline/word_text.hpp"

namespace paraline {

namespace {

constexpr std::int64_t kUnit = 40;
constexpr std::int64_t kMargin = 20;

}  // namespace

std::string_view class_color(const WordClass& cls) {
    const auto ordinal = std::size_t(std::max(0, cls.pair - 1)) * 2 + (cls.side == Side::Minus ? 1 : 0);
    return kClassPalette[ordinal % kClassPalette.size()];
}

std::string render_function_svg(const std::vector<Piece>& pieces, std::int64_t lo, std::int64_t hi) {
    std::int64_t ylo = lo, yhi = hi;
    for (const auto& p : pieces) {
        ylo = std::min(ylo, p.start + p.offset);
        yhi = std::max(yhi, p.start + p.offset + 1);
    }
    const auto width = (hi - lo) * kUnit + 2 * kMargin;
    const auto height = (yhi - ylo) * kUnit + 2 * kMargin;
    auto px = [&](std::int64_t x) { return (x - lo) * kUnit + kMargin; };
    auto py = [&](std::int64_t y) { return (yhi - y) * kUnit + kMargin; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<g id=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (auto x = lo; x <= hi; ++x)
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(yhi) << "\" x2=\"" << px(x) << "\" y2=\"" << py(ylo)
            << "\"/>\n";
    for (auto y = ylo; y <= yhi; ++y)
        out << "<line x1=\"" << px(lo) << "\" y1=\"" << py(y) << "\" x2=\"" << px(hi) << "\" y2=\"" << py(y)
            << "\"/>\n";
    out << "</g>\n<g id=\"axes\" stroke=\"#000000\" stroke-width=\"2\">\n";
    if (ylo <= 0 && 0 <= yhi)
        out << "<line x1=\"" << px(lo) << "\" y1=\"" << py(0) << "\" x2=\"" << px(hi) << "\" y2=\"" << py(0)
            << "\"/>\n";
    if (lo <= 0 && 0 <= hi)
        out << "<line x1=\"" << px(0) << "\" y1=\"" << py(yhi) << "\" x2=\"" << px(0) << "\" y2=\"" << py(ylo)
            << "\"/>\n";
    out << "</g>\n<g id=\"pieces\" stroke=\"#1f4e9a\" stroke-width=\"3\" fill=\"#1f4e9a\">\n";
    for (const auto& p : pieces) {
        const auto x0 = px(p.start), x1 = px(p.start + 1);
        const auto y0 = py(p.start + p.offset), y1 = py(p.start + p.offset + 1);
        out << "<line data-start=\"" << p.start << "\" data-offset=\"" << p.offset << "\" x1=\"" << x0
            << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\"/>\n";
        out << "<circle cx=\"" << x0 << "\" cy=\"" << y0 << "\" r=\"4\"/>\n";
        out << "<circle cx=\"" << x1 << "\" cy=\"" << y1 << "\" r=\"4\" fill=\"#ffffff\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_cayley_dot(const CayleyBall& ball) {
    std::ostringstream out;
    out << "digraph cayley {\n  node [shape=circle];\n";
    for (const auto& e : ball.entries)
        out << "  \"" << e.label << "\" [label=\"" << e.label << "\", tooltip=\"" << format_word(e.word)
            << "\"];\n";
    for (const auto& e : ball.entries)
        for (std::size_t j = 0; j < e.neighbors.size(); ++j)
            if (const auto& fwd = e.neighbors[j].first; fwd)
                out << "  \"" << e.label << "\" -> \"" << *fwd << "\" [label=\"x" << j + 1 << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string render_line_strip_svg(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi) {
    constexpr std::int64_t cell = 30;
    const std::int64_t count = hi >= lo ? hi - lo + 1 : 0;
    std::vector<WordClass> classes;
    std::set<WordClass> used;
    for (auto n = lo; n <= hi; ++n) {
        classes.push_back(inst.classify_interval(n));
        used.insert(classes.back());
    }
    const auto width = std::max<std::int64_t>(count * cell, 160) + 2 * kMargin;
    const auto legend_top = kMargin + cell + 30;
    const auto height = legend_top + std::int64_t(used.size()) * 20 + kMargin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\" width=\"" << width << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
    out << "<g id=\"cells\" stroke=\"#ffffff\">\n";
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& cls = classes[std::size_t(i)];
        out << "<rect data-n=\"" << lo + i << "\" data-class=\"" << inst.class_name(cls) << "\" x=\""
            << kMargin + i * cell << "\" y=\"" << kMargin << "\" width=\"" << cell << "\" height=\"" << cell
            << "\" fill=\"" << class_color(cls) << "\"/>\n";
    }
    out << "</g>\n<g id=\"ticks\" text-anchor=\"middle\">\n";
    for (std::int64_t i = 0; i < count; ++i)
        out << "<text x=\"" << kMargin + i * cell + cell / 2 << "\" y=\"" << kMargin + cell + 14 << "\">" << lo + i
            << "</text>\n";
    out << "</g>\n<g id=\"legend\">\n";
    std::int64_t row = 0;
    for (const auto& cls : used) {
        const auto y = legend_top + row++ * 20;
        out << "<rect x=\"" << kMargin << "\" y=\"" << y << "\" width=\"14\" height=\"14\" fill=\""
            << class_color(cls) << "\"/>\n";
        out << "<text x=\"" << kMargin + 20 << "\" y=\"" << y + 11 << "\">" << inst.class_name(cls)
            << (cls.pair == inst.special() ? " (special pair)" : "") << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace paraline
