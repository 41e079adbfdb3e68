#include "paraline/rational.hpp"

#include <charconv>
#include <stdexcept>

#include "paraline/errors.hpp"

namespace paraline {

std::int64_t floor_of(const Rational& x) {
    const auto n = x.numerator();
    const auto d = x.denominator();  // > 0
    auto q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

Rational frac_of(const Rational& x) { return x - Rational(floor_of(x)); }

std::string to_string(const Rational& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("bad integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    const auto den = parse_int(std::string_view(text).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    return Rational(parse_int(std::string_view(text).substr(0, slash)), den);
}

}  // namespace paraline
