#include "paraline/word_text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "paraline/errors.hpp"

namespace paraline {

namespace {

long long parse_number(std::string_view s, std::string_view token) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad number in token '" + std::string(token) + "'");
    return v;
}

}  // namespace

std::vector<Letter> parse_letters(std::string_view text, const Rank& rank) {
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(text)};
        for (std::string t; in >> t;) tokens.push_back(t);
    }
    if (tokens.size() == 1 && tokens[0] == "e") return {};

    const bool aliases = rank.is_finite() && rank.k() == 2;
    std::vector<Letter> out;
    for (const auto& token : tokens) {
        std::string_view body = token;
        long long exponent = 1;
        if (auto caret = body.find('^'); caret != std::string_view::npos) {
            exponent = parse_number(body.substr(caret + 1), token);
            if (exponent == 0) throw ParseError("zero exponent in token '" + token + "'");
            if (exponent > 1'000'000 || exponent < -1'000'000)
                throw ParseError("exponent too large in token '" + token + "'");
            body = body.substr(0, caret);
        }
        Letter letter;
        if (aliases && body.size() == 1 && std::string_view("gGhH").find(body[0]) != std::string_view::npos) {
            const char c = body[0];
            letter = {(c == 'g' || c == 'G') ? 1 : 2, std::isupper(static_cast<unsigned char>(c)) != 0};
        } else if (body.size() >= 2 && (body[0] == 'x' || body[0] == 'X')) {
            const auto j = parse_number(body.substr(1), token);
            if (j < 1 || j > 1'000'000) throw ParseError("generator index out of range in '" + token + "'");
            letter = {int(j), body[0] == 'X'};
        } else {
            throw ParseError("unrecognized token '" + token + "'");
        }
        if (!rank.admits(letter.index))
            throw InvalidLetter("generator " + std::to_string(letter.index) + " is not valid for rank " +
                                rank.to_string());
        if (exponent < 0) {
            letter = letter.inv();
            exponent = -exponent;
        }
        out.insert(out.end(), std::size_t(exponent), letter);
    }
    return out;
}

ReducedWord parse_word(std::string_view text, const Rank& rank) {
    return reduce(parse_letters(text, rank));
}

std::string format_word(const ReducedWord& w) {
    if (w.empty()) return "e";
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t run = 1;
        while (i + run < ls.size() && ls[i + run] == ls[i]) ++run;
        if (!out.empty()) out += ' ';
        out += ls[i].inverse ? 'X' : 'x';
        out += std::to_string(ls[i].index);
        if (run > 1) out += '^' + std::to_string(run);
        i += run;
    }
    return out;
}

}  // namespace paraline
