#include "paraline/freegroup.hpp"

#include <algorithm>

#include "paraline/errors.hpp"

namespace paraline {

Rank Rank::finite(int k) {
    if (k < 2) throw std::invalid_argument("finite rank must be >= 2, got " + std::to_string(k));
    Rank r;
    r.k_ = k;
    return r;
}

int Rank::k() const {
    if (!k_) throw UnsupportedRank("rank omega has no finite generator count");
    return *k_;
}

std::string Rank::to_string() const { return k_ ? std::to_string(*k_) : "omega"; }

void check_letters(std::span<const Letter> letters, const Rank& rank) {
    for (const auto& l : letters) {
        if (!rank.admits(l.index))
            throw InvalidLetter("generator index " + std::to_string(l.index) +
                                " is not valid for rank " + rank.to_string());
    }
}

bool is_reduced(std::span<const Letter> letters) {
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i] == letters[i - 1].inv()) return false;
    return true;
}

ReducedWord ReducedWord::from_reduced(std::vector<Letter> letters) {
    for (const auto& l : letters)
        if (l.index < 1) throw InvalidLetter("generator index must be >= 1");
    if (!is_reduced(letters)) throw InvariantViolation("word is not freely reduced");
    return ReducedWord(std::move(letters));
}

int ReducedWord::max_index() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.index);
    return m;
}

std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end(),
                                                  [](Letter x, Letter y) { return x.code() <=> y.code(); });
}

ReducedWord reduce(std::span<const Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const auto& l : letters) {
        if (l.index < 1) throw InvalidLetter("generator index must be >= 1");
        if (!out.empty() && out.back() == l.inv())
            out.pop_back();
        else
            out.push_back(l);
    }
    return ReducedWord(std::move(out));
}

ReducedWord reduce(std::span<const Letter> letters, const Rank& rank) {
    check_letters(letters, rank);
    return reduce(letters);
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
    const auto& a = u.letters_;
    const auto& b = v.letters_;
    std::size_t cancel = 0;
    while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == b[cancel].inv())
        ++cancel;
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() - 2 * cancel);
    out.insert(out.end(), a.begin(), a.end() - std::ptrdiff_t(cancel));
    out.insert(out.end(), b.begin() + std::ptrdiff_t(cancel), b.end());
    return ReducedWord(std::move(out));
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v, const Rank& rank) {
    if (!rank.admits(std::max(1, u.max_index())) || !rank.admits(std::max(1, v.max_index())))
        throw ContextError("operand uses a generator outside rank " + rank.to_string());
    return multiply(u, v);
}

ReducedWord invert(const ReducedWord& u) {
    std::vector<Letter> out(u.letters_.rbegin(), u.letters_.rend());
    for (auto& l : out) l.inverse = !l.inverse;
    return ReducedWord(std::move(out));
}

ReducedWord power(int j, std::int64_t e) {
    const Letter l{j, e < 0};
    return ReducedWord::from_reduced(std::vector<Letter>(std::size_t(e < 0 ? -e : e), l));
}

int special_index(const Rank& rank) { return rank.is_finite() ? rank.k() : 1; }

namespace {

bool is_pure_positive_power(const ReducedWord& w, int j) {
    return !w.empty() && std::all_of(w.letters().begin(), w.letters().end(),
                                     [j](Letter l) { return l == gen(j); });
}

}  // namespace

WordClass classify_word(const ReducedWord& w, const Rank& rank) {
    if (w.max_index() > 0 && !rank.admits(w.max_index()))
        throw ContextError("word uses a generator outside rank " + rank.to_string());
    const int s = special_index(rank);
    if (w.empty()) return {s, Side::Minus};
    const Letter first = w.front();
    if (first.index != s) return {first.index, first.inverse ? Side::Minus : Side::Plus};
    if (first.inverse || is_pure_positive_power(w, s)) return {s, Side::Minus};
    return {s, Side::Plus};
}

bool in_class(const ReducedWord& w, const WordClass& cls, const Rank& rank) {
    const int j = cls.pair;
    const bool starts_pos = !w.empty() && w.front() == gen(j);
    const bool starts_neg = !w.empty() && w.front() == gen_inv(j);
    if (j != special_index(rank)) return cls.side == Side::Plus ? starts_pos : starts_neg;
    const bool pure = is_pure_positive_power(w, j);
    if (cls.side == Side::Plus) return starts_pos && !pure;
    return starts_neg || w.empty() || pure;
}

std::string class_name(const WordClass& cls, const Rank& rank) {
    if (rank.is_finite() && rank.k() == 2) {
        static constexpr const char* names[] = {"A", "B", "C", "D"};
        return names[(cls.pair - 1) * 2 + (cls.side == Side::Minus ? 1 : 0)];
    }
    return std::string(cls.side == Side::Plus ? "A_" : "B_") + std::to_string(cls.pair);
}

int class_count(const Rank& rank) { return 2 * rank.k(); }

}  // namespace paraline
