#include "paraline/labeling.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "paraline/errors.hpp"

namespace paraline {

namespace {

using Count = unsigned __int128;

constexpr std::int64_t kMaxPosition = std::numeric_limits<std::int64_t>::max();
constexpr Count kLimit = Count(kMaxPosition) + 1;

int weight_of(const ReducedWord& w) {
    int total = 0;
    for (const auto& l : w.letters()) total += 1 + l.index;
    return total;
}

}  // namespace

std::int64_t zigzag_label(std::int64_t position) {
    if (position < 0) throw std::out_of_range("enumeration position must be >= 0");
    if (position == 0) return 0;
    return (position % 2 == 1) ? (position + 1) / 2 : -(position / 2);
}

std::int64_t zigzag_position(std::int64_t label) {
    constexpr std::int64_t bound = std::numeric_limits<std::int64_t>::max() / 2;
    if (label > bound || label < -bound) throw std::out_of_range("label magnitude too large");
    if (label == 0) return 0;
    return label > 0 ? 2 * label - 1 : -2 * label;
}

VertexLabeling::VertexLabeling(Rank rank) : rank_(rank) {
    if (rank_.is_finite()) {
        const Count b = Count(2 * std::int64_t(rank_.k()) - 1);
        branch_pow_.push_back(1);
        length_start_.push_back(0);  // length 0 starts at position 0
        length_start_.push_back(1);
        // Words of length L: 2k * b^(L-1).
        while (length_start_.back() < kLimit) {
            const std::size_t L = length_start_.size() - 1;
            const Count block = Count(2 * std::int64_t(rank_.k())) * branch_pow_[L - 1];
            length_start_.push_back(length_start_.back() + block);
            branch_pow_.push_back(branch_pow_.back() * b);
        }
        return;
    }

    // Omega. A letter of index i weighs i + 1, so a word of weight W has
    // length <= W / 2 and indices <= W - 1.
    bucket_start_.push_back(0);
    for (int W = 0;; ++W) {
        const int maxL = W / 2;
        all_.emplace_back(std::size_t(maxL + 1), Count(0));
        start_.emplace_back(std::size_t(maxL + 1), std::vector<Count>(std::size_t(W + 1), Count(0)));
        if (W == 0) all_[0][0] = 1;
        for (int L = 1; L <= maxL; ++L) {
            Count total = 0;
            for (int i = 1; i + 1 <= W; ++i) {
                // First letter fixed (index i); the tail may not start with its inverse.
                const int rest = W - 1 - i;
                Count c = omega_words(L - 1, rest) - omega_words_starting(L - 1, rest, i);
                start_[W][L][i] = c;
                total += 2 * c;
            }
            all_[W][L] = total;
        }
        Count bucket = 0;
        for (auto c : all_[W]) bucket += c;
        bucket_start_.push_back(bucket_start_.back() + bucket);
        if (bucket_start_.back() >= kLimit) break;
    }
}

VertexLabeling::Count VertexLabeling::omega_words(int length, int weight) const {
    if (length < 0 || weight < 0 || std::size_t(weight) >= all_.size()) return 0;
    const auto& row = all_[std::size_t(weight)];
    return std::size_t(length) < row.size() ? row[std::size_t(length)] : 0;
}

VertexLabeling::Count VertexLabeling::omega_words_starting(int length, int weight, int index) const {
    if (length < 1 || weight < 0 || std::size_t(weight) >= start_.size()) return 0;
    const auto& byLen = start_[std::size_t(weight)];
    if (std::size_t(length) >= byLen.size()) return 0;
    const auto& row = byLen[std::size_t(length)];
    return std::size_t(index) < row.size() ? row[std::size_t(index)] : 0;
}

VertexLabeling::Count VertexLabeling::omega_completions(int length, int weight, Letter prev) const {
    return omega_words(length, weight) - omega_words_starting(length, weight, prev.index);
}

ReducedWord VertexLabeling::word_at(std::int64_t position) const {
    if (position < 0) throw std::out_of_range("enumeration position must be >= 0");
    return rank_.is_finite() ? finite_word_at(position) : omega_word_at(position);
}

std::int64_t VertexLabeling::position_of(const ReducedWord& w) const {
    if (w.max_index() > 0 && !rank_.admits(w.max_index()))
        throw ContextError("word uses a generator outside rank " + rank_.to_string());
    return rank_.is_finite() ? finite_position_of(w) : omega_position_of(w);
}

ReducedWord VertexLabeling::finite_word_at(std::int64_t position) const {
    const Count p = Count(position);
    std::size_t L = 0;
    while (length_start_[L + 1] <= p) ++L;
    Count r = p - length_start_[L];
    std::vector<Letter> letters;
    letters.reserve(L);
    for (std::size_t i = 0; i < L; ++i) {
        const Count unit = branch_pow_[L - 1 - i];
        auto digit = std::int64_t(r / unit);
        r %= unit;
        if (i > 0) {
            const auto forbidden = letters.back().inv().code();
            if (digit >= forbidden) ++digit;
        }
        letters.push_back(Letter::from_code(digit));
    }
    return ReducedWord::from_reduced(std::move(letters));
}

std::int64_t VertexLabeling::finite_position_of(const ReducedWord& w) const {
    const std::size_t L = w.length();
    if (L + 1 >= length_start_.size()) throw std::overflow_error("word position exceeds int64 range");
    Count r = 0;
    for (std::size_t i = 0; i < L; ++i) {
        auto digit = w[i].code();
        if (i > 0 && digit > w[i - 1].inv().code()) --digit;
        r += Count(digit) * branch_pow_[L - 1 - i];
    }
    const Count p = length_start_[L] + r;
    if (p >= kLimit) throw std::overflow_error("word position exceeds int64 range");
    return std::int64_t(p);
}

ReducedWord VertexLabeling::omega_word_at(std::int64_t position) const {
    const Count p = Count(position);
    std::size_t W = 0;
    while (bucket_start_[W + 1] <= p) ++W;
    Count r = p - bucket_start_[W];
    int L = 0;
    while (r >= omega_words(L, int(W))) r -= omega_words(L++, int(W));

    std::vector<Letter> letters;
    int remaining = int(W);
    for (int i = 0; i < L; ++i) {
        const int tail = L - 1 - i;
        for (std::int64_t code = 0;; ++code) {
            const Letter cand = Letter::from_code(code);
            if (cand.index + 1 > remaining)
                throw std::logic_error("omega enumeration table inconsistent");
            if (!letters.empty() && cand == letters.back().inv()) continue;
            const int rest = remaining - 1 - cand.index;
            const Count c = omega_completions(tail, rest, cand);
            if (r < c) {
                letters.push_back(cand);
                remaining = rest;
                break;
            }
            r -= c;
        }
    }
    return ReducedWord::from_reduced(std::move(letters));
}

std::int64_t VertexLabeling::omega_position_of(const ReducedWord& w) const {
    const int W = weight_of(w);
    if (std::size_t(W) + 1 >= bucket_start_.size())
        throw std::overflow_error("word position exceeds int64 range");
    const int L = int(w.length());
    Count p = bucket_start_[std::size_t(W)];
    for (int l = 0; l < L; ++l) p += omega_words(l, W);
    int remaining = W;
    for (int i = 0; i < L; ++i) {
        const int tail = L - 1 - i;
        for (std::int64_t code = 0; code < w[std::size_t(i)].code(); ++code) {
            const Letter cand = Letter::from_code(code);
            if (i > 0 && cand == w[std::size_t(i - 1)].inv()) continue;
            const int rest = remaining - 1 - cand.index;
            if (rest < 0) break;
            p += omega_completions(tail, rest, cand);
        }
        remaining -= 1 + w[std::size_t(i)].index;
    }
    if (p >= kLimit) throw std::overflow_error("word position exceeds int64 range");
    return std::int64_t(p);
}

std::vector<ReducedWord> enumerate_words(const VertexLabeling& lab, std::int64_t count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<ReducedWord> out;
    out.reserve(std::size_t(count));
    for (std::int64_t p = 0; p < count; ++p) out.push_back(lab.word_at(p));
    return out;
}

ReducedWord connecting_word(const VertexLabeling& lab, std::int64_t m, std::int64_t n) {
    return multiply(lab.word_of_label(n), invert(lab.word_of_label(m)));
}

std::size_t CayleyBall::edge_count() const {
    std::size_t twice = 0;
    for (const auto& e : entries)
        for (const auto& [fwd, back] : e.neighbors) twice += std::size_t(fwd.has_value()) + std::size_t(back.has_value());
    return twice / 2;
}

CayleyBall ball(const VertexLabeling& lab, int radius) {
    if (lab.rank().is_omega()) throw UnsupportedRank("Cayley ball needs a finite rank");
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    const int k = lab.rank().k();
    CayleyBall out;
    out.radius = radius;
    for (std::int64_t p = 0;; ++p) {
        auto w = lab.word_at(p);
        if (w.length() > std::size_t(radius)) break;
        BallEntry e;
        e.label = zigzag_label(p);
        for (int j = 1; j <= k; ++j) {
            auto step = [&](Letter l) -> std::optional<std::int64_t> {
                const auto v = multiply(ReducedWord::from_reduced({l}), w);
                if (v.length() > std::size_t(radius)) return std::nullopt;
                return lab.label_of_word(v);
            };
            e.neighbors.emplace_back(step(gen(j)), step(gen_inv(j)));
        }
        e.word = std::move(w);
        out.entries.push_back(std::move(e));
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const BallEntry& a, const BallEntry& b) { return a.label < b.label; });
    return out;
}

}  // namespace paraline
