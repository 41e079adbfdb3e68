#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paraline/freegroup.hpp"

namespace paraline {

/// Zigzag map from enumeration positions to labels: 0,1,2,3,4,... -> 0,1,-1,2,-2,...
std::int64_t zigzag_label(std::int64_t position);
/// Inverse of zigzag_label.
std::int64_t zigzag_position(std::int64_t label);

/// Bijection between the integers and the vertices of the Cayley tree of a
/// free group.
///
/// Words are enumerated canonically: for finite rank by (length, lex) over
/// x1 < X1 < x2 < X2 < ...; for rank omega by weight |w| + sum of indices,
/// then (length, lex) inside each finite weight bucket. Label n is the word
/// at zigzag position of n. Both directions are computed by closed-form
/// counting; the count tables are built once in the constructor and are
/// read-only afterwards.
class VertexLabeling {
  public:
    explicit VertexLabeling(Rank rank);

    const Rank& rank() const { return rank_; }

    /// Word at enumeration position `p` (p >= 0).
    ReducedWord word_at(std::int64_t position) const;
    /// Enumeration position of `w`; throws ContextError if w is outside the
    /// rank, std::overflow_error if the position does not fit in int64.
    std::int64_t position_of(const ReducedWord& w) const;

    ReducedWord word_of_label(std::int64_t n) const { return word_at(zigzag_position(n)); }
    std::int64_t label_of_word(const ReducedWord& w) const { return zigzag_label(position_of(w)); }

  private:
    // Finite rank.
    ReducedWord finite_word_at(std::int64_t p) const;
    std::int64_t finite_position_of(const ReducedWord& w) const;
    // Omega.
    ReducedWord omega_word_at(std::int64_t p) const;
    std::int64_t omega_position_of(const ReducedWord& w) const;
    using Count = unsigned __int128;
    Count omega_words(int length, int weight) const;
    Count omega_words_starting(int length, int weight, int index) const;
    /// Words of `length` and `weight` that may follow `prev`.
    Count omega_completions(int length, int weight, Letter prev) const;

    Rank rank_;
    // Finite: length_start_[L] is the position of the first word of length
    // L; branch_pow_[i] = (2k-1)^i. Tables stop once positions leave int64.
    std::vector<Count> length_start_;
    std::vector<Count> branch_pow_;
    // Omega: all_[W][L] counts words of weight W and length L; start_[W][L][i]
    // those beginning with one fixed letter of index i.
    std::vector<std::vector<Count>> all_;
    std::vector<std::vector<std::vector<Count>>> start_;
    std::vector<Count> bucket_start_;  // first position of weight W
};

/// First `count` words of the canonical enumeration.
std::vector<ReducedWord> enumerate_words(const VertexLabeling& lab, std::int64_t count);

/// The unique reduced word u with u . word(m) = word(n).
ReducedWord connecting_word(const VertexLabeling& lab, std::int64_t m, std::int64_t n);

struct BallEntry {
    std::int64_t label = 0;
    ReducedWord word;
    /// neighbors[j-1] = {label of x_j w, label of X_j w}; nullopt when the
    /// neighbor lies beyond the radius.
    std::vector<std::pair<std::optional<std::int64_t>, std::optional<std::int64_t>>> neighbors;
};

struct CayleyBall {
    int radius = 0;
    std::vector<BallEntry> entries;  // sorted by label

    std::size_t edge_count() const;
};

/// All vertices within `radius` of the identity; finite rank only.
CayleyBall ball(const VertexLabeling& lab, int radius);

}  // namespace paraline
