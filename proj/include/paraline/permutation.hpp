#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "paraline/freegroup.hpp"
#include "paraline/labeling.hpp"

namespace paraline {

/// Finite-support permutation of the integers given by disjoint cycles.
class CyclePermutation {
  public:
    CyclePermutation() = default;
    /// Throws std::invalid_argument if cycles overlap or one has length < 2.
    explicit CyclePermutation(std::vector<std::vector<std::int64_t>> cycles);
    /// Builds the cycle form of an arbitrary finite mapping (fixed points dropped).
    static CyclePermutation from_mapping(const std::map<std::int64_t, std::int64_t>& images);

    const std::vector<std::vector<std::int64_t>>& cycles() const { return cycles_; }
    std::vector<std::int64_t> support() const;

    std::int64_t apply(std::int64_t n) const;
    CyclePermutation inverse() const;

    friend bool operator==(const CyclePermutation&, const CyclePermutation&) = default;

  private:
    std::vector<std::vector<std::int64_t>> cycles_;  // each rotated to start at its minimum; sorted
    std::map<std::int64_t, std::int64_t> image_;
};

/// Cycle text: "(012534)" reads single digits; with commas or spaces the
/// entries are whole integers, e.g. "(10, -3, 4)". Several cycles may follow
/// each other: "(0 1)(2 3)". "()" is the identity.
CyclePermutation parse_cycles(std::string_view text);

/// Action of a reduced word on the integers through the vertex labeling:
/// n -> label(word * word_of_label(n)).
class TreePermutation {
  public:
    TreePermutation(ReducedWord word, std::shared_ptr<const VertexLabeling> labeling);

    const ReducedWord& word() const { return word_; }
    const std::shared_ptr<const VertexLabeling>& labeling() const { return labeling_; }

    std::int64_t apply(std::int64_t n) const;
    TreePermutation inverse() const { return {invert(word_), labeling_}; }

  private:
    ReducedWord word_;
    std::shared_ptr<const VertexLabeling> labeling_;
};

class IntegerPermutation;

/// outer o inner, kept formally when the operands cannot be merged.
struct ProductPermutation {
    std::shared_ptr<const IntegerPermutation> outer;
    std::shared_ptr<const IntegerPermutation> inner;
};

/// A permutation of Z with an evaluable inverse.
class IntegerPermutation {
  public:
    using Form = std::variant<CyclePermutation, TreePermutation, ProductPermutation>;

    IntegerPermutation() : form_(CyclePermutation{}) {}
    IntegerPermutation(CyclePermutation p) : form_(std::move(p)) {}
    IntegerPermutation(TreePermutation p) : form_(std::move(p)) {}
    IntegerPermutation(ProductPermutation p) : form_(std::move(p)) {}

    const Form& form() const { return form_; }
    const TreePermutation* tree() const { return std::get_if<TreePermutation>(&form_); }
    const CyclePermutation* cycle() const { return std::get_if<CyclePermutation>(&form_); }

    std::int64_t apply(std::int64_t n) const;

  private:
    Form form_;
};

std::int64_t apply(const IntegerPermutation& p, std::int64_t n);

/// p o q. Two tree permutations collapse to the tree permutation of the
/// product word, two cycle permutations to a cycle permutation; mixed
/// operands stay a formal product. Throws ContextError for tree operands
/// over different ranks.
IntegerPermutation compose(const IntegerPermutation& p, const IntegerPermutation& q);

IntegerPermutation inverse(const IntegerPermutation& p);

/// All n in [lo, hi] with p(n) == n, increasing.
std::vector<std::int64_t> fixed_points_in_window(const IntegerPermutation& p, std::int64_t lo,
                                                 std::int64_t hi);

}  // namespace paraline
