#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace paraline {

/// One generator or its inverse. `index` is 1-based; `inverse` marks x_j^-1.
struct Letter {
    int index = 1;
    bool inverse = false;

    constexpr int sign() const { return inverse ? -1 : 1; }
    constexpr Letter inv() const { return {index, !inverse}; }
    /// Position in the canonical letter order x1 < X1 < x2 < X2 < ...
    constexpr std::int64_t code() const { return 2 * std::int64_t(index - 1) + (inverse ? 1 : 0); }
    static constexpr Letter from_code(std::int64_t c) { return {int(c / 2) + 1, (c % 2) != 0}; }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter a, Letter b) { return a.code() <=> b.code(); }
};

constexpr Letter gen(int j) { return {j, false}; }
constexpr Letter gen_inv(int j) { return {j, true}; }

/// Rank of a free group: finite k >= 2, or countably many generators.
class Rank {
  public:
    static Rank finite(int k);
    static Rank omega() { return Rank{}; }

    bool is_finite() const { return k_.has_value(); }
    bool is_omega() const { return !k_.has_value(); }
    /// Finite rank value; throws UnsupportedRank for omega.
    int k() const;

    /// True when `j` names a generator of this rank.
    bool admits(int j) const { return j >= 1 && (!k_ || j <= *k_); }

    std::string to_string() const;

    friend bool operator==(const Rank&, const Rank&) = default;

  private:
    Rank() = default;
    std::optional<int> k_;
};

/// Throws InvalidLetter unless every letter is admitted by `rank`.
void check_letters(std::span<const Letter> letters, const Rank& rank);

/// A freely reduced word: no letter sits next to its own inverse.
/// The empty word is the identity.
class ReducedWord {
  public:
    ReducedWord() = default;

    /// Adopts `letters` as-is; throws InvariantViolation if not reduced.
    static ReducedWord from_reduced(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& front() const { return letters_.front(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    /// Largest generator index used (0 for the identity).
    int max_index() const;

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
    /// (length, lex) order over the canonical letter order.
    friend std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b);

  private:
    explicit ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    std::vector<Letter> letters_;

    friend ReducedWord reduce(std::span<const Letter>);
    friend ReducedWord invert(const ReducedWord&);
    friend ReducedWord multiply(const ReducedWord&, const ReducedWord&);
};

bool is_reduced(std::span<const Letter> letters);

/// Free reduction (stack based, so the result is independent of the
/// cancellation order).
ReducedWord reduce(std::span<const Letter> letters);
/// Same, but validates every letter against `rank` first.
ReducedWord reduce(std::span<const Letter> letters, const Rank& rank);

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
/// Rank-checked product; throws ContextError if either word uses a
/// generator outside `rank`.
ReducedWord multiply(const ReducedWord& u, const ReducedWord& v, const Rank& rank);

ReducedWord invert(const ReducedWord& u);

/// x_j^e as a reduced word (e may be negative or zero).
ReducedWord power(int j, std::int64_t e);

enum class Side { Plus, Minus };

/// Which piece of the paradoxical split of G a word falls in.
struct WordClass {
    int pair = 1;
    Side side = Side::Plus;

    friend bool operator==(const WordClass&, const WordClass&) = default;
    friend auto operator<=>(const WordClass& a, const WordClass& b) {
        if (auto c = a.pair <=> b.pair; c != 0) return c;
        return int(a.side) <=> int(b.side);
    }
};

/// Generator whose MINUS class absorbs the identity and the pure positive
/// powers: k for finite rank, 1 for omega.
int special_index(const Rank& rank);

/// Assigns each reduced word to exactly one class. For j != s the class is
/// decided by the first letter; for j == s, pure positive powers of x_s and
/// the identity go to the MINUS side.
WordClass classify_word(const ReducedWord& w, const Rank& rank);

/// Independent membership test for one class, written directly from the
/// set definitions rather than through classify_word.
bool in_class(const ReducedWord& w, const WordClass& cls, const Rank& rank);

/// "A".."D" for rank 2, otherwise "A_j" / "B_j".
std::string class_name(const WordClass& cls, const Rank& rank);

/// Number of classes for finite rank (2k).
int class_count(const Rank& rank);

}  // namespace paraline
