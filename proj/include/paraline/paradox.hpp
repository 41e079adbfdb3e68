#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paraline/freegroup.hpp"
#include "paraline/labeling.hpp"
#include "paraline/permutation.hpp"
#include "paraline/rational.hpp"

namespace paraline {

/// The decomposition of the line for one rank: generator j acts through
/// the tree permutation of x_j, and interval [n, n+1) belongs to the class
/// of word_of_label(n).
class ParadoxInstance {
  public:
    explicit ParadoxInstance(Rank rank);

    const Rank& rank() const { return rank_; }
    const std::shared_ptr<const VertexLabeling>& labeling() const { return labeling_; }
    int special() const { return special_; }

    /// sigma_j = tree permutation of x_j.
    TreePermutation generator(int j) const;

    WordClass classify_interval(std::int64_t n) const;
    WordClass classify_point(const Rational& x) const;
    std::string class_name(const WordClass& cls) const { return paraline::class_name(cls, rank_); }

  private:
    Rank rank_;
    std::shared_ptr<const VertexLabeling> labeling_;
    int special_;
};

struct Violation {
    int pair = 0;  // 0 for partition violations
    std::int64_t n = 0;
    std::string reason;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct PartitionReport {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::string rank;
    std::optional<int> pair_limit;
    std::map<WordClass, std::int64_t> counts;
    std::int64_t overflow = 0;  // omega: intervals whose pair exceeds the limit
    std::vector<Violation> violations;

    std::int64_t total() const;
    bool pass() const { return violations.empty(); }
};

struct PairCoverage {
    std::int64_t plus = 0;       // n in A_j
    std::int64_t image = 0;      // n in f_j(B_j)
    std::int64_t covered = 0;    // exactly one of the two
    std::int64_t doubled = 0;    // both

    /// |A_j union f_j(B_j)| inside the window.
    std::int64_t union_size() const { return covered + doubled; }
};

struct ReassemblyReport {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::string rank;
    std::map<int, PairCoverage> coverage;
    std::vector<Violation> violations;  // reason: "uncovered" | "double-covered"

    bool pass() const { return violations.empty(); }
};

struct MeasureAuditReport {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::int64_t window_size = 0;
    std::map<WordClass, std::int64_t> counts;
    std::map<int, std::int64_t> coverage;  // per pair: |A_j u f_j(B_j)| in window

    std::int64_t total() const;
    bool pass() const;
};

struct CertReport {
    int max_length = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t words = 0;
    std::int64_t fixed_points = 0;
    std::int64_t distinct_actions = 0;
    std::vector<std::pair<ReducedWord, std::int64_t>> witnesses;  // (word, fixed point), capped

    bool pass() const { return fixed_points == 0 && distinct_actions == words; }
};

struct VerifyOptions {
    /// Omega only: pairs above this are tallied as overflow (required >= 1).
    std::optional<int> pair_limit;
    /// Window chunks are processed on this many threads; reports do not
    /// depend on it.
    unsigned workers = 1;
};

PartitionReport verify_partition(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi,
                                 const VerifyOptions& opts = {});

/// Checks A_j disjoint-union f_j(B_j) covers every interval of the window,
/// deciding n in f_j(B_j) by pulling n back through sigma_j^-1.
ReassemblyReport verify_reassembly(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi,
                                   const std::set<int>& pairs, const VerifyOptions& opts = {});

/// All pairs of a finite rank, or 1..limit for omega.
std::set<int> default_pairs(const ParadoxInstance& inst, std::optional<int> pair_limit);

MeasureAuditReport measure_audit(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi,
                                 const VerifyOptions& opts = {});

/// Every nonempty reduced word of length <= max_length must be fixed-point
/// free on [lo, hi], and distinct words must act distinctly. For omega the
/// generators are limited to opts.pair_limit. Throws BudgetExceeded if more
/// than `word_budget` words would be checked.
CertReport certify_free_action(const ParadoxInstance& inst, int max_length, std::int64_t lo,
                               std::int64_t hi, const VerifyOptions& opts = {},
                               std::int64_t word_budget = 2'000'000);

/// All reduced words over generators 1..k of length exactly `length`, in
/// (length, lex) order.
std::vector<ReducedWord> words_of_length(int k, int length);

}  // namespace paraline
