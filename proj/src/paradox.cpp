#include "paraline/paradox.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "paraline/errors.hpp"

namespace paraline {

namespace {

/// Splits [lo, hi] into contiguous chunks, runs `fn(chunk_lo, chunk_hi)` on
/// up to `workers` threads and returns the partial results in window order.
template <typename Fn>
auto run_chunked(std::int64_t lo, std::int64_t hi, unsigned workers, Fn fn) {
    using Partial = decltype(fn(lo, hi));
    std::vector<Partial> parts;
    if (lo > hi) return parts;
    const std::int64_t size = hi - lo + 1;
    const auto chunks = std::int64_t(std::max(1u, workers));
    const std::int64_t step = (size + chunks - 1) / chunks;
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (auto a = lo; a <= hi; a += step) ranges.emplace_back(a, std::min(hi, a + step - 1));
    parts.resize(ranges.size());
    if (ranges.size() == 1) {
        parts[0] = fn(ranges[0].first, ranges[0].second);
        return parts;
    }
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < ranges.size(); ++i)
        pool.emplace_back([&, i] { parts[i] = fn(ranges[i].first, ranges[i].second); });
    for (auto& t : pool) t.join();
    return parts;
}

int require_pair_limit(const ParadoxInstance& inst, const VerifyOptions& opts) {
    if (inst.rank().is_finite()) return inst.rank().k();
    if (!opts.pair_limit || *opts.pair_limit < 1)
        throw std::invalid_argument("rank omega requires a pair limit >= 1");
    return *opts.pair_limit;
}

}  // namespace

ParadoxInstance::ParadoxInstance(Rank rank)
    : rank_(rank), labeling_(std::make_shared<const VertexLabeling>(rank)), special_(special_index(rank)) {}

TreePermutation ParadoxInstance::generator(int j) const {
    if (!rank_.admits(j)) throw InvalidLetter("no generator " + std::to_string(j) + " in rank " + rank_.to_string());
    return {ReducedWord::from_reduced({gen(j)}), labeling_};
}

WordClass ParadoxInstance::classify_interval(std::int64_t n) const {
    return classify_word(labeling_->word_of_label(n), rank_);
}

WordClass ParadoxInstance::classify_point(const Rational& x) const { return classify_interval(floor_of(x)); }

std::int64_t PartitionReport::total() const {
    std::int64_t t = overflow;
    for (const auto& [_, c] : counts) t += c;
    return t;
}

std::int64_t MeasureAuditReport::total() const {
    std::int64_t t = 0;
    for (const auto& [_, c] : counts) t += c;
    return t;
}

bool MeasureAuditReport::pass() const {
    if (total() != window_size) return false;
    return std::all_of(coverage.begin(), coverage.end(), [this](const auto& kv) { return kv.second == window_size; });
}

PartitionReport verify_partition(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi,
                                 const VerifyOptions& opts) {
    const int limit = require_pair_limit(inst, opts);
    const auto& rank = inst.rank();
    PartitionReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.rank = rank.to_string();
    if (rank.is_omega()) rep.pair_limit = limit;
    for (int j = 1; j <= limit; ++j) {
        rep.counts[{j, Side::Plus}] = 0;
        rep.counts[{j, Side::Minus}] = 0;
    }

    struct Partial {
        std::map<WordClass, std::int64_t> counts;
        std::int64_t overflow = 0;
        std::vector<Violation> violations;
    };
    auto parts = run_chunked(lo, hi, opts.workers, [&](std::int64_t a, std::int64_t b) {
        Partial part;
        for (auto n = a; n <= b; ++n) {
            const auto w = inst.labeling()->word_of_label(n);
            const auto cls = classify_word(w, rank);
            // Re-derive membership from the set definitions for every
            // candidate pair; exactly one class may claim the interval.
            std::set<int> candidates;
            for (int j = 1; j <= limit; ++j) candidates.insert(j);
            candidates.insert(cls.pair);
            if (!w.empty()) candidates.insert(w.front().index);
            int claims = 0;
            bool agrees = false;
            for (int j : candidates)
                for (Side side : {Side::Plus, Side::Minus})
                    if (in_class(w, {j, side}, rank)) {
                        ++claims;
                        agrees = agrees || (WordClass{j, side} == cls);
                    }
            if (claims != 1)
                part.violations.push_back({0, n, "claimed by " + std::to_string(claims) + " classes"});
            else if (!agrees)
                part.violations.push_back({0, n, "classification disagrees with membership"});
            if (cls.pair > limit)
                ++part.overflow;
            else
                ++part.counts[cls];
        }
        return part;
    });
    for (auto& part : parts) {
        for (const auto& [cls, c] : part.counts) rep.counts[cls] += c;
        rep.overflow += part.overflow;
        rep.violations.insert(rep.violations.end(), part.violations.begin(), part.violations.end());
    }
    return rep;
}

std::set<int> default_pairs(const ParadoxInstance& inst, std::optional<int> pair_limit) {
    const int limit = require_pair_limit(inst, VerifyOptions{pair_limit, 1});
    std::set<int> out;
    for (int j = 1; j <= limit; ++j) out.insert(j);
    return out;
}

ReassemblyReport verify_reassembly(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi,
                                   const std::set<int>& pairs, const VerifyOptions& opts) {
    ReassemblyReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.rank = inst.rank().to_string();
    std::vector<std::pair<int, IntegerPermutation>> pullbacks;
    for (int j : pairs) {
        pullbacks.emplace_back(j, inverse(IntegerPermutation(inst.generator(j))));
        rep.coverage[j] = {};
    }

    struct Partial {
        std::map<int, PairCoverage> coverage;
        std::map<int, std::vector<Violation>> violations;
    };
    auto parts = run_chunked(lo, hi, opts.workers, [&](std::int64_t a, std::int64_t b) {
        Partial part;
        for (auto n = a; n <= b; ++n) {
            const auto cls = inst.classify_interval(n);
            for (const auto& [j, pull] : pullbacks) {
                const bool in_plus = cls == WordClass{j, Side::Plus};
                const bool in_image = inst.classify_interval(pull.apply(n)) == WordClass{j, Side::Minus};
                auto& cov = part.coverage[j];
                cov.plus += in_plus;
                cov.image += in_image;
                if (in_plus != in_image)
                    ++cov.covered;
                else
                    cov.doubled += in_plus;
                if (in_plus == in_image)
                    part.violations[j].push_back({j, n, in_plus ? "double-covered" : "uncovered"});
            }
        }
        return part;
    });
    for (int j : pairs) {
        auto& cov = rep.coverage[j];
        for (auto& part : parts) {
            const auto& c = part.coverage[j];
            cov.plus += c.plus;
            cov.image += c.image;
            cov.covered += c.covered;
            cov.doubled += c.doubled;
            auto& v = part.violations[j];
            rep.violations.insert(rep.violations.end(), v.begin(), v.end());
        }
    }
    return rep;
}

MeasureAuditReport measure_audit(const ParadoxInstance& inst, std::int64_t lo, std::int64_t hi,
                                 const VerifyOptions& opts) {
    MeasureAuditReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.window_size = hi >= lo ? hi - lo + 1 : 0;
    const auto pairs = default_pairs(inst, opts.pair_limit);
    auto part = verify_partition(inst, lo, hi, opts);
    rep.counts = part.counts;
    if (part.overflow > 0) rep.counts[{0, Side::Plus}] = part.overflow;  // pair 0 = beyond the limit
    const auto re = verify_reassembly(inst, lo, hi, pairs, opts);
    for (const auto& [j, cov] : re.coverage) rep.coverage[j] = cov.union_size();
    return rep;
}

std::vector<ReducedWord> words_of_length(int k, int length) {
    std::vector<ReducedWord> out;
    if (length == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<Letter> cur;
    auto rec = [&](auto&& self) -> void {
        if (int(cur.size()) == length) {
            out.push_back(ReducedWord::from_reduced(cur));
            return;
        }
        for (std::int64_t code = 0; code < 2 * k; ++code) {
            const auto l = Letter::from_code(code);
            if (!cur.empty() && cur.back().inv() == l) continue;
            cur.push_back(l);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

CertReport certify_free_action(const ParadoxInstance& inst, int max_length, std::int64_t lo, std::int64_t hi,
                               const VerifyOptions& opts, std::int64_t word_budget) {
    if (max_length < 1) throw std::invalid_argument("max word length must be >= 1");
    if (lo > hi) throw std::invalid_argument("certify_free_action: lo > hi");
    const int k = require_pair_limit(inst, opts);
    if (inst.rank().is_finite() && k > inst.rank().k()) throw std::invalid_argument("pair limit exceeds rank");

    // 2k (2k-1)^(L-1) words of each length L.
    long double planned = 0, block = 2.0L * k;
    for (int L = 1; L <= max_length; ++L, block *= (2.0L * k - 1)) planned += block;
    if (planned > (long double)word_budget)
        throw BudgetExceeded("free-action check needs " + std::to_string((long long)planned) +
                             " words, budget is " + std::to_string(word_budget));

    CertReport rep;
    rep.max_length = max_length;
    rep.lo = lo;
    rep.hi = hi;
    std::vector<ReducedWord> words;
    for (int L = 1; L <= max_length; ++L) {
        auto ws = words_of_length(k, L);
        words.insert(words.end(), std::make_move_iterator(ws.begin()), std::make_move_iterator(ws.end()));
    }
    rep.words = std::int64_t(words.size());

    struct Partial {
        std::int64_t fixed = 0;
        std::vector<std::int64_t> fingerprints;
        std::vector<std::pair<ReducedWord, std::int64_t>> witnesses;
    };
    // Chunk over word indices; each word is checked on the whole window.
    auto parts = run_chunked(0, rep.words - 1, opts.workers, [&](std::int64_t a, std::int64_t b) {
        Partial part;
        for (auto i = a; i <= b; ++i) {
            const IntegerPermutation p = TreePermutation(words[std::size_t(i)], inst.labeling());
            for (auto n : fixed_points_in_window(p, lo, hi)) {
                ++part.fixed;
                if (part.witnesses.size() < 16) part.witnesses.emplace_back(words[std::size_t(i)], n);
            }
            part.fingerprints.push_back(p.apply(lo));
        }
        return part;
    });
    std::unordered_set<std::int64_t> seen;
    for (auto& part : parts) {
        rep.fixed_points += part.fixed;
        seen.insert(part.fingerprints.begin(), part.fingerprints.end());
        for (auto& w : part.witnesses)
            if (rep.witnesses.size() < 16) rep.witnesses.push_back(std::move(w));
    }
    rep.distinct_actions = std::int64_t(seen.size());
    return rep;
}

}  // namespace paraline
