#include "paraline/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include "paraline/errors.hpp"

namespace paraline {

CyclePermutation::CyclePermutation(std::vector<std::vector<std::int64_t>> cycles) {
    std::set<std::int64_t> seen;
    for (auto& c : cycles) {
        if (c.size() < 2) throw std::invalid_argument("cycles must have length >= 2");
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!seen.insert(c[i]).second)
                throw std::invalid_argument("cycles are not disjoint at " + std::to_string(c[i]));
            image_[c[i]] = c[(i + 1) % c.size()];
        }
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    }
    std::sort(cycles.begin(), cycles.end());
    cycles_ = std::move(cycles);
}

CyclePermutation CyclePermutation::from_mapping(const std::map<std::int64_t, std::int64_t>& images) {
    std::vector<std::vector<std::int64_t>> cycles;
    std::set<std::int64_t> done;
    for (const auto& [start, img] : images) {
        if (img == start || done.count(start)) continue;
        std::vector<std::int64_t> cycle;
        for (auto n = start; !done.count(n);) {
            done.insert(n);
            cycle.push_back(n);
            auto it = images.find(n);
            if (it == images.end()) throw std::invalid_argument("mapping is not a permutation of its keys");
            n = it->second;
        }
        if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    }
    return CyclePermutation(std::move(cycles));
}

std::vector<std::int64_t> CyclePermutation::support() const {
    std::vector<std::int64_t> out;
    for (const auto& [n, _] : image_) out.push_back(n);
    return out;
}

std::int64_t CyclePermutation::apply(std::int64_t n) const {
    auto it = image_.find(n);
    return it == image_.end() ? n : it->second;
}

CyclePermutation CyclePermutation::inverse() const {
    auto cycles = cycles_;
    for (auto& c : cycles) std::reverse(c.begin(), c.end());
    return CyclePermutation(std::move(cycles));
}

namespace {

std::int64_t parse_entry(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad cycle entry '" + std::string(s) + "'");
    return v;
}

}  // namespace

CyclePermutation parse_cycles(std::string_view text) {
    std::vector<std::vector<std::int64_t>> cycles;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    if (i == text.size()) return {};
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle text");
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unterminated cycle");
        const auto body = text.substr(i + 1, close - i - 1);
        i = close + 1;
        skip_space();

        std::vector<std::int64_t> cycle;
        const bool separated = body.find_first_of(", \t") != std::string_view::npos;
        if (!separated) {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("compact cycle form accepts single digits only");
                cycle.push_back(c - '0');
            }
        } else {
            std::size_t j = 0;
            while (j < body.size()) {
                while (j < body.size() && (body[j] == ',' || std::isspace(static_cast<unsigned char>(body[j])))) ++j;
                if (j == body.size()) break;
                auto end = body.find_first_of(", \t", j);
                if (end == std::string_view::npos) end = body.size();
                cycle.push_back(parse_entry(body.substr(j, end - j)));
                j = end;
            }
        }
        if (cycle.empty()) continue;  // "()"
        if (cycle.size() == 1) throw ParseError("a cycle needs at least two entries");
        cycles.push_back(std::move(cycle));
    }
    try {
        return CyclePermutation(std::move(cycles));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

TreePermutation::TreePermutation(ReducedWord word, std::shared_ptr<const VertexLabeling> labeling)
    : word_(std::move(word)), labeling_(std::move(labeling)) {
    if (!labeling_) throw std::invalid_argument("tree permutation needs a labeling");
    if (word_.max_index() > 0 && !labeling_->rank().admits(word_.max_index()))
        throw ContextError("word uses a generator outside rank " + labeling_->rank().to_string());
}

std::int64_t TreePermutation::apply(std::int64_t n) const {
    if (word_.empty()) return n;
    return labeling_->label_of_word(multiply(word_, labeling_->word_of_label(n)));
}

std::int64_t IntegerPermutation::apply(std::int64_t n) const {
    return std::visit(
        [n](const auto& p) -> std::int64_t {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ProductPermutation>)
                return p.outer->apply(p.inner->apply(n));
            else
                return p.apply(n);
        },
        form_);
}

std::int64_t apply(const IntegerPermutation& p, std::int64_t n) { return p.apply(n); }

IntegerPermutation compose(const IntegerPermutation& p, const IntegerPermutation& q) {
    if (const auto* a = p.tree(); a) {
        if (const auto* b = q.tree(); b) {
            if (!(a->labeling()->rank() == b->labeling()->rank()))
                throw ContextError("tree permutations over different labelings");
            return TreePermutation(multiply(a->word(), b->word()), a->labeling());
        }
    }
    if (const auto* a = p.cycle(); a) {
        if (const auto* b = q.cycle(); b) {
            std::map<std::int64_t, std::int64_t> images;
            for (auto n : a->support()) images[n] = a->apply(b->apply(n));
            for (auto n : b->support()) images[n] = a->apply(b->apply(n));
            return CyclePermutation::from_mapping(images);
        }
    }
    return ProductPermutation{std::make_shared<const IntegerPermutation>(p),
                              std::make_shared<const IntegerPermutation>(q)};
}

IntegerPermutation inverse(const IntegerPermutation& p) {
    return std::visit(
        [](const auto& f) -> IntegerPermutation {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ProductPermutation>)
                return ProductPermutation{std::make_shared<const IntegerPermutation>(inverse(*f.inner)),
                                          std::make_shared<const IntegerPermutation>(inverse(*f.outer))};
            else
                return f.inverse();
        },
        p.form());
}

std::vector<std::int64_t> fixed_points_in_window(const IntegerPermutation& p, std::int64_t lo,
                                                 std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (auto n = lo; n <= hi; ++n)
        if (p.apply(n) == n) out.push_back(n);
    return out;
}

}  // namespace paraline
