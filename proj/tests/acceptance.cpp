// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "paraline/cli.hpp"
#include "paraline/labeling.hpp"
#include "paraline/paradox.hpp"
#include "paraline/rigid.hpp"
#include "paraline/word_text.hpp"

using namespace paraline;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::pair<int, std::string> run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << " s";
    return o.str();
}

Outcome partition() {
    const auto t0 = Clock::now();
    const auto [code, out] = run_cli({"verify", "--k", "2", "--window", "-10000..10000"});
    const double elapsed = seconds_since(t0);
    const auto j = nlohmann::json::parse(out);
    std::int64_t total = 0;
    for (const auto& [name, c] : j["counts"].items()) total += c.get<std::int64_t>();
    const bool ok = total == 20001 && j["violations"].empty() && j["counts"].size() == 4 && elapsed < 10.0;
    return {ok, "A+B+C+D=" + std::to_string(total) + " violations=" + std::to_string(j["violations"].size()) +
                    " time=" + fmt_seconds(elapsed) + " (limit 10 s)"};
}

Outcome reassembly() {
    const auto [code, out] = run_cli({"verify", "--k", "2", "--window", "-10000..10000"});
    const auto j = nlohmann::json::parse(out);
    const auto& g = j["coverage"]["1"];
    const auto& h = j["coverage"]["2"];
    const bool ok = code == 0 && g["covered"] == 20001 && h["covered"] == 20001 && g["double_covered"] == 0 &&
                    h["double_covered"] == 0 && j["pass"] == true;
    return {ok, "cov_g=" + g["covered"].dump() + " cov_h=" + h["covered"].dump() + " double=" +
                    std::to_string(g["double_covered"].get<int>() + h["double_covered"].get<int>()) +
                    " exit=" + std::to_string(code)};
}

Outcome fixed_points() {
    const ParadoxInstance inst(Rank::finite(2));
    const auto t0 = Clock::now();
    const auto rep = certify_free_action(inst, 8, -500, 500);
    const double elapsed = seconds_since(t0);
    // Every nonempty reduced word of length <= 8: sum over L of 4 * 3^(L-1).
    std::int64_t expected = 0;
    for (std::int64_t L = 1, block = 4; L <= 8; ++L, block *= 3) expected += block;
    const bool ok = rep.words == expected && rep.fixed_points == 0 && rep.distinct_actions == expected &&
                    elapsed < 60.0;
    return {ok, "words=" + std::to_string(rep.words) + " fixed_points=" + std::to_string(rep.fixed_points) +
                    " distinct=" + std::to_string(rep.distinct_actions) + " time=" + fmt_seconds(elapsed) +
                    " (limit 60 s)"};
}

Outcome homomorphism() {
    const auto lab = std::make_shared<const VertexLabeling>(Rank::finite(2));
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> pick(-100'000, 100'000);
    std::int64_t agree = 0, total = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto u = oracle::random_word(rng, 2, 10);
        const auto v = oracle::random_word(rng, 2, 10);
        const TreePermutation tu(u, lab), tv(v, lab), tuv(multiply(u, v), lab);
        for (int s = 0; s < 50; ++s, ++total) {
            const auto n = pick(rng);
            agree += tuv.apply(n) == tu.apply(tv.apply(n));
        }
    }
    return {agree == total && total == 50'000,
            std::to_string(agree) + "/" + std::to_string(total) + " samples agree"};
}

Outcome labeling_bijection() {
    const VertexLabeling lab(Rank::finite(2));
    std::int64_t label_fail = 0, word_fail = 0;
    for (std::int64_t n = -100'000; n <= 100'000; ++n) label_fail += lab.label_of_word(lab.word_of_label(n)) != n;
    for (const auto& w : enumerate_words(lab, 100'000)) word_fail += lab.word_of_label(lab.label_of_word(w)) != w;
    return {label_fail == 0 && word_fail == 0, "label round-trip failures=" + std::to_string(label_fail) +
                                                   " word round-trip failures=" + std::to_string(word_fail)};
}

Outcome unique_connecting_word() {
    const auto lab = std::make_shared<const VertexLabeling>(Rank::finite(2));
    std::vector<std::vector<ReducedWord>> by_length;
    for (int L = 0; L <= 10; ++L) by_length.push_back(words_of_length(2, L));
    std::int64_t pairs = 0, bad = 0;
    for (std::int64_t m = -20; m <= 20; ++m)
        for (std::int64_t n = -20; n <= 20; ++n, ++pairs) {
            const auto u = connecting_word(*lab, m, n);
            int hits = 0;
            bool matches = true;
            for (std::size_t L = 0; L <= u.length() + 2; ++L)
                for (const auto& cand : by_length[L])
                    if (TreePermutation(cand, lab).apply(m) == n) {
                        ++hits;
                        matches = matches && cand == u;
                    }
            bad += !(hits == 1 && matches);
        }
    return {bad == 0 && pairs == 41 * 41, std::to_string(pairs - bad) + "/" + std::to_string(pairs) +
                                              " pairs have exactly one word of length <= |u|+2"};
}

Outcome generalization() {
    std::string detail;
    bool ok = true;
    for (int k : {3, 5}) {
        const ParadoxInstance inst(Rank::finite(k));
        const auto part = verify_partition(inst, -2000, 2000);
        const auto re = verify_reassembly(inst, -2000, 2000, default_pairs(inst, std::nullopt));
        bool full = re.coverage.size() == std::size_t(k);
        for (const auto& [j, cov] : re.coverage) full = full && cov.covered == 4001;
        ok = ok && part.pass() && part.total() == 4001 && re.pass() && full;
        detail += "k=" + std::to_string(k) + ":" + (part.pass() && re.pass() && full ? "ok " : "FAIL ");
    }
    const ParadoxInstance om(Rank::omega());
    const VerifyOptions opts{10};
    const auto part = verify_partition(om, -2000, 2000, opts);
    const auto re = verify_reassembly(om, -2000, 2000, default_pairs(om, 10), opts);
    bool full = re.coverage.size() == 10;
    for (const auto& [j, cov] : re.coverage) full = full && cov.covered == 4001;
    ok = ok && part.pass() && part.total() == 4001 && re.pass() && full;
    detail += std::string("omega(J=10):") + (part.pass() && re.pass() && full ? "ok" : "FAIL");
    return {ok, detail};
}

Outcome rigidity() {
    const auto lab = std::make_shared<const VertexLabeling>(Rank::finite(2));
    auto tree_map = [&](const ReducedWord& w) { return PiecewiseRigidMap(TreePermutation(w, lab)); };
    const auto f_sigma = tree_map(ReducedWord::from_reduced({gen(1)}));
    const auto f_tau = tree_map(ReducedWord::from_reduced({gen(2)}));
    std::vector<PiecewiseRigidMap> maps = {f_sigma, f_tau, f_sigma.inverse(), f_tau.inverse()};
    std::mt19937_64 rng(77);
    const std::vector<PiecewiseRigidMap> gens = maps;
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), depth(2, 6);
    for (int i = 0; i < 20; ++i) {
        std::vector<PiecewiseRigidMap> factors;
        for (auto d = depth(rng); d > 0; --d) factors.push_back(gens[pick(rng)]);
        maps.push_back(PiecewiseRigidMap::composite(factors));
    }
    int passed = 0;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto rep = rigidity_audit(maps[i], -500, 500, 10'000, 1000 + i);
        passed += rep.pass();
    }
    return {passed == int(maps.size()), std::to_string(passed) + "/" + std::to_string(maps.size()) +
                                            " maps pass (10000 samples each, window [-500, 500))"};
}

Outcome figure_one() {
    const auto [code, svg] = run_cli({"plot-fn", "--perm", "(012534)", "--window", "-2..8"});
    std::vector<std::int64_t> offsets;
    const std::regex re("data-offset=\"(-?[0-9]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        offsets.push_back(std::stoll((*it)[1]));
    const std::vector<std::int64_t> expected = {0, 0, 1, 1, 3, 1, -4, -2, 0, 0};
    std::ifstream f(std::filesystem::path(PARALINE_GOLDEN_DIR) / "fig1_cycle_012534.svg", std::ios::binary);
    const std::string golden{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    std::string shown;
    for (auto o : offsets) shown += (shown.empty() ? "" : ",") + std::to_string(o);
    return {code == 0 && offsets == expected && svg == golden,
            "offsets=[" + shown + "] golden " + (svg == golden ? "byte-identical" : "DIFFERS")};
}

Outcome measure() {
    const ParadoxInstance inst(Rank::finite(2));
    const auto rep = measure_audit(inst, -100, 100);
    const auto cg = rep.coverage.at(1), ch = rep.coverage.at(2);
    return {rep.total() == 201 && cg == 201 && ch == 201 && rep.pass(),
            "a+b+c+d=" + std::to_string(rep.total()) + " cov_g=" + std::to_string(cg) +
                " cov_h=" + std::to_string(ch)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 partition of the line into A,B,C,D", partition},
        {"2 reassembly A+g(B) = C+h(D) = window", reassembly},
        {"3 fixed-point freeness, words of length <= 8", fixed_points},
        {"4 word action is a homomorphism", homomorphism},
        {"5 labeling bijection round trips", labeling_bijection},
        {"6 unique connecting word", unique_connecting_word},
        {"7 generalization to k=3, k=5, omega", generalization},
        {"8 rigidity audit", rigidity},
        {"9 figure 1 reproduction", figure_one},
        {"10 measure audit", measure},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - std::size_t(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
