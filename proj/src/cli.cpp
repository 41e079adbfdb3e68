#include "paraline/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "paraline/errors.hpp"
#include "paraline/labeling.hpp"
#include "paraline/paradox.hpp"
#include "paraline/render.hpp"
#include "paraline/report_json.hpp"
#include "paraline/rigid.hpp"
#include "paraline/word_text.hpp"

namespace paraline::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

std::int64_t to_int(const std::string& s, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

Window parse_window(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("window must look like lo..hi, got '" + text + "'");
    Window w{to_int(text.substr(0, dots), "window bound"), to_int(text.substr(dots + 2), "window bound")};
    if (w.lo > w.hi) throw UsageError("window needs lo <= hi");
    return w;
}

struct Config {
    std::string k = "2";
    std::optional<int> pair_limit;
    std::string window;
    std::string format;
    std::string out_path;
    std::uint64_t seed = 1;
    unsigned workers = 1;

    Rank rank() const {
        if (k == "omega") return Rank::omega();
        const auto v = to_int(k, "--k");
        if (v < 2 || v > 1'000'000) throw UsageError("--k must be an integer >= 2 or 'omega'");
        return Rank::finite(int(v));
    }

    Window window_or(const char* fallback) const { return parse_window(window.empty() ? fallback : window); }

    std::string format_or(const std::string& fallback, std::initializer_list<const char*> allowed) const {
        const auto f = format.empty() ? fallback : format;
        for (const char* a : allowed)
            if (f == a) return f;
        throw UsageError("format '" + f + "' is not supported by this command");
    }

    VerifyOptions verify_options(const Rank& r) const {
        if (r.is_omega() && !pair_limit) throw UsageError("--k omega needs --J <pairs>");
        if (pair_limit && *pair_limit < 1) throw UsageError("--J must be >= 1");
        return {r.is_omega() ? pair_limit : std::nullopt, workers};
    }
};

/// Writes to --out through a temporary file and rename, or to `out`.
void emit(const Config& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target(cfg.out_path);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << text;
    }
    std::filesystem::rename(tmp, target);
}

PiecewiseRigidMap map_from_flags(const std::string& perm, const std::string& word, const Rank& rank,
                                 std::shared_ptr<const VertexLabeling>& lab) {
    if (!perm.empty() && !word.empty()) throw UsageError("give either --perm or --word, not both");
    if (!perm.empty()) return PiecewiseRigidMap(IntegerPermutation(parse_cycles(perm)));
    if (word.empty()) throw UsageError("one of --perm or --word is required");
    lab = std::make_shared<const VertexLabeling>(rank);
    return PiecewiseRigidMap(IntegerPermutation(TreePermutation(parse_word(word, rank), lab)));
}

/// CLI11 reads "-10..5" as a flag, so window values are glued to their flag.
std::vector<std::string> glue_window_values(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--window" && i + 1 < args.size()) {
            out.push_back("--window=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Paradoxical decomposition of the real line: classify, verify and draw."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Config cfg;
    app.add_option("--k", cfg.k, "rank: integer >= 2 or 'omega'");
    app.add_option("--J", cfg.pair_limit, "pairs inspected for rank omega");
    app.add_option("--window", cfg.window, "interval indices lo..hi (inclusive)");
    app.add_option("--format", cfg.format, "csv | json | svg | dot");
    app.add_option("--out", cfg.out_path, "output file (default stdout)");
    app.add_option("--seed", cfg.seed, "seed for sampled checks");
    app.add_option("--workers", cfg.workers, "threads for window verification")->check(CLI::Range(1u, 256u));

    auto* classify = app.add_subcommand("classify", "class of each interval [n, n+1) in the window");
    auto* verify = app.add_subcommand("verify", "check partition and reassembly over the window");
    int free_check = 0;
    std::int64_t budget = 2'000'000;
    verify->add_option("--free-check", free_check, "also certify the free action up to this word length");
    verify->add_option("--budget", budget, "word cap for --free-check");

    auto* plot_fn = app.add_subcommand("plot-fn", "SVG graph of the map induced by a permutation");
    std::string perm_text, word_text;
    plot_fn->add_option("--perm", perm_text, "cycle notation, e.g. \"(012534)\"");
    plot_fn->add_option("--word", word_text, "free-group word acting through the labeling");

    auto* plot_cayley = app.add_subcommand("plot-cayley", "DOT graph of the labeled Cayley ball");
    int radius = 2;
    plot_cayley->add_option("--radius", radius)->check(CLI::Range(0, 12));

    auto* connect = app.add_subcommand("connect", "reduced word carrying label m to label n");
    std::string from_text, to_text;
    bool check = false;
    connect->add_option("m", from_text)->required();
    connect->add_option("n", to_text)->required();
    connect->add_flag("--check", check, "apply the word and report the result");

    auto* enumerate = app.add_subcommand("enumerate", "labeling table (by --count positions or --window labels)");
    std::optional<std::int64_t> count;
    enumerate->add_option("--count", count)->check(CLI::PositiveNumber);

    auto* line_strip = app.add_subcommand("line-strip", "SVG strip coloring each interval by class");

    auto* measure = app.add_subcommand("measure", "counting audit of the decomposition over the window");

    auto* audit = app.add_subcommand("audit", "rigidity audit of a permutation-induced map");
    std::string audit_perm, audit_word;
    std::size_t samples = 1000;
    audit->add_option("--perm", audit_perm);
    audit->add_option("--word", audit_word);
    audit->add_option("--samples", samples)->check(CLI::Range(std::size_t(2), std::size_t(10'000'000)));

    for (auto* sub : {classify, verify, plot_fn, plot_cayley, connect, enumerate, line_strip, measure, audit})
        sub->fallthrough();

    auto args = glue_window_values(raw_args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        const Rank rank = cfg.rank();
        if (classify->parsed()) {
            const auto fmt = cfg.format_or("csv", {"csv", "json"});
            const auto w = cfg.window_or("-8..8");
            ParadoxInstance inst(rank);
            std::ostringstream body;
            nlohmann::json rows = nlohmann::json::array();
            if (fmt == "csv") body << "n,word,class\n";
            for (auto n = w.lo; n <= w.hi; ++n) {
                const auto word = inst.labeling()->word_of_label(n);
                const auto name = inst.class_name(classify_word(word, rank));
                if (fmt == "csv")
                    body << n << ',' << format_word(word) << ',' << name << '\n';
                else
                    rows.push_back({{"n", n}, {"word", format_word(word)}, {"class", name}});
            }
            if (fmt == "json") body << rows.dump(2) << '\n';
            emit(cfg, out, body.str());
            return kOk;
        }
        if (verify->parsed()) {
            const auto fmt = cfg.format_or("json", {"json", "csv"});
            const auto w = cfg.window_or("-8..8");
            ParadoxInstance inst(rank);
            const auto opts = cfg.verify_options(rank);
            const auto part = verify_partition(inst, w.lo, w.hi, opts);
            const auto re = verify_reassembly(inst, w.lo, w.hi, default_pairs(inst, opts.pair_limit), opts);
            std::optional<CertReport> cert;
            if (free_check > 0) {
                if (free_check > 64) throw UsageError("--free-check length too large");
                try {
                    cert = certify_free_action(inst, free_check, w.lo, w.hi, opts, budget);
                } catch (const BudgetExceeded& e) {
                    err << "error: " << e.what() << "\n";
                    return kBudget;
                }
            }
            const auto report = verification_json(inst, part, re, cert ? &*cert : nullptr);
            if (fmt == "json") {
                emit(cfg, out, report.dump(2) + "\n");
            } else {
                std::ostringstream body;
                body << "class,count\n";
                for (const auto& [name, c] : report["counts"].items()) body << name << ',' << c.get<std::int64_t>() << '\n';
                emit(cfg, out, body.str());
            }
            return report["pass"].get<bool>() ? kOk : kCheckFailed;
        }
        if (measure->parsed()) {
            cfg.format_or("json", {"json"});
            const auto w = cfg.window_or("-100..100");
            ParadoxInstance inst(rank);
            const auto rep = measure_audit(inst, w.lo, w.hi, cfg.verify_options(rank));
            emit(cfg, out, to_json(inst, rep).dump(2) + "\n");
            return rep.pass() ? kOk : kCheckFailed;
        }
        if (plot_fn->parsed()) {
            cfg.format_or("svg", {"svg"});
            const auto w = cfg.window_or("-2..8");
            std::shared_ptr<const VertexLabeling> lab;
            const auto f = map_from_flags(perm_text, word_text, rank, lab);
            emit(cfg, out, render_function_svg(pieces_in_window(f, w.lo, w.hi), w.lo, w.hi));
            return kOk;
        }
        if (audit->parsed()) {
            cfg.format_or("json", {"json"});
            const auto w = cfg.window_or("-8..8");
            if (w.lo == w.hi) throw UsageError("audit needs a window with lo < hi");
            std::shared_ptr<const VertexLabeling> lab;
            const auto f = map_from_flags(audit_perm, audit_word, rank, lab);
            const auto rep = rigidity_audit(f, w.lo, w.hi, samples, cfg.seed);
            emit(cfg, out, to_json(rep).dump(2) + "\n");
            return rep.pass() ? kOk : kCheckFailed;
        }
        if (plot_cayley->parsed()) {
            cfg.format_or("dot", {"dot"});
            if (rank.is_omega()) throw UnsupportedRank("plot-cayley needs a finite rank");
            VertexLabeling lab(rank);
            emit(cfg, out, render_cayley_dot(ball(lab, radius)));
            return kOk;
        }
        if (connect->parsed()) {
            const auto m = to_int(from_text, "m");
            const auto n = to_int(to_text, "n");
            auto lab = std::make_shared<const VertexLabeling>(rank);
            const auto u = connecting_word(*lab, m, n);
            std::ostringstream body;
            body << format_word(u) << '\n';
            if (check) {
                const auto image = TreePermutation(u, lab).apply(m);
                body << "check: " << format_word(u) << " maps " << m << " to " << image
                     << (image == n ? " (ok)" : " (MISMATCH)") << '\n';
                emit(cfg, out, body.str());
                return image == n ? kOk : kCheckFailed;
            }
            emit(cfg, out, body.str());
            return kOk;
        }
        if (enumerate->parsed()) {
            const auto fmt = cfg.format_or("csv", {"csv", "json"});
            VertexLabeling lab(rank);
            std::vector<std::int64_t> positions;
            if (count) {
                if (*count > 10'000'000) throw UsageError("--count too large");
                for (std::int64_t p = 0; p < *count; ++p) positions.push_back(p);
            } else {
                const auto w = cfg.window_or("-8..8");
                for (auto n = w.lo; n <= w.hi; ++n) positions.push_back(zigzag_position(n));
            }
            std::ostringstream body;
            nlohmann::json rows = nlohmann::json::array();
            if (fmt == "csv") body << "label,position,word,length\n";
            for (auto p : positions) {
                const auto word = lab.word_at(p);
                if (fmt == "csv")
                    body << zigzag_label(p) << ',' << p << ',' << format_word(word) << ',' << word.length() << '\n';
                else
                    rows.push_back({{"label", zigzag_label(p)}, {"position", p}, {"word", format_word(word)},
                                    {"length", word.length()}});
            }
            if (fmt == "json") body << rows.dump(2) << '\n';
            emit(cfg, out, body.str());
            return kOk;
        }
        if (line_strip->parsed()) {
            cfg.format_or("svg", {"svg"});
            const auto w = cfg.window_or("-8..8");
            ParadoxInstance inst(rank);
            emit(cfg, out, render_line_strip_svg(inst, w.lo, w.hi));
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidLetter& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedRank& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace paraline::cli
