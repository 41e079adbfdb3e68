#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <set>
#include <sstream>

#include "paraline/cli.hpp"
#include "paraline/paradox.hpp"
#include "paraline/word_text.hpp"

using namespace paraline;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::int64_t> svg_offsets(const std::string& svg) {
    std::vector<std::int64_t> out;
    const std::regex re("data-offset=\"(-?[0-9]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        out.push_back(std::stoll((*it)[1]));
    return out;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const std::filesystem::path golden_dir = PARALINE_GOLDEN_DIR;

}  // namespace

TEST_CASE("classify rows") {
    CHECK(run({"classify", "--k", "2", "--window", "0..0"}).out == "n,word,class\n0,e,D\n");
    CHECK(run({"classify", "--k", "2", "--window", "1..2"}).out == "n,word,class\n1,x1,A\n2,x2,D\n");
    CHECK(run({"classify", "--k", "omega", "--J", "3", "--window", "3..3"}).out == "n,word,class\n3,x3,A_3\n");
}

TEST_CASE("classify output re-parses and agrees with the library") {
    const auto res = run({"classify", "--k", "3", "--window", "-300..300"});
    REQUIRE(res.code == 0);
    const ParadoxInstance inst(Rank::finite(3));
    const auto rows = lines(res.out);
    REQUIRE(rows.size() == 602);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto c1 = rows[i].find(','), c2 = rows[i].rfind(',');
        const auto n = std::stoll(rows[i].substr(0, c1));
        const auto word = parse_word(rows[i].substr(c1 + 1, c2 - c1 - 1), inst.rank());
        REQUIRE(word == inst.labeling()->word_of_label(n));
        REQUIRE(rows[i].substr(c2 + 1) == inst.class_name(inst.classify_interval(n)));
    }
}

TEST_CASE("classify json format") {
    const auto res = run({"classify", "--window", "-1..1", "--format", "json"});
    const auto j = nlohmann::json::parse(res.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["class"] == "B");
    CHECK(j[1]["word"] == "e");
}

TEST_CASE("verify exit codes and report") {
    const auto res = run({"verify", "--k", "2", "--window", "-10000..10000"});
    CHECK(res.code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["pass"] == true);
    CHECK(j["violations"].empty());
    CHECK(j["coverage"]["1"]["covered"] == 20001);
    CHECK(j["coverage"]["2"]["covered"] == 20001);
    CHECK(j["window"]["lo"] == -10000);

    CHECK(run({"verify", "--k", "3", "--window", "-2000..2000"}).code == 0);
    const auto free = run({"verify", "--k", "2", "--window", "-500..500", "--free-check", "4"});
    CHECK(free.code == 0);
    CHECK(nlohmann::json::parse(free.out)["free_action"]["words"] == 4 + 12 + 36 + 108);

    CHECK(run({"verify", "--window", "-5..5", "--free-check", "12", "--budget", "100"}).code == cli::kBudget);
    CHECK(run({"verify", "--k", "omega", "--window", "0..5"}).code == cli::kUsage);
    const auto om = run({"verify", "--k", "omega", "--J", "10", "--window", "-2000..2000"});
    CHECK(om.code == 0);
    CHECK(nlohmann::json::parse(om.out)["coverage"].size() == 10);

    const auto csv = run({"verify", "--window", "-8..8", "--format", "csv"});
    CHECK(csv.out == "class,count\nA,4\nB,4\nC,2\nD,7\n");
}

TEST_CASE("measure command") {
    const auto res = run({"measure", "--window", "-100..100"});
    CHECK(res.code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["total"] == 201);
    CHECK(j["coverage"]["1"] == 201);
    CHECK(j["coverage"]["2"] == 201);
}

TEST_CASE("plot-fn") {
    const auto fig = run({"plot-fn", "--perm", "(012534)", "--window", "-2..8"});
    CHECK(fig.code == 0);
    CHECK(svg_offsets(fig.out) == std::vector<std::int64_t>{0, 0, 1, 1, 3, 1, -4, -2, 0, 0});
    CHECK(fig.out == slurp(golden_dir / "fig1_cycle_012534.svg"));

    const auto diag = run({"plot-fn", "--word", "e", "--window", "0..3"});
    CHECK(svg_offsets(diag.out) == std::vector<std::int64_t>{0, 0, 0});
    const auto sigma = run({"plot-fn", "--word", "x1", "--k", "2", "--window", "-1..2"});
    CHECK(svg_offsets(sigma.out) == std::vector<std::int64_t>{1, 1, 2});
    CHECK(count_of(sigma.out, "fill=\"#ffffff\"") == 3);  // open right endpoints

    CHECK(run({"plot-fn", "--perm", "(01"}).code == cli::kUsage);
    CHECK(run({"plot-fn"}).code == cli::kUsage);
    CHECK(run({"plot-fn", "--perm", "(01)", "--word", "x1"}).code == cli::kUsage);
}

TEST_CASE("plot-cayley") {
    const auto r0 = run({"plot-cayley", "--radius", "0"}).out;
    CHECK(count_of(r0, "[label=\"0\"") == 1);
    CHECK(count_of(r0, "->") == 0);
    const auto r1 = run({"plot-cayley", "--radius", "1"}).out;
    CHECK(count_of(r1, "tooltip=") == 5);
    CHECK(count_of(r1, "->") == 4);
    const auto r2 = run({"plot-cayley", "--radius", "2"}).out;
    CHECK(count_of(r2, "tooltip=") == 17);
    CHECK(count_of(r2, "->") == 16);
    CHECK(r2 == slurp(golden_dir / "cayley_k2_r2.dot"));
    CHECK(run({"plot-cayley", "--k", "omega"}).code == cli::kUsage);
}

TEST_CASE("connect") {
    CHECK(run({"connect", "5", "5"}).out == "e\n");
    CHECK(run({"connect", "1", "3"}).out == "x1\n");
    CHECK(run({"connect", "2", "7"}).out == "x2\n");
    const auto checked = run({"connect", "-14", "6", "--check"});
    CHECK(checked.code == 0);
    CHECK(checked.out.find("(ok)") != std::string::npos);
}

TEST_CASE("enumerate") {
    CHECK(run({"enumerate", "--count", "3"}).out == "label,position,word,length\n0,0,e,0\n1,1,x1,1\n-1,2,X1,1\n");
    CHECK(run({"enumerate", "--window", "-3..-3"}).out == "label,position,word,length\n-3,6,x1 x2,2\n");
    CHECK(run({"enumerate", "--k", "omega", "--count", "6"}).out.ends_with("3,5,x3,1\n"));
}

TEST_CASE("line-strip") {
    const auto one = run({"line-strip", "--window", "0..0"}).out;
    CHECK(count_of(one, "data-class=") == 1);
    CHECK(count_of(one, "data-class=\"D\" x=\"20\" y=\"20\" width=\"30\" height=\"30\" fill=\"#e7298a\"") == 1);

    const auto strip = run({"line-strip", "--window", "-8..8"}).out;
    CHECK(count_of(strip, "data-class=") == 17);
    CHECK(count_of(strip, "data-class=\"A\"") == 4);
    CHECK(count_of(strip, "data-class=\"B\"") == 4);
    CHECK(count_of(strip, "data-class=\"C\"") == 2);
    CHECK(count_of(strip, "data-class=\"D\"") == 7);

    const auto k3 = run({"line-strip", "--k", "3", "--window", "-20..20"}).out;
    CHECK(count_of(k3, "data-class=") == 41);
    std::set<std::string> classes;
    const std::regex re("data-class=\"([A-Z_0-9]+)\"");
    for (auto it = std::sregex_iterator(k3.begin(), k3.end(), re); it != std::sregex_iterator(); ++it)
        classes.insert((*it)[1]);
    CHECK(classes.size() == 6);
    CHECK(k3.find("(special pair)") != std::string::npos);
}

TEST_CASE("audit command") {
    const auto res = run({"audit", "--perm", "(012534)", "--window", "-1..7", "--samples", "500"});
    CHECK(res.code == 0);
    CHECK(nlohmann::json::parse(res.out)["discontinuities"] == nlohmann::json({0, 2, 3, 4, 5, 6}));
}

TEST_CASE("identical flags give byte-identical output") {
    const std::vector<std::vector<std::string>> commands = {
        {"classify", "--k", "5", "--window", "-50..50"},
        {"verify", "--k", "3", "--window", "-500..500", "--workers", "3"},
        {"plot-fn", "--word", "x1 X2", "--window", "-5..5"},
        {"plot-cayley", "--k", "3", "--radius", "2"},
        {"line-strip", "--k", "omega", "--J", "4", "--window", "-30..30"},
        {"audit", "--word", "x2 x1", "--seed", "9"},
        {"enumerate", "--k", "omega", "--count", "50"}};
    for (const auto& c : commands) {
        const auto a = run(c), b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    CHECK(run({"verify", "--k", "3", "--window", "-500..500", "--workers", "1"}).out ==
          run({"verify", "--k", "3", "--window", "-500..500", "--workers", "4"}).out);
}

TEST_CASE("--out writes the file atomically") {
    const auto dir = std::filesystem::temp_directory_path() / "paraline_cli_test";
    std::filesystem::create_directories(dir);
    const auto target = dir / "report.json";
    const auto res = run({"verify", "--window", "-20..20", "--out", target.string()});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    CHECK(nlohmann::json::parse(slurp(target))["pass"] == true);
    CHECK(!std::filesystem::exists(dir / "report.json.tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"classify", "--window", "3"}).code == cli::kUsage);
    CHECK(run({"classify", "--window", "5..1"}).code == cli::kUsage);
    CHECK(run({"classify", "--k", "1"}).code == cli::kUsage);
    CHECK(run({"classify", "--format", "svg"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"plot-fn", "--word", "x3", "--k", "2"}).code == cli::kUsage);
}
