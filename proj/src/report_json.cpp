#include "paraline/report_json.hpp"

#include "paraline/word_text.hpp"

namespace paraline {

using nlohmann::json;

namespace {

json window_json(std::int64_t lo, std::int64_t hi) { return {{"lo", lo}, {"hi", hi}}; }

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
        json item = {{"n", v.n}, {"reason", v.reason}};
        if (v.pair > 0) item["pair"] = v.pair;
        out.push_back(std::move(item));
    }
    return out;
}

json counts_json(const ParadoxInstance& inst, const std::map<WordClass, std::int64_t>& counts) {
    json out = json::object();
    for (const auto& [cls, c] : counts)
        out[cls.pair == 0 ? std::string("overflow") : inst.class_name(cls)] = c;
    return out;
}

}  // namespace

json to_json(const ParadoxInstance& inst, const PartitionReport& rep) {
    json out = {{"window", window_json(rep.lo, rep.hi)},
                {"rank", rep.rank},
                {"special_pair", inst.special()},
                {"counts", counts_json(inst, rep.counts)},
                {"violations", violations_json(rep.violations)},
                {"pass", rep.pass()}};
    if (rep.pair_limit) {
        out["pair_limit"] = *rep.pair_limit;
        out["counts"]["overflow"] = rep.overflow;
    }
    return out;
}

json to_json(const ParadoxInstance& inst, const ReassemblyReport& rep) {
    json cov = json::object();
    for (const auto& [j, c] : rep.coverage)
        cov[std::to_string(j)] = {{"plus", c.plus}, {"image", c.image}, {"covered", c.covered}, {"double_covered", c.doubled}};
    return {{"window", window_json(rep.lo, rep.hi)},
            {"rank", rep.rank},
            {"special_pair", inst.special()},
            {"coverage", cov},
            {"violations", violations_json(rep.violations)},
            {"pass", rep.pass()}};
}

json to_json(const ParadoxInstance& inst, const MeasureAuditReport& rep) {
    json cov = json::object();
    for (const auto& [j, c] : rep.coverage) cov[std::to_string(j)] = c;
    return {{"window", window_json(rep.lo, rep.hi)},
            {"rank", inst.rank().to_string()},
            {"window_size", rep.window_size},
            {"counts", counts_json(inst, rep.counts)},
            {"total", rep.total()},
            {"coverage", cov},
            {"pass", rep.pass()}};
}

json to_json(const CertReport& rep) {
    json wit = json::array();
    for (const auto& [w, n] : rep.witnesses) wit.push_back({{"word", format_word(w)}, {"fixed_point", n}});
    return {{"max_length", rep.max_length},
            {"window", window_json(rep.lo, rep.hi)},
            {"words", rep.words},
            {"fixed_points", rep.fixed_points},
            {"distinct_actions", rep.distinct_actions},
            {"witnesses", wit},
            {"pass", rep.pass()}};
}

json to_json(const AuditReport& rep) {
    return {{"window", window_json(rep.lo, rep.hi)},
            {"samples", rep.samples},
            {"bijective", rep.bijective},
            {"unit_slope", rep.unit_slope},
            {"discrete_jumps", rep.discrete_jumps},
            {"discontinuities", rep.discontinuities},
            {"witnesses", rep.witnesses},
            {"pass", rep.pass()}};
}

json verification_json(const ParadoxInstance& inst, const PartitionReport& part, const ReassemblyReport& re,
                       const CertReport* cert) {
    auto p = to_json(inst, part);
    auto r = to_json(inst, re);
    json violations = json::array();
    for (auto& v : p["violations"]) {
        v["check"] = "partition";
        violations.push_back(v);
    }
    for (auto& v : r["violations"]) {
        v["check"] = "reassembly";
        violations.push_back(v);
    }
    bool pass = part.pass() && re.pass();
    json out = {{"window", p["window"]},
                {"rank", p["rank"]},
                {"special_pair", inst.special()},
                {"counts", p["counts"]},
                {"coverage", r["coverage"]},
                {"violations", violations}};
    if (part.pair_limit) out["pair_limit"] = *part.pair_limit;
    if (cert) {
        out["free_action"] = to_json(*cert);
        pass = pass && cert->pass();
    }
    out["pass"] = pass;
    return out;
}

}  // namespace paraline
