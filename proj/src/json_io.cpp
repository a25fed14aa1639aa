#include "sdseq/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "sdseq/periodicity.hpp"

namespace sdseq::io {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

std::size_t index_from_json(const json& j, const char* what) {
    if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative number");
    return j.get<std::size_t>();
}

}  // namespace

json to_json(const Int& v) { return to_decimal(v); }

Int int_from_json(const json& j) {
    if (!j.is_string()) bad("integers are decimal strings");
    auto parsed = parse_int(j.get<std::string>());
    if (!parsed) bad("malformed decimal integer '" + j.get<std::string>() + "'");
    return *parsed;
}

json to_json(const std::vector<Int>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    return arr;
}

std::vector<Int> values_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of decimal strings");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(int_from_json(item));
    return out;
}

json to_json(const Params& p) {
    return json{{"P", to_json(p.P)}, {"Q", to_json(p.Q)}, {"R", to_json(p.R)}};
}

Params params_from_json(const json& j) {
    return Params{int_from_json(j.at("P")), int_from_json(j.at("Q")),
                  int_from_json(j.at("R"))};
}

json to_json(const LucasParams& lp) {
    return json{{"P", to_json(lp.P)}, {"Q", to_json(lp.Q)}};
}

LucasParams lucas_params_from_json(const json& j) {
    return LucasParams{int_from_json(j.at("P")), int_from_json(j.at("Q"))};
}

json to_json(const SequencePrefix& prefix) {
    return json{{"params", to_json(prefix.params)}, {"values", to_json(prefix.values)}};
}

SequencePrefix prefix_from_json(const json& j) {
    return SequencePrefix{params_from_json(j.at("params")),
                          values_from_json(j.at("values"))};
}

json to_json(const Recovery& rec) {
    switch (rec.kind) {
        case Recovery::Kind::Unique:
            return json{{"kind", "unique"}, {"params", to_json(*rec.params)}};
        case Recovery::Kind::Geometric:
            return json{{"kind", "geometric"}, {"ratio", to_json(*rec.ratio)}};
        case Recovery::Kind::Inconsistent:
            return json{{"kind", "inconsistent"}};
    }
    bad("unknown recovery kind");
}

Recovery recovery_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "unique") return Recovery::unique(params_from_json(j.at("params")));
    if (kind == "geometric") return Recovery::geometric(int_from_json(j.at("ratio")));
    if (kind == "inconsistent") return Recovery::inconsistent();
    bad("unknown recovery kind '" + kind + "'");
}

json to_json(const DivisibilityReport& rep) {
    json j{{"kind", rep.kind == DivisibilityKind::Strong ? "strong" : "weak"},
           {"bound", rep.bound},
           {"holds", rep.holds}};
    if (rep.witness) j["witness"] = json{{"i", rep.witness->first}, {"j", rep.witness->second}};
    return j;
}

DivisibilityReport divisibility_report_from_json(const json& j) {
    DivisibilityReport rep;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "strong")
        rep.kind = DivisibilityKind::Strong;
    else if (kind == "weak")
        rep.kind = DivisibilityKind::Weak;
    else
        bad("unknown divisibility kind '" + kind + "'");
    rep.bound = index_from_json(j.at("bound"), "bound");
    rep.holds = j.at("holds").get<bool>();
    if (j.contains("witness"))
        rep.witness = {index_from_json(j.at("witness").at("i"), "witness.i"),
                       index_from_json(j.at("witness").at("j"), "witness.j")};
    return rep;
}

json to_json(const HSCriterionReport& rep) {
    json j{{"passed", rep.passed},
           {"reason", rep.reason},
           {"k", to_json(rep.k)},
           {"u3", to_json(rep.u3)},
           {"u4", to_json(rep.u4)},
           {"u5", to_json(rep.u5)}};
    if (rep.f) j["f"] = to_json(*rep.f);
    return j;
}

HSCriterionReport hs_report_from_json(const json& j) {
    HSCriterionReport rep;
    rep.passed = j.at("passed").get<bool>();
    rep.reason = j.at("reason").get<std::string>();
    rep.k = int_from_json(j.at("k"));
    rep.u3 = int_from_json(j.at("u3"));
    rep.u4 = int_from_json(j.at("u4"));
    rep.u5 = int_from_json(j.at("u5"));
    if (j.contains("f")) rep.f = int_from_json(j.at("f"));
    return rep;
}

json to_json(const Classification& c) {
    json fams = json::array();
    for (Family f : c.families) fams.push_back(family_name(f));
    json j{{"strong_divisible", c.strong_divisible},
           {"families", std::move(fams)},
           {"geometric", c.geometric}};
    if (c.epsilon) j["epsilon"] = to_json(*c.epsilon);
    if (c.r) j["r"] = to_json(*c.r);
    return j;
}

Classification classification_from_json(const json& j) {
    Classification c;
    c.strong_divisible = j.at("strong_divisible").get<bool>();
    for (const auto& name : j.at("families")) {
        const std::string s = name.get<std::string>();
        if (s == "LucasCoprime")
            c.families.push_back(Family::LucasCoprime);
        else if (s == "PulseFamily")
            c.families.push_back(Family::PulseFamily);
        else if (s == "NullQFamily")
            c.families.push_back(Family::NullQFamily);
        else if (s == "PeriodSixFamily")
            c.families.push_back(Family::PeriodSixFamily);
        else
            bad("unknown family '" + s + "'");
    }
    c.geometric = j.at("geometric").get<bool>();
    if (j.contains("epsilon")) c.epsilon = int_from_json(j.at("epsilon"));
    if (j.contains("r")) c.r = int_from_json(j.at("r"));
    return c;
}

json to_json(const PeriodInfo& info) {
    return json{{"preperiod", info.preperiod},
                {"period", info.period},
                {"detected_within", info.detected_within}};
}

PeriodInfo period_info_from_json(const json& j) {
    return PeriodInfo{index_from_json(j.at("preperiod"), "preperiod"),
                      index_from_json(j.at("period"), "period"),
                      index_from_json(j.at("detected_within"), "detected_within")};
}

json to_json(const SearchBox& box) {
    return json{{"pmax", box.pmax}, {"qmax", box.qmax}, {"rmax", box.rmax},
                {"depth", box.depth}};
}

SearchBox search_box_from_json(const json& j) {
    SearchBox box;
    box.pmax = j.at("pmax").get<long>();
    box.qmax = j.at("qmax").get<long>();
    box.rmax = j.at("rmax").get<long>();
    box.depth = index_from_json(j.at("depth"), "depth");
    return box;
}

json to_json(const SearchReport& report, bool include_timing) {
    json survivors = json::array();
    for (const auto& [params, verdict] : report.survivors)
        survivors.push_back(
            json{{"params", to_json(params)}, {"classification", to_json(verdict)}});
    json mismatches = json::array();
    for (const auto& params : report.mismatches) mismatches.push_back(to_json(params));
    json stats{{"triples_tested", report.stats.triples_tested},
               {"early_exits", report.stats.early_exits}};
    if (include_timing) stats["elapsed_ms"] = report.stats.elapsed_ms;
    return json{{"box", to_json(report.box)},
                {"survivors", std::move(survivors)},
                {"mismatches", std::move(mismatches)},
                {"stats", std::move(stats)}};
}

SearchReport search_report_from_json(const json& j) {
    SearchReport report;
    report.box = search_box_from_json(j.at("box"));
    for (const auto& entry : j.at("survivors"))
        report.survivors.emplace_back(params_from_json(entry.at("params")),
                                      classification_from_json(entry.at("classification")));
    for (const auto& entry : j.at("mismatches"))
        report.mismatches.push_back(params_from_json(entry));
    const auto& stats = j.at("stats");
    report.stats.triples_tested = stats.at("triples_tested").get<std::uint64_t>();
    report.stats.early_exits = stats.at("early_exits").get<std::uint64_t>();
    if (stats.contains("elapsed_ms")) report.stats.elapsed_ms = stats.at("elapsed_ms").get<double>();
    return report;
}

json to_json(const std::vector<SelfTestCheck>& checks) {
    json arr = json::array();
    bool all = true;
    for (const auto& c : checks) {
        arr.push_back(json{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}});
        all = all && c.passed;
    }
    return json{{"checks", std::move(arr)}, {"passed", all}};
}

std::string survivors_csv(const SearchReport& report) {
    std::ostringstream out;
    out << "P,Q,R,families,period\n";
    for (const auto& [params, verdict] : report.survivors) {
        out << to_decimal(params.P) << ',' << to_decimal(params.Q) << ','
            << to_decimal(params.R) << ',';
        for (std::size_t i = 0; i < verdict.families.size(); ++i) {
            if (i) out << '|';
            out << family_name(verdict.families[i]);
        }
        out << ',';
        auto detected = detect_period(gen_sequence(params, report.box.depth).values);
        if (detected) out << detected->period;
        out << '\n';
    }
    return out.str();
}

}  // namespace sdseq::io
