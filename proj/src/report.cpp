#include "sysmod/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace sysmod {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (const auto& c : other.clauses)
        clauses.push_back({prefix.empty() ? c.id : prefix + "/" + c.id, c.anchor, c.verdict, c.witness});
}

int VerificationReport::count(Verdict v) const {
    return static_cast<int>(
        std::count_if(clauses.begin(), clauses.end(), [v](const Clause& c) { return c.verdict == v; }));
}

Verdict VerificationReport::overall() const {
    if (count(Verdict::Fail) > 0) return Verdict::Fail;
    if (count(Verdict::Inconclusive) > 0) return Verdict::Inconclusive;
    return Verdict::Pass;
}

std::string to_text(const VerificationReport& rep) {
    std::string out = "suite " + rep.suite + "\n";
    for (const auto& [k, v] : rep.scope) out += "  scope " + k + " = " + v + "\n";
    for (const auto& c : rep.clauses) {
        out += "  [" + std::string(verdict_name(c.verdict)) + "] " + c.id;
        if (!c.anchor.empty()) out += " <" + c.anchor + ">";
        if (!c.witness.empty()) out += " : " + c.witness;
        out += "\n";
    }
    out += "  summary pass=" + std::to_string(rep.count(Verdict::Pass)) +
           " fail=" + std::to_string(rep.count(Verdict::Fail)) +
           " skipped=" + std::to_string(rep.count(Verdict::Skipped)) +
           " inconclusive=" + std::to_string(rep.count(Verdict::Inconclusive)) + "\n";
    return out;
}

std::string to_structured(const VerificationReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    nlohmann::json scope = nlohmann::json::object();
    for (const auto& [k, v] : rep.scope) scope[k] = v;
    j["scope"] = scope;
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& c : rep.clauses) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["verdict"] = verdict_name(c.verdict);
        if (!c.witness.empty()) jc["witness"] = c.witness;
        clauses.push_back(jc);
    }
    j["clauses"] = clauses;
    j["summary"] = {{"pass", rep.count(Verdict::Pass)},
                    {"fail", rep.count(Verdict::Fail)},
                    {"skipped", rep.count(Verdict::Skipped)},
                    {"inconclusive", rep.count(Verdict::Inconclusive)}};
    return j.dump(2) + "\n";
}

int report_exit_code(const VerificationReport& rep) {
    switch (rep.overall()) {
        case Verdict::Fail: return 1;
        case Verdict::Inconclusive: return 2;
        default: return 0;
    }
}

}  // namespace sysmod
