#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sysmod {

enum class Verdict { Pass, Fail, Skipped, Inconclusive };

const char* verdict_name(Verdict v);

struct Clause {
    std::string id;       // unique within the report
    std::string anchor;   // result label the clause traces back to
    Verdict verdict = Verdict::Pass;
    std::string witness;  // counterexample, budget note or skip reason
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> scope;  // ordered parameters
    std::vector<Clause> clauses;

    void param(const std::string& key, const std::string& value) { scope.emplace_back(key, value); }
    void add(const std::string& id, const std::string& anchor, Verdict v,
             const std::string& witness = "") {
        clauses.push_back({id, anchor, v, witness});
    }
    void merge(const VerificationReport& other, const std::string& prefix);

    int count(Verdict v) const;
    /// Fail dominates, then Inconclusive, then Pass.
    Verdict overall() const;
};

std::string to_text(const VerificationReport& rep);
/// Canonical machine format: sorted keys, declared clause order.
std::string to_structured(const VerificationReport& rep);

/// 0 all pass, 1 any fail, 2 any inconclusive without a fail.
int report_exit_code(const VerificationReport& rep);

}  // namespace sysmod
