#ifndef MULTIKIT_CONFORMANCE_HPP
#define MULTIKIT_CONFORMANCE_HPP

#include <string>
#include <vector>

namespace multikit {

/// One re-derived claim from the toolkit's reference corpus of worked
/// examples. `verdict` is recomputed on every run; `expected` pins the
/// known outcome so regressions surface (several documented claims are
/// genuinely contradicted by computation, and stay that way).
struct ConformanceClaim {
    std::string id;
    std::string source;   // which worked example or statement the claim restates
    std::string statement;
    std::string verdict;  // confirmed | contradicted | mode-dependent
    std::string expected;
    std::string details;  // computed values, per mode where applicable
    bool matches_expected() const { return verdict == expected; }
};

struct ConformanceReport {
    std::vector<ConformanceClaim> claims;
    bool all_match_expected() const {
        for (const auto& c : claims)
            if (!c.matches_expected()) return false;
        return true;
    }
};

/// Recompute every registered claim. Pure; equal runs produce equal
/// reports.
ConformanceReport run_conformance();

std::string conformance_json(const ConformanceReport& r);
std::string conformance_text(const ConformanceReport& r);

} // namespace multikit

#endif
