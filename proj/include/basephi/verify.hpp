#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace basephi {

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    std::int64_t bound = 0;
    std::int64_t checks = 0;
    std::vector<SuiteFailure> failures;
    /// Informational lines that are reported but not asserted.
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    bool passed() const noexcept { return failures.empty(); }
};

struct SuiteInfo {
    std::string name;
    std::string description;
    std::int64_t default_bound;
};

/// Every suite in run order.
const std::vector<SuiteInfo>& suite_catalog();

/// Runs one suite over its range with upper end `bound`.
/// UsageError for an unknown name or bound < 1.
SuiteReport run_suite(const std::string& name, std::int64_t bound);

/// Runs several suites concurrently; reports come back in the order of `names`.
/// bound <= 0 selects each suite's default.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, std::int64_t bound);

nlohmann::ordered_json report_to_json(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

}  // namespace basephi
