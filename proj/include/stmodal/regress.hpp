#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace stmodal {

struct CriterionInfo {
    int id = 0;
    std::string name;
    std::string module;
    /// Wall-clock allowance in seconds.
    double budget = 0;
};

const std::vector<CriterionInfo>& criteria();

struct CriterionResult {
    CriterionInfo info;
    std::size_t checks = 0;
    /// First few failure descriptions; `failure_count` has the total.
    std::vector<std::string> failures;
    std::size_t failure_count = 0;
    double seconds = 0;

    [[nodiscard]] bool passed() const { return failure_count == 0; }
};

struct RegressOptions {
    std::uint64_t seed = 0;
    /// Criterion ids, names or modules; empty runs everything.
    std::vector<std::string> only;
    /// Load figure fixtures from files written by `fixtures --out` instead of the built-in catalog.
    std::optional<std::filesystem::path> fixtures_dir;
};

/// Runs the selected criteria in id order. Throws std::invalid_argument for an unknown --only key.
std::vector<CriterionResult> run_regress(const RegressOptions& opts);

/// "PASS criterion=N name=... module=... checks=K" plus indented failure lines. Timing is
/// appended only when requested, keeping default output byte-stable.
std::string format_result(const CriterionResult& r, bool with_time = false);

} // namespace stmodal
