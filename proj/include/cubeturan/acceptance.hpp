#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubeturan {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);

struct CriterionResult {
    int id = 0;
    std::string name;
    Verdict verdict = Verdict::fail;
    /// Deterministic summary; never contains timings.
    std::string detail;
    double seconds = 0.0;
    /// Wall-clock ceiling for the criterion, 0 when none applies.
    double time_limit = 0.0;
};

struct AcceptanceConfig {
    std::string fixtures_dir = "fixtures";
    /// Replaces every search budget's node limit when set.
    std::optional<std::uint64_t> budget_nodes;
    int threads = 1;
    std::uint64_t seed = 20240601;
    /// Criterion 11 reruns 1..10 twice more; disable to run the cheap part only.
    bool include_determinism = true;
};

/// Runs criteria 1..11. Throws std::runtime_error when a fixture is missing or malformed.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

/// One line per criterion, "PASS  3  representation fixtures: ...". Timings are not included.
std::string render_results(const std::vector<CriterionResult>& results);

/// 0 when everything passes, 1 on any failure, otherwise 2.
int acceptance_exit_code(const std::vector<CriterionResult>& results);

}  // namespace cubeturan
