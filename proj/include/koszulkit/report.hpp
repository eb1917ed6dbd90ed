#pragma once

// Batch jobs: load inputs, run the requested checks in dependency order and
// assemble a deterministic JSON report.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszulkit {

inline constexpr const char* kSchema = "koszulkit/1";
inline constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    std::string input;   // presentation file
    std::string action;  // optional action file
    // In-memory inputs take precedence over the paths.
    std::optional<nlohmann::json> presentation_json, action_json;
    int max_degree = 4;
    std::vector<std::string> checks;
    std::uint64_t seed = 20240611;
    unsigned jobs = 1;
};

/// Known names in dependency order; "all" expands to every one.
const std::vector<std::string>& check_names();
/// Validates and orders a requested list. Throws UsageError.
std::vector<std::string> expand_checks(const std::vector<std::string>& requested);

struct JobResult {
    nlohmann::json report;
    int exit_code = 0;  // 0 pass, 1 check failed, 2 parse/usage error, 3 internal invariant violation
};

JobResult run_job(const JobSpec& job);

/// Equality ignoring the top-level "timing" key. Differences are reported
/// as JSON pointers.
bool reports_equal(const nlohmann::json& a, const nlohmann::json& b, std::vector<std::string>* diffs = nullptr);

} // namespace koszulkit
