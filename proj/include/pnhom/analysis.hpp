#pragma once

#include "pnhom/pipelines.hpp"
#include "pnhom/state_space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pnhom {

enum class Analysis {
    homology,
    directed0,
    directed1,
    deadlocks,
    senders,
    validate,
    mv_check,
};

Analysis analysis_from_string(const std::string& name); // throws Error on unknown name
const char* to_string(Analysis a);

/// One driver request: where the net comes from, which state space to use,
/// and which analyses to run, in order.
struct AnalysisRequest {
    std::variant<std::string, PipelineSpec> input; // file path or generated net
    ExploreMode mode = ExploreMode::reachable;
    std::vector<Analysis> analyses;
    std::optional<std::size_t> max_dim; // grade cutoff for reported homology
    bool json = false;
    bool dump = false;
    std::uint64_t max_states = kDefaultStateCap;
};

// Exit codes shared by the driver and the command line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitCapacity = 4;

struct RunResult {
    int exit_code = kExitOk;
    std::string output; // full report, text or a single JSON record
};

/// Runs the requested analyses and renders the report. All error paths are
/// mapped onto exit codes; the output carries the message in that case.
RunResult run_analysis(const AnalysisRequest& request);

/// Runs the theorem checks for n = 2..n_max and renders one line per check.
RunResult run_verify(std::size_t n_max, bool json = false,
                     std::uint64_t max_states = kDefaultStateCap);

} // namespace pnhom
