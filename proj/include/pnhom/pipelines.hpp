#pragma once

#include "pnhom/net.hpp"
#include "pnhom/state_space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pnhom {

/// The pipeline family: a chain of n events threaded through n-1 places.
/// Variant P is the full chain, N drops the first event (no producer),
/// Nprime drops the second.
enum class PipelineVariant { P, N, Nprime };

struct PipelineSpec {
    std::size_t n = 2;
    PipelineVariant variant = PipelineVariant::P;
};

const char* to_string(PipelineVariant v);
PipelineVariant pipeline_variant_from_string(const std::string& s);

/// Net with places p1..p(n-1) and events t1..tn, where t1 produces into p1,
/// tk moves a token from p(k-1) to pk, and tn consumes from p(n-1). The
/// initial marking is empty. Throws for n < 2.
ElementaryNet make_pipeline(const PipelineSpec& spec);
ElementaryNet make_pipeline(std::size_t n, PipelineVariant variant = PipelineVariant::P);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // filled on failure, or with a short statistic
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
    std::string to_text() const; // one "PASS/FAIL name" line per check
};

/// Recomputes the pipeline theorems for every n in 2..n_max: homology of the
/// full chain and of both truncated variants, one-sided homology, deadlock
/// and sender sets, the order structure of the truncated chain, and the
/// union/intersection decomposition with its exactness check.
VerificationReport verify_theorems(std::size_t n_max,
                                   std::uint64_t max_states = kDefaultStateCap);

} // namespace pnhom
