#pragma once

#include "excc/constructible.hpp"
#include "excc/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace excc {

// Result of one CLI invocation: the process exit code and the bytes meant
// for standard output (without a trailing newline).
struct CliResult {
    int exit_code;
    std::string out;
};

// Exit codes: 0 success, 2 malformed input or schema violation, 3 domain
// error (non-integral result, degenerate parameter choice).
CliResult run(const std::vector<std::string>& args);

// Global index data of an integrable connection on a smooth compactifiable
// variety: the rank, the Euler characteristic of the open part, and per
// boundary divisor the irregularity and the Euler characteristic of its
// open stratum.
struct IndexInput {
    Int rank;
    Int chi_u;
    std::vector<std::pair<Int, Int>> boundary;
};

// chi_alg = rank * chi(U) - sum_i irr_i * chi(D_i open part).
Int index_formula(const IndexInput& inp);

struct ResolveOutcome {
    ConstructibleFunction chi;
    LagrangianCycle cycle;
};

// End-to-end resolution workflow from a JSON description: integrate the
// solution Euler characteristics over the fibers of the resolution, push
// them forward to the target strata, and invert through the Euler
// obstruction table to the characteristic cycle.
ResolveOutcome resolve_workflow(const std::string& json_text);

}  // namespace excc
