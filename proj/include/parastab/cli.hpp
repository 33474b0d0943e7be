#pragma once

// Batch front end: one JSON job file in, one JSON report out.
//
// Job file: {"version": "parastab/1", "kind": <kind>, "payload": {...}} with
// kind one of stability, hn, jh, git, mu, fine, interp, logops-demo. Rationals
// are strings ("p/q"), matrices row-major lists of rows, subspaces lists of
// basis rows. Unknown fields are rejected.

#include <cstdint>
#include <optional>
#include <string>

namespace parastab::cli {

inline constexpr const char* kJobVersion = "parastab/1";

enum ExitCode : int { ok = 0, schema_error = 1, budget_exceeded = 2, precondition_violated = 3 };

struct Options {
    std::string kind;
    std::optional<std::uint64_t> budget;  // overrides PARASTAB_BUDGET
    std::optional<std::string> field;     // "q" or "p=<prime>", overrides the payload
    std::optional<std::string> mode;      // exhaustive | burnside | candidates
};

struct JobResult {
    int exit_code = ok;
    std::string report;  // JSON, newline terminated; an error document on failure
};

/// Runs one job given the text of its job file. Never throws.
JobResult run_job(const std::string& job_text, const Options& options);

/// Entry point of the parastab executable.
int main(int argc, char** argv);

}  // namespace parastab::cli
