#pragma once

#include "uvtsw/rmatrix.hpp"

#include <string>
#include <vector>

// Named verification suites with timed pass/fail/finding entries, plus the
// text and JSON report serialization shared by the CLI and the bindings.
// "finding" marks a measured deviation from a stated closed form; findings
// are always listed but never fail a run.

namespace uvtsw {

enum class CheckStatus { pass, fail, finding };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
    double elapsed_ms = 0.0;
};

struct RunConfig {
    std::string command;
    int n = 3;
    int k = 3;
    std::string mode = "compare";  // idempotents: inductive | fusion | compare
    int height = 2;                // pairing truncation
    long cap = 256;                // tensor dimension guard
    std::string format = "text";   // text | json
    std::string out;               // empty = stdout
    long seed = 0;                 // negative-control entry selection
    void validate() const;         // throws std::invalid_argument
};

struct Report {
    std::string command;
    RunConfig config;
    std::vector<CheckEntry> checks;

    bool overall_pass() const;
    std::string to_text() const;
    std::string to_json() const;
    static Report from_json(const std::string& text);
};

Report run_relations(const RunConfig& cfg);
Report run_braid(const RunConfig& cfg);
Report run_hecke_action(const RunConfig& cfg);
Report run_commutant(const RunConfig& cfg);
Report run_idempotents(const RunConfig& cfg);
Report run_decompose(const RunConfig& cfg);
Report run_pairing(const RunConfig& cfg);
Report run_jm(const RunConfig& cfg);
Report run_all(const RunConfig& cfg);

// Dispatch on cfg.command; throws std::invalid_argument for unknown commands.
Report run_command(const RunConfig& cfg);

}  // namespace uvtsw
