#pragma once

#include <string>
#include <vector>

namespace cyclohecke {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // filled in on failure
};

/// Verification checks, grouped by the statement they exercise. `full`
/// runs the complete desk-scale grid; otherwise a faster subset.
namespace checks {

std::vector<CheckResult> center_checks(bool full);           // dim Z and the p-basis span
std::vector<CheckResult> centralizer_checks(bool full);      // rank of Q_d, colored cycle basis
std::vector<CheckResult> colored_cycle_oracle(bool full);    // closed forms vs generic products
std::vector<CheckResult> graded_center_bases(bool full);     // class-sum and murphy bases
std::vector<CheckResult> murphy_specialization(bool full);   // l = 1 group algebra
std::vector<CheckResult> block_dimensions(bool full);        // per-block center dimensions
std::vector<CheckResult> block_characters(bool full);        // characters all come from residues
std::vector<CheckResult> specht_consistency(bool full);      // dual Specht modules
std::vector<CheckResult> generation(bool full);              // class sums and power sums generate
std::vector<CheckResult> structural_identities(bool full);   // term-level expansion shapes
std::vector<CheckResult> cli_contract(bool full);            // pinned outputs + round trip

/// Everything above, in order.
std::vector<CheckResult> run_suite(bool full);

}  // namespace checks

}  // namespace cyclohecke
