// Acceptance suite: one line per criterion, exit code = number of failed
// criteria. Each criterion aggregates the corresponding check group at the
// full desk-scale grid; every comparison is exact rational arithmetic.

#include <chrono>
#include <iostream>

#include "cyclohecke/checks.hpp"

using cyclohecke::CheckResult;

namespace {

int run_criterion(int number, const std::string& title,
                  std::vector<CheckResult> (*group)(bool)) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string crashed;
    try {
        results = group(true);
    } catch (const std::exception& e) {
        crashed = e.what();
    }
    int failed = crashed.empty() ? 0 : 1;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (failed == 0) {
        std::cout << "PASS criterion " << number << " (" << title << ") [" << results.size()
                  << " checks, " << ms << " ms]\n";
    } else {
        std::cout << "FAIL criterion " << number << " (" << title << ")";
        if (!crashed.empty()) std::cout << " crashed: " << crashed;
        std::cout << "\n";
        for (const auto& r : results)
            if (!r.pass) std::cout << "    " << r.name << ": " << r.detail << "\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main() {
    using namespace cyclohecke::checks;
    int failures = 0;
    failures += run_criterion(1, "center dimension and p-basis span", center_checks);
    failures += run_criterion(2, "centralizer Q_d rank and colored cycle basis", centralizer_checks);
    failures += run_criterion(3, "colored cycle product closed forms", colored_cycle_oracle);
    failures += run_criterion(4, "class sum and murphy bases of the graded center", graded_center_bases);
    failures += run_criterion(5, "level-one specialization to the group algebra", murphy_specialization);
    failures += run_criterion(6, "per-block center dimensions", block_dimensions);
    failures += run_criterion(7, "central characters exhausted by residue multisets", block_characters);
    failures += run_criterion(8, "dual Specht module consistency", specht_consistency);
    failures += run_criterion(9, "generation by class sums and power sums", generation);
    failures += run_criterion(10, "structural expansion term checks", structural_identities);
    failures += run_criterion(11, "CLI pinned outputs and round trip", cli_contract);
    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures;
}
