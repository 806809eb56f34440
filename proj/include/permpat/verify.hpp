#pragma once

#include <string>
#include <vector>

namespace permpat {

struct CriterionResult {
    std::string id;       // c1..c12
    std::string name;
    bool pass = false;
    std::string detail;   // first failure, or a short summary
    double seconds = 0;
};

// Run one acceptance criterion (1..12).
CriterionResult run_criterion(int index, int workers = 1);

// Run a set of criteria; empty selection means all. Names accepted: "c3",
// "3", or the aliases "all" and "paper-tables".
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& selection,
                                            int workers = 1);

} // namespace permpat
