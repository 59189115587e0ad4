#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vsheet {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every acceptance criterion, printing one pass/fail line per criterion
/// to `out`. Returns the individual results. `work_dir` is used for the
/// determinism check's temporary CSV output.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::string& work_dir);

}  // namespace vsheet
