#include <iostream>

#include "vsheet/acceptance.hpp"

int main(int argc, char** argv) {
    const std::string work_dir = argc > 1 ? argv[1] : ".";
    const auto results = vsheet::run_acceptance(std::cout, work_dir);
    int failures = 0;
    for (const auto& r : results)
        if (!r.passed) ++failures;
    std::cout << results.size() - failures << "/" << results.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
