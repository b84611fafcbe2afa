// Runs the fixed check suite and prints one line per check.
// Exit status is nonzero when any check fails.

#include <iostream>

#include "geom/suite.hpp"

int main() {
    const geom::SuiteResult r = geom::run_suite("paper");
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        std::cout << geom::format_line(c) << "\n";
        failed += c.status == geom::CheckStatus::fail;
    }
    std::cout << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
    return failed ? 1 : 0;
}
