#include "tsmlab/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

// Usage: acceptance [--allow-fail ID]... Prints one line per criterion. A
// failing criterion listed with --allow-fail still prints FAIL but does not
// affect the exit status.
int main(int argc, char** argv) {
    std::vector<unsigned> allowed;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--allow-fail" && i + 1 < argc) {
            allowed.push_back(static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10)));
        } else {
            std::cerr << "usage: acceptance [--allow-fail ID]...\n";
            return 2;
        }
    }
    const auto results = tsmlab::run_acceptance();
    int hard_failures = 0;
    for (const auto& r : results) {
        std::cout << tsmlab::format_acceptance_line(r) << std::endl;
        if (!r.passed && std::find(allowed.begin(), allowed.end(), r.id) == allowed.end())
            ++hard_failures;
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    std::cout << passed << "/" << results.size() << " criteria passed";
    if (!allowed.empty())
        std::cout << " (known failures tolerated: " << results.size() - passed - hard_failures << ")";
    std::cout << std::endl;
    return hard_failures == 0 ? 0 : 1;
}
