// Runs the acceptance suite and prints one PASS/FAIL line per criterion.
// Pass --quick to cap dimensions at 8.

#include "skewlie/acceptance.hpp"

#include <algorithm>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    skewlie::AcceptanceOptions options;
    options.quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const auto results = skewlie::run_acceptance(options, std::cout);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
