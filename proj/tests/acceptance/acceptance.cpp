// Runs every acceptance check once and prints one PASS/FAIL line per criterion.
#include "cquad/verify.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    double total = 0;
    for (const auto& r : cquad::run_acceptance(seed)) {
        std::cout << cquad::format_line(r) << "  [" << std::fixed << std::setprecision(2) << r.seconds << " s]"
                  << std::endl;
        total += r.seconds;
        if (!r.passed) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass"))
              << " (seed " << seed << ", " << std::fixed << std::setprecision(2) << total << " s)" << std::endl;
    return failed ? 1 : 0;
}
