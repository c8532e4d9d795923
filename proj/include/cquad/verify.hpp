#pragma once

#include "cquad/core/json_io.hpp"
#include "cquad/picard.hpp"

#include <array>

#include <cstdint>
#include <string>
#include <vector>

namespace cquad {

struct CheckResult {
    int id = 0;
    std::string name;
    std::string certifies;  ///< the mathematical statement the check exercises
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

constexpr int kCheckCount = 11;

/// Reference intersection numbers of the X_3 test curves, in table order.
struct ReferenceRow {
    std::string name;
    std::array<int, 6> values;  ///< H1, H2, H3, E1, E2, E3
};
const std::vector<ReferenceRow>& reference_x3_table();

/// Human-readable differences between computed rows and the reference (empty when equal).
std::vector<std::string> table_mismatches(const std::vector<TableRow>& rows);

/// Runs one acceptance check (1..11). A check fails when its statement fails
/// or when it exceeds its time budget. Check 11 needs the results of 1..10.
CheckResult run_check(int id, std::uint64_t seed, const std::vector<CheckResult>& earlier = {});

/// All checks in order.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

/// One line per check: "PASS   3  direct-counts  <detail>". Timings are left out so the line is reproducible.
std::string format_line(const CheckResult& r);

Json to_json(const CheckResult& r);

} // namespace cquad
