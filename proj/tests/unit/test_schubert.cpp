#include "cquad/schubert.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace cquad;

namespace {

// Standard Young tableaux of a rectangle, by the hook length formula.
BigInt hook_length_count(unsigned rows, unsigned cols) {
    BigInt num = 1, den = 1;
    for (unsigned i = 1; i <= rows * cols; ++i) num *= i;
    for (unsigned r = 0; r < rows; ++r)
        for (unsigned c = 0; c < cols; ++c) den *= (rows - r) + (cols - c) - 1;
    return num / den;
}

}  // namespace

TEST_SUITE("schubert") {

TEST_CASE("classes are validated against the box") {
    CHECK(SchubertClass(1, 3).dimension() == 4);
    CHECK_THROWS_AS(SchubertClass::sigma(1, 3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(SchubertClass::sigma(1, 3, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SchubertClass::sigma(1, 3, {1, 2}), std::invalid_argument);
    CHECK(SchubertClass::sigma(1, 3, {2, 0}) == SchubertClass::sigma(1, 3, {2}));
    CHECK_THROWS_AS(SchubertClass(3, 2), std::invalid_argument);
}

TEST_CASE("Pieri rule for sigma1 on G(1,3)") {
    SchubertClass s1 = SchubertClass::sigma(1, 3, {1});
    SchubertClass sq = pieri1(s1);
    CHECK(sq == SchubertClass::sigma(1, 3, {2}) + SchubertClass::sigma(1, 3, {1, 1}));
    CHECK(pieri1(sq) == SchubertClass::sigma(1, 3, {2, 1}, 2));
    CHECK(pieri1(pieri1(sq)) == SchubertClass::sigma(1, 3, {2, 2}, 2));
    CHECK(pieri1(SchubertClass::sigma(1, 3, {2, 2})).is_zero());
    CHECK(sq.to_string() == "sigma(1,1) + sigma(2)");
}

TEST_CASE("complements and the duality pairing") {
    CHECK(complement(1, 3, {2, 1}) == Partition{1});
    CHECK(complement(1, 3, {}) == Partition{2, 2});
    SchubertClass a = SchubertClass::sigma(1, 3, {2});
    SchubertClass b = SchubertClass::sigma(1, 3, {1, 1});
    CHECK(duality_pair(a, a) == 1);
    CHECK(duality_pair(b, b) == 1);
    CHECK(duality_pair(a, b) == 0);
    CHECK_THROWS_AS(duality_pair(a, SchubertClass::sigma(1, 3, {1})), std::invalid_argument);
}

TEST_CASE("degree of sigma1 power matches hook lengths") {
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 0; k < n; ++k) {
            INFO("G(" << k << "," << n << ")");
            CHECK(sigma1_power_degree(k, n, (k + 1) * (n - k)) == hook_length_count(k + 1, n - k));
        }
    CHECK(sigma1_power_degree(1, 3, 4) == 2);
    CHECK(sigma1_power_degree(1, 4, 6) == 5);
    CHECK_THROWS_AS(sigma1_power_degree(1, 3, 3), std::invalid_argument);
}

TEST_CASE("P against the curve class R2") {
    CHECK(p_dot_r2(false) == 2);
    CHECK(p_dot_r2() == 4);
}

TEST_CASE("expression evaluation") {
    CHECK(evaluate_schubert(1, 3, "sigma1^4") == SchubertClass::sigma(1, 3, {2, 2}, 2));
    CHECK(evaluate_schubert(1, 3, "sigma2*sigma1^2 + sigma11*sigma1^2") == SchubertClass::sigma(1, 3, {2, 2}, 2));
    CHECK(evaluate_schubert(1, 3, "2*sigma(2,1) - sigma_{2,1}") == SchubertClass::sigma(1, 3, {2, 1}));
    CHECK(evaluate_schubert(1, 3, "sigma1*sigma1 - sigma2") == SchubertClass::sigma(1, 3, {1, 1}));
    CHECK(evaluate_schubert(1, 4, "sigma1^6") == SchubertClass::sigma(1, 4, {3, 3}, 5));
    for (const char* bad : {"", "sigma", "sigma2*sigma2", "sigma1^", "sigma(2,", "3 +", "sigma9", "tau1"}) {
        INFO(bad);
        CHECK_THROWS_AS(evaluate_schubert(1, 3, bad), std::invalid_argument);
    }
}

TEST_CASE("JSON carries the terms") {
    Json j = to_json(evaluate_schubert(1, 3, "sigma1^2"));
    CHECK(j.at("grassmannian") == Json::array({1, 3}));
    CHECK(j.at("terms").size() == 2);
}

}  // TEST_SUITE
