#include "cquad/core/random.hpp"
#include "cquad/pencils.hpp"
#include "cquad/picard.hpp"

#include <doctest.h>

using namespace cquad;

namespace {

SymmetricForm diag_form(std::initializer_list<long> d) {
    RatVector v;
    for (long x : d) v.emplace_back(x);
    return SymmetricForm(diagonal(v));
}

BinaryForm binary(unsigned degree, std::initializer_list<long> c) {
    BinaryForm f{degree, {}};
    for (long x : c) f.coeffs.emplace_back(x);
    return f;
}

Rat table_value(const std::string& curve, const std::string& divisor) {
    static const char* columns[] = {"H1", "H2", "H3", "E1", "E2", "E3"};
    for (const auto& row : table_x3())
        if (row.name == curve)
            for (std::size_t c = 0; c < 6; ++c)
                if (divisor == columns[c]) return row.values[c];
    throw std::logic_error("no table entry " + curve + "." + divisor);
}

}  // namespace

TEST_SUITE("pencils") {

TEST_CASE("binary roots include the point at infinity") {
    // s t (s - t): roots 0, 1, infinity
    CHECK(count_binary_roots(binary(3, {0, 1, -1, 0})) == RootCount{3, 3});
    // t^2 (s + t): double root at 0 and a root at -1
    CHECK(count_binary_roots(binary(3, {0, 0, 1, 1})) == RootCount{3, 2});
    // s^2: double root at infinity
    CHECK(count_binary_roots(binary(2, {1, 0, 0})) == RootCount{2, 1});
    CHECK_THROWS_AS(count_binary_roots(binary(2, {0, 0, 0})), std::domain_error);
}

TEST_CASE("determinant form of a diagonal pencil") {
    Pencil p(diag_form({1, 1, 1}), diag_form({1, 2, 3}));
    BinaryForm f = pencil_det_form(p);
    CHECK(f.degree == 3);
    // (s + t)(s + 2t)(s + 3t)
    CHECK(f.coeffs == RatVector{Rat(1), Rat(6), Rat(11), Rat(6)});
    CHECK(count_degenerations(p) == RootCount{3, 3});
    Pencil cones(diag_form({1, 0, 0}), diag_form({0, 1, 0}));
    CHECK_THROWS_AS(pencil_det_form(cones), std::domain_error);
}

TEST_CASE("pencils reject bad input") {
    CHECK_THROWS_AS(Pencil(diag_form({1, 1}), diag_form({1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(Pencil(diag_form({1, 2}), diag_form({-2, -4})), std::invalid_argument);
}

TEST_CASE("a general pencil degenerates m+1 times") {
    Rng rng(61);
    for (std::size_t m = 1; m <= 5; ++m) {
        Pencil p = random_generic_pencil(m, rng);
        RootCount c = count_degenerations(p);
        CHECK(c.degree == m + 1);
        CHECK(c.distinct == m + 1);
    }
}

TEST_CASE("tangency counts equal the subspace dimension plus one") {
    Rng rng(62);
    Pencil p = random_generic_pencil(3, rng);
    for (std::size_t k = 1; k <= 4; ++k) {
        RootCount c = count_tangencies(p, rng.full_column_rank(4, k, 3));
        CHECK(c.degree == k);
    }
}

TEST_CASE("rank drops in a pencil") {
    // diag(1, t, t, 1 + t): rank <= 2 only at t = 0 (as a double root)
    Pencil p(diag_form({1, 0, 0, 1}), diag_form({0, 1, 1, 1}));
    RootCount c = count_rank_drops(p, 2);
    CHECK(c.distinct == 1);
    CHECK_THROWS_AS(count_rank_drops(Pencil(diag_form({1, 0, 0}), diag_form({0, 1, 0})), 2), std::domain_error);
}

TEST_CASE("marked tangencies only see Lambda meet the vertex") {
    // vertex spanned by e2, e3 in P^3; Lambda spanned by e0, e2 meets it in the point e2
    RatMatrix sing = zeros(4, 2);
    sing(2, 0) = sing(3, 1) = Rat(1);
    RatMatrix lambda = zeros(4, 2);
    lambda(0, 0) = lambda(2, 1) = Rat(1);
    Pencil marking(diag_form({1, 0}), diag_form({0, 1}));
    CHECK(count_marked_tangencies(marking, sing, lambda).degree == 1);
    RatMatrix away = zeros(4, 1);
    away(0, 0) = Rat(1);
    CHECK(count_marked_tangencies(marking, sing, away) == RootCount{0, 0});
}

TEST_CASE("direct counts reproduce the lattice values") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto counts = direct_table_counts(seed);
        REQUIRE(counts.size() == 13);
        for (const auto& dc : counts) {
            INFO(dc.curve << "." << dc.divisor << " seed " << seed);
            CHECK(dc.generic);
            CHECK(Rat(static_cast<long>(dc.count.degree)) == table_value(dc.curve, dc.divisor));
            CHECK(dc.count.distinct == dc.count.degree);
        }
    }
    for (const auto& dc : dual_pencil_checks(4)) {
        INFO(dc.curve << "." << dc.divisor);
        CHECK(Rat(static_cast<long>(dc.count.degree)) == table_value(dc.curve, dc.divisor));
    }
}

TEST_CASE("singular markings in a pencil on the vertex") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 1; k + 1 <= n; ++k) CHECK(bk_number(n, k, 7 * n + k) == n - k + 1);
    CHECK_THROWS(bk_number(3, 0, 1));
    CHECK_THROWS(bk_number(3, 3, 1));
}

}  // TEST_SUITE
