#include "cquad/chowform.hpp"
#include "cquad/core/random.hpp"

#include <doctest.h>

using namespace cquad;

namespace {

RatMatrix cols(std::initializer_list<std::initializer_list<long>> columns) {
    std::vector<std::vector<long>> c;
    for (auto col : columns) c.emplace_back(col);
    RatMatrix m = zeros(c.front().size(), c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c[j].size(); ++i) m(i, j) = Rat(c[j][i]);
    return m;
}

SymmetricForm diag_form(std::initializer_list<long> d) {
    RatVector v;
    for (long x : d) v.emplace_back(x);
    return SymmetricForm(diagonal(v));
}

Rat half() { return Rat(BigInt(1), BigInt(2)); }

}  // namespace

TEST_SUITE("chowform") {

TEST_CASE("plucker coordinates of coordinate planes") {
    PluckerVector p = plucker(cols({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(p.n == 3);
    CHECK(p.k == 2);
    CHECK(p.coords == RatVector{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    // swapping the basis vectors flips the sign
    PluckerVector s = plucker(cols({{0, 1, 0, 0}, {1, 0, 0, 0}}));
    CHECK(s.coords[0] == Rat(-1));
    CHECK_THROWS_AS(plucker(cols({{1, 0, 0}, {2, 0, 0}})), std::invalid_argument);
}

TEST_CASE("Plucker quadric of the compound equals the restricted determinant") {
    Rng rng(41);
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t k = 1; k <= n + 1; ++k)
            for (int trial = 0; trial < 4; ++trial) {
                SymmetricForm q(rng.symmetric(n + 1, 5));
                RatMatrix b = rng.full_column_rank(n + 1, k, 4);
                CHECK(chow_eval(q, k, b) == ff_det(restrict(q, b).matrix()));
            }
    CHECK_THROWS_AS(chow_eval(diag_form({1, 1, 1}), 2, cols({{1, 0, 0}})), std::invalid_argument);
}

TEST_CASE("tangent lines to a smooth quadric surface") {
    SymmetricForm sphere = diag_form({1, 1, 1, -1});
    CHECK(is_tangent(sphere, cols({{1, 0, 0, 1}, {0, 1, 0, 0}})));
    CHECK_FALSE(is_tangent(sphere, cols({{1, 0, 0, 0}, {0, 1, 0, 0}})));
    // planes: tangent plane at (1,0,0,1) is x = w
    CHECK(is_tangent(sphere, cols({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}})));
}

TEST_CASE("proportional compounds") {
    Rng rng(42);
    RatMatrix g = rng.invertible(4, 3);
    SymmetricForm b_sym(g.transpose() * diagonal({Rat(1), Rat(2), Rat(-1), Rat(3)}) * g);
    SymmetricForm a(Rat(3) * b_sym.matrix());
    auto w = minors_proportional(a, b_sym, 2);
    REQUIRE(w);
    CHECK(w->mu == Rat(9));
    REQUIRE(w->lambda);
    CHECK(*w->lambda == Rat(3));
    CHECK(minors_proportional(b_sym, b_sym, 3)->mu == Rat(1));  // reflexive

    // rank-1 forms have vanishing 2-minors: proportional with mu = 1, no lambda
    auto deg = minors_proportional(diag_form({1, 0, 0}), diag_form({0, 5, 0}), 2);
    REQUIRE(deg);
    CHECK(deg->mu == Rat(1));
    CHECK_FALSE(deg->lambda);

    CHECK_FALSE(minors_proportional(diag_form({1, 2, 3}), diag_form({1, 1, 1}), 1));
    CHECK_THROWS_AS(minors_proportional(diag_form({1, 1}), diag_form({1, 1, 1}), 1), std::invalid_argument);
}

TEST_CASE("projective normalization") {
    RatMatrix m = zeros(1, 2);
    m(0, 0) = Rat(BigInt(2), BigInt(3));
    m(0, 1) = Rat(BigInt(-4), BigInt(3));
    CHECK(normalize_projective(m) == RatMatrix::from_rows({{Rat(1), Rat(-2)}}));
    RatMatrix n = RatMatrix::from_rows({{Rat(0), Rat(-2)}, {Rat(4), Rat(0)}});
    CHECK(normalize_projective(n) == RatMatrix::from_rows({{Rat(0), Rat(1)}, {Rat(-2), Rat(0)}}));
    CHECK_THROWS_AS(normalize_projective(zeros(2, 2)), std::invalid_argument);
    CHECK(ProjectivePoint({Rat(-3), Rat(6)}) == ProjectivePoint({Rat(1), Rat(-2)}));
}

TEST_CASE("limit of a double plane opening up (rank-1 family)") {
    // x^2 + t(a y^2 + b yz + c yw + d z^2 + e zw + f w^2)
    const long a = 2, b = -3, c = 5, d = 7, e = 1, f = -4;
    RatMatrix q1 = zeros(4, 4);
    q1(1, 1) = Rat(a);
    q1(2, 2) = Rat(d);
    q1(3, 3) = Rat(f);
    q1(1, 2) = q1(2, 1) = half() * Rat(b);
    q1(1, 3) = q1(3, 1) = half() * Rat(c);
    q1(2, 3) = q1(3, 2) = half() * Rat(e);
    ChowLimit lim = chow_limit(diag_form({1, 0, 0, 0}), SymmetricForm(q1), 2);
    CHECK(lim.t_order == 1);
    auto coeffs = quadric_coefficients(lim.form);
    REQUIRE(coeffs.size() == 6);
    // p0 = p01, p1 = p02, p2 = p03: subsets 0, 1, 2 in lex order
    std::vector<std::pair<std::size_t, std::size_t>> where = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    std::vector<long> want = {a, b, c, d, e, f};
    Rat scale = coeffs[0].second / Rat(a);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(coeffs[i].first == where[i]);
        CHECK(coeffs[i].second == scale * Rat(want[i]));
    }
    // rescaling the direction does not move the projective limit
    CHECK(chow_limit(diag_form({1, 0, 0, 0}), SymmetricForm(Rat(-7) * q1), 2).form == lim.form);
}

TEST_CASE("limit of a plane pair (rank-2 family) is supported on p0^2") {
    RatMatrix xy = zeros(4, 4);
    xy(0, 1) = xy(1, 0) = half();
    Rng rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        ChowLimit lim = chow_limit(SymmetricForm(xy), SymmetricForm(rng.symmetric(4, 6)), 2);
        CHECK(lim.t_order == 0);
        auto coeffs = quadric_coefficients(lim.form);
        REQUIRE(coeffs.size() == 1);
        CHECK(coeffs[0].first == std::pair<std::size_t, std::size_t>{0, 0});
        CHECK(coeffs[0].second == Rat(1));
    }
}

TEST_CASE("limit along a constant direction is the compound itself") {
    SymmetricForm q = diag_form({1, 2, -1, 3});
    CHECK(chow_limit(q, q, 2).form == normalize_projective(compound(q, 2).matrix()));
    CHECK_THROWS_AS(chow_limit(diag_form({0, 0, 0}), diag_form({0, 0, 0}), 1), std::domain_error);
}

TEST_CASE("flag family: compound constant along Fl_j exactly when j != k") {
    CHECK(flag_wedge(3, 2, 1).constant);
    CHECK(flag_wedge(3, 2, 3).constant);
    CHECK_FALSE(flag_wedge(3, 2, 2).constant);
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            for (std::size_t j = 1; j <= n; ++j) CHECK(flag_wedge(n, k, j).constant == (j != k));
    CHECK_THROWS_AS(flag_wedge(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(flag_wedge(3, 2, 4), std::invalid_argument);
}

TEST_CASE("second compound of the n=3 flag family is a rank-one outer product") {
    Matrix<MPoly> m = wedge2_example_matrix();
    VarSet vars = flag_varset(3);
    MPoly one(vars, Rat(1)), zero(vars), t1 = MPoly::variable(vars, "t1"), t2 = MPoly::variable(vars, "t2");
    std::vector<MPoly> v = {one, t2, zero, t1 * t2, zero, zero};
    REQUIRE(m.rows() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(m(i, j) == v[i] * v[j]);
    CHECK(m(0, 1) == t2);
    CHECK(m(0, 3) == t1 * t2);
    CHECK(m(1, 3) == t1 * t2 * t2);
    CHECK(m(1, 1) == t2 * t2);  // the outer product forces t2^2, not 1
    CHECK(m(3, 3) == t1 * t1 * t2 * t2);
}

TEST_CASE("flag parametrization is M^t q M") {
    Matrix<MPoly> q = flag_parametrization(2, {true, true});
    VarSet vars = flag_varset(2);
    MPoly t1 = MPoly::variable(vars, "t1"), q1 = MPoly::variable(vars, "q1");
    CHECK(q(0, 0) == MPoly(vars, Rat(1)));
    CHECK(q(0, 1) == t1);
    CHECK(q(1, 1) == t1 * t1 + q1);
}

}  // TEST_SUITE
