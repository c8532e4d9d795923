#include "oracles.hpp"

#include "cquad/core/json_io.hpp"
#include "cquad/core/linalg.hpp"
#include "cquad/core/mpoly.hpp"
#include "cquad/core/poly1.hpp"
#include "cquad/core/random.hpp"

#include <doctest.h>

using namespace cquad;

namespace {

Rat q(long p, long d = 1) { return Rat(BigInt(p), BigInt(d)); }

Poly1 poly(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly1(v);
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rat::parse("6/8") == q(3, 4));
    CHECK(Rat::parse("-6/8").to_string() == "-3/4");
    CHECK(Rat::parse("4/2").to_string() == "2");
    CHECK(Rat::parse(" 7 ").to_string() == "7");
    CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
    CHECK(pow(q(-2, 3), 3) == q(-8, 27));
    CHECK(q(-5, 2).sign() == -1);
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(q(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
}

TEST_CASE("k-subsets come in lexicographic order") {
    auto s = k_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == Subset{0, 1});
    CHECK(s[1] == Subset{0, 2});
    CHECK(s[2] == Subset{0, 3});
    CHECK(s[3] == Subset{1, 2});
    CHECK(s[5] == Subset{2, 3});
    for (std::size_t n = 0; n <= 7; ++n)
        for (std::size_t k = 0; k <= n + 1; ++k) CHECK(k_subsets(n, k).size() == binomial(n, k));
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
    Rng rng(11);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            RatMatrix m = rng.matrix(n, n, 4);
            if (trial % 5 == 0) m(0, 0) = Rat(0);  // force a pivot search
            if (trial % 7 == 0 && n > 1)
                for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);  // singular
            CHECK(ff_det(m) == oracle::cofactor_det(m));
        }
    RatMatrix rational = RatMatrix::from_rows({{q(1, 2), q(1, 3)}, {q(1, 4), q(1, 5)}});
    CHECK(ff_det(rational) == q(1, 10) - q(1, 12));
}

TEST_CASE("determinant errors") {
    CHECK_THROWS_AS(ff_det(zeros(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(ff_det(RatMatrix(0, 0, Rat(0))), std::invalid_argument);
}

TEST_CASE("adjugate times matrix is det times identity") {
    Rng rng(12);
    for (std::size_t n = 1; n <= 6; ++n) {
        RatMatrix m = rng.matrix(n, n, 5);
        RatMatrix lhs = adjugate(m) * m;
        Rat d = ff_det(m);
        CHECK(lhs == d * identity(n));
    }
}

TEST_CASE("compound matrices are multiplicative (Cauchy-Binet)") {
    Rng rng(13);
    for (std::size_t k = 1; k <= 3; ++k) {
        RatMatrix a = rng.matrix(4, 4, 3), b = rng.matrix(4, 4, 3);
        CHECK(compound_matrix(a * b, k) == compound_matrix(a, k) * compound_matrix(b, k));
    }
    CHECK(compound_matrix(identity(4), 2) == identity(6));
}

TEST_CASE("determinant of a polynomial matrix matches pointwise evaluation") {
    Rng rng(14);
    RatMatrix a = rng.symmetric(4, 5), b = rng.symmetric(4, 5);
    Matrix<Poly1> m(4, 4, Poly1(Rat(0)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = Poly1(std::vector<Rat>{a(i, j), b(i, j)});
    Poly1 d = ff_det(m);
    CHECK(d.degree() <= 4);
    for (long t = -3; t <= 3; ++t) CHECK(d.eval(Rat(t)) == ff_det(a + Rat(t) * b));
}

TEST_CASE("univariate gcd, squarefree part and root counts") {
    Poly1 p = poly({-1, 0, 1});  // t^2 - 1
    Poly1 r = poly({2, 1});      // t + 2
    CHECK(gcd(p * r, p) == p.monic());
    CHECK(gcd(Poly1(std::vector<Rat>{}), Poly1(std::vector<Rat>{})).is_zero());
    CHECK(squarefree_part(p * p) == squarefree_part(p));
    RootCount c = distinct_root_count(p * p * r);
    CHECK(c.degree == 5);
    CHECK(c.distinct == 3);
    RootCount a = distinct_root_count(p), b = distinct_root_count(r);
    CHECK(distinct_root_count(p * r).degree == a.degree + b.degree);
    CHECK_THROWS_AS(distinct_root_count(Poly1(std::vector<Rat>{})), std::invalid_argument);
    CHECK(exact_div(p * r, r) == p);
    CHECK_THROWS(exact_div(p, r));
}

TEST_CASE("univariate helpers") {
    Poly1 p = poly({0, 0, 3, 1});  // 3t^2 + t^3
    CHECK(p.valuation() == 2);
    CHECK(p.shift_down(2) == poly({3, 1}));
    CHECK(p.derivative() == poly({0, 6, 3}));
    auto [quo, rem] = divmod(p, poly({1, 1}));
    CHECK(quo * poly({1, 1}) + rem == p);
    CHECK(rem.degree() < 1);
}

TEST_CASE("multivariate arithmetic") {
    VarSet v({"x", "y", "z"});
    MPoly x = MPoly::variable(v, "x"), y = MPoly::variable(v, "y"), z = MPoly::variable(v, "z");
    MPoly one(v, Rat(1));
    MPoly f = x * x * y + one, g = y * z - x;
    CHECK(exact_div(f * g, g) == f);
    CHECK_THROWS(exact_div(f, g));
    CHECK((x * y * z * z).degree_in(2) == 2);
    CHECK(f.set_zero({true, false, false}) == one);
    CHECK(f.substitute({true, false, false}, {Rat(2), Rat(0), Rat(0)}) == y * Rat(4) + one);
    MPoly h = x * x * y + x * y * y * z;
    CHECK(h.monomial_content({true, true, true}) == Exponents{1, 1, 0});
    CHECK(h.divide_monomial({1, 1, 0}) == x + y * z);
    CHECK_THROWS(h.divide_monomial({0, 0, 1}));
}

TEST_CASE("exact solve reports its status") {
    SolveResult r = solve_exact(identity(3), {Rat(1), Rat(2), Rat(3)});
    CHECK(r.status == SolveStatus::unique);
    CHECK(*r.solution == RatVector{Rat(1), Rat(2), Rat(3)});

    RatMatrix singular = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
    CHECK(solve_exact(singular, {Rat(1), Rat(3)}).status == SolveStatus::inconsistent);
    CHECK(solve_exact(singular, {Rat(1), Rat(2)}).status == SolveStatus::underdetermined);
    CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("nullspace and rank") {
    Rng rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix m = rng.matrix(3, 5, 3);
        RatMatrix ns = nullspace(m);
        CHECK(mat_rank(m) + ns.cols() == 5);
        CHECK((m * ns).is_zero_matrix());
    }
    RatMatrix inv = inverse(RatMatrix::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}}));
    CHECK(inv == RatMatrix::from_rows({{Rat(1), Rat(-1)}, {Rat(-1), Rat(2)}}));
}

TEST_CASE("seeded generator is reproducible") {
    Rng a(99), b(99), c(100);
    RatMatrix ma = a.symmetric(4, 9), mb = b.symmetric(4, 9), mc = c.symmetric(4, 9);
    CHECK(ma == mb);
    CHECK_FALSE(ma == mc);
    CHECK(ma.is_symmetric());
    Rng d(5);
    CHECK(mat_rank(d.full_column_rank(5, 3, 2)) == 3);
    CHECK(ff_det(d.invertible(4, 2)) != Rat(0));
}

TEST_CASE("JSON round trips") {
    Rat r = q(-7, 3);
    CHECK(rat_from_json(to_json(r)) == r);
    CHECK(to_json(Rat(5)).get<std::string>() == "5");
    RatMatrix m = RatMatrix::from_rows({{q(1, 2), Rat(0)}, {Rat(3), q(-1, 5)}});
    CHECK(matrix_from_json(to_json(m)) == m);
    Poly1 p = poly({1, 0, -3});
    CHECK(poly1_from_json(to_json(p)) == p);
    VarSet v({"a", "b"});
    MPoly f = MPoly::variable(v, 0) * MPoly::variable(v, 1) + MPoly(v, q(2, 3));
    CHECK(mpoly_from_json(to_json(f)) == f);
    CHECK_THROWS(matrix_from_json(Json::parse("[[\"1\"],[\"1\",\"2\"]]")));
}

}  // TEST_SUITE
