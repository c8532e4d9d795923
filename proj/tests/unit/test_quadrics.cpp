#include "cquad/core/random.hpp"
#include "cquad/quadrics.hpp"

#include <doctest.h>

using namespace cquad;

namespace {

// Codimension of {rank <= i} computed as the rank of the differential of
// L -> L D L^t at a random point, D a fixed nonsingular i x i diagonal.
std::uint64_t jacobian_codim(std::size_t n, std::size_t i, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t m = n + 1;
    RatMatrix l = rng.matrix(m, i, 4);
    RatVector dvals;
    for (std::size_t r = 0; r < i; ++r) dvals.emplace_back(rng.nonzero_int(3));
    RatMatrix d = diagonal(dvals);
    std::vector<RatVector> images;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < i; ++b) {
            RatMatrix dl = zeros(m, i);
            dl(a, b) = Rat(1);
            RatMatrix img = dl * d * l.transpose() + l * d * dl.transpose();
            RatVector v;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = r; c < m; ++c) v.push_back(img(r, c));
            images.push_back(v);
        }
    RatMatrix jac = RatMatrix::from_rows(images);
    std::uint64_t ambient = m * (m + 1) / 2;  // affine dimension of Sym^2
    return ambient - mat_rank(jac);
}

SymmetricForm diag_form(std::initializer_list<long> d) {
    RatVector v;
    for (long x : d) v.emplace_back(x);
    return SymmetricForm(diagonal(v));
}

}  // namespace

TEST_SUITE("quadrics") {

TEST_CASE("forms must be square, symmetric and nonempty") {
    CHECK_THROWS_AS(SymmetricForm(zeros(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricForm(RatMatrix(0, 0, Rat(0))), std::invalid_argument);
    RatMatrix asym = zeros(2, 2);
    asym(0, 1) = Rat(1);
    CHECK_THROWS_AS(SymmetricForm{asym}, std::invalid_argument);
    CHECK(SymmetricForm(identity(1)).ambient() == 0);
}

TEST_CASE("restriction is B^t Q B") {
    Rng rng(21);
    SymmetricForm q(rng.symmetric(4, 5));
    RatMatrix b = rng.full_column_rank(4, 2, 3);
    CHECK(restrict(q, b).matrix() == b.transpose() * q.matrix() * b);
    CHECK(restrict(q, b).ambient() == 1);
    RatMatrix deficient = zeros(4, 2);
    deficient(0, 0) = deficient(0, 1) = Rat(1);
    CHECK_THROWS_AS(restrict(q, deficient), std::invalid_argument);
    CHECK_THROWS_AS(restrict(q, zeros(3, 1)), std::invalid_argument);
}

TEST_CASE("compound form is the matrix of k-minors") {
    Rng rng(22);
    SymmetricForm q(rng.symmetric(4, 5));
    for (std::size_t k = 1; k <= 4; ++k) CHECK(compound(q, k).matrix() == compound_matrix(q.matrix(), k));
    CHECK(compound(q, 2).size() == 6);
    CHECK(compound(q, 4).matrix()(0, 0) == ff_det(q.matrix()));
}

TEST_CASE("rank, smoothness and kernel") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t r = 1; r <= n + 1; ++r) {
            SymmetricForm q = random_form(n, r, 100 * n + r);
            CHECK(form_rank(q) == r);
            CHECK(is_smooth(q) == (r == n + 1));
            RatMatrix k = kernel_basis(q);
            CHECK(k.cols() == n + 1 - r);
            if (k.cols() > 0) CHECK((q.matrix() * k).is_zero_matrix());
        }
    CHECK(random_form(3, 2, 7) == random_form(3, 2, 7));
    CHECK_THROWS(random_form(3, 0, 1));
    CHECK_THROWS(random_form(3, 5, 1));
}

TEST_CASE("rank stratum codimension matches the Jacobian rank") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t i = 1; i <= n + 1; ++i) CHECK(stratum_codim(n, i) == jacobian_codim(n, i, 31 + n * 7 + i));
    CHECK(stratum_codim(3, 1) == 6);  // double planes: P^3 inside P^9
    CHECK(stratum_codim(3, 3) == 1);  // cones: the discriminant hypersurface
    CHECK(stratum_codim(3, 4) == 0);
    CHECK(stratum(3, 2).codim == 3);
    CHECK_THROWS_AS(stratum_codim(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(stratum_codim(3, 5), std::invalid_argument);
}

TEST_CASE("complete quadric flags are validated") {
    // a pair of planes on P^3 marked by a smooth conic pair of points on the line
    SymmetricForm pair = diag_form({1, -1, 0, 0});
    SymmetricForm points = diag_form({1, 1});
    CompleteQuadric cq({pair, points});
    CHECK(cq.leading_rank() == 2);
    CHECK(cq.is_complete());

    CHECK(CompleteQuadric({diag_form({1, 1, 1, 1})}).is_complete());
    CHECK_THROWS_AS(CompleteQuadric({diag_form({1, 1, 1, 1}), points}), std::invalid_argument);
    CHECK_THROWS_AS(CompleteQuadric({pair, diag_form({1, 1, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(CompleteQuadric({diag_form({0, 0, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(CompleteQuadric(std::vector<SymmetricForm>{}), std::invalid_argument);

    // a double plane marked by a cone, itself marked by a point
    CompleteQuadric deep({diag_form({1, 0, 0, 0}), diag_form({1, 1, 0}), diag_form({1})});
    CHECK(deep.leading_rank() == 1);
    CHECK(deep.is_complete());
    CHECK_FALSE(CompleteQuadric({diag_form({1, 0, 0, 0}), diag_form({1, 1, 0})}).is_complete());
}

TEST_CASE("marking from a direction lives on the vertex") {
    SymmetricForm q0 = diag_form({1, 1, 0, 0});
    Rng rng(23);
    SymmetricForm q1(rng.symmetric(4, 4));
    SymmetricForm m = marking_from_direction(q0, q1);
    CHECK(m.size() == 2);
    CHECK(m.matrix() == restrict(q1, kernel_basis(q0)).matrix());
}

TEST_CASE("form JSON round trip") {
    Rng rng(24);
    SymmetricForm q(rng.symmetric(3, 7));
    CHECK(form_from_json(to_json(q)) == q);
    CHECK(to_json(q).at("n") == 2);
    CompleteQuadric cq({diag_form({1, -1, 0, 0}), diag_form({2, 3})});
    CHECK(complete_quadric_from_json(to_json(cq)).flag() == cq.flag());
    Json bad = to_json(q);
    bad["n"] = 5;
    CHECK_THROWS_AS(form_from_json(bad), std::invalid_argument);
}

}  // TEST_SUITE
