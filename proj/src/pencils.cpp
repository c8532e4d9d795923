#include "cquad/pencils.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cquad {

namespace {

constexpr int kMaxAttempts = 64;
constexpr long kEntryBound = 5;

bool proportional(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m = zeros(2, a.data().size());
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m(0, i) = a.data()[i];
        m(1, i) = b.data()[i];
    }
    return mat_rank(m) < 2;
}

RatMatrix sym_product(const RatVector& u, const RatVector& v) { return outer(u, v) + outer(v, u); }

RatVector nonzero_vector(Rng& rng, std::size_t n) {
    while (true) {
        RatVector v = rng.vector(n, kEntryBound);
        for (const auto& x : v)
            if (!x.is_zero()) return v;
    }
}

} // namespace

Pencil::Pencil(SymmetricForm q0, SymmetricForm q1) : q0_(std::move(q0)), q1_(std::move(q1)) {
    if (q0_.size() != q1_.size()) throw std::invalid_argument("pencil members have different sizes");
    if (proportional(q0_.matrix(), q1_.matrix())) throw std::invalid_argument("pencil members are proportional");
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

Poly1 BinaryForm::dehomogenize() const { return Poly1(coeffs, "t"); }

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i <= degree; ++i) {
        const Rat& c = coeffs[i];
        if (c.is_zero()) continue;
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        Rat mag = abs(c);
        unsigned ds = degree - i, dt = i;
        bool unit = mag == Rat(1) && (ds + dt) > 0;
        if (!unit) os << mag;
        bool star = !unit;
        if (ds > 0) {
            os << (star ? "*" : "") << "s" << (ds > 1 ? "^" + std::to_string(ds) : "");
            star = true;
        }
        if (dt > 0) os << (star ? "*" : "") << "t" << (dt > 1 ? "^" + std::to_string(dt) : "");
    }
    return first ? "0" : os.str();
}

RootCount count_binary_roots(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("binary form vanishes identically");
    Poly1 p = f.dehomogenize();
    unsigned at_infinity = f.degree - static_cast<unsigned>(p.degree());
    RootCount finite = distinct_root_count(p);
    return {f.degree, finite.distinct + (at_infinity > 0 ? 1u : 0u)};
}

Matrix<Poly1> pencil_matrix(const SymmetricForm& q0, const SymmetricForm& q1) {
    if (q0.size() != q1.size()) throw std::invalid_argument("pencil members have different sizes");
    const Poly1 t = Poly1::x("t");
    Matrix<Poly1> m(q0.size(), q0.size(), Poly1(Rat(0)));
    for (std::size_t i = 0; i < q0.size(); ++i)
        for (std::size_t j = 0; j < q0.size(); ++j) m(i, j) = Poly1(q0(i, j)) + t * Poly1(q1(i, j));
    return m;
}

BinaryForm det_form(const SymmetricForm& q0, const SymmetricForm& q1) {
    Poly1 d = ff_det(pencil_matrix(q0, q1));
    BinaryForm f{static_cast<unsigned>(q0.size()), {}};
    for (unsigned i = 0; i <= f.degree; ++i) f.coeffs.push_back(d.coeff(i));
    return f;
}

BinaryForm pencil_det_form(const Pencil& p) {
    BinaryForm f = det_form(p.q0(), p.q1());
    if (f.is_zero()) throw std::domain_error("pencil lies in the discriminant: determinant vanishes identically");
    return f;
}

RootCount count_degenerations(const Pencil& p) { return count_binary_roots(pencil_det_form(p)); }

RootCount count_tangencies(const Pencil& p, const RatMatrix& basis) {
    BinaryForm f = det_form(restrict(p.q0(), basis), restrict(p.q1(), basis));
    if (f.is_zero()) throw std::domain_error("restricted pencil is identically degenerate");
    return count_binary_roots(f);
}

RootCount count_rank_drops(const Matrix<Poly1>& family, unsigned entry_degree, std::size_t r) {
    if (r + 1 > family.rows()) throw std::domain_error("every member has rank <= r");
    const unsigned minor_degree = entry_degree * static_cast<unsigned>(r + 1);
    Matrix<Poly1> minors = compound_matrix(family, r + 1);
    Poly1 g(std::vector<Rat>{}, "t");
    unsigned at_infinity = minor_degree;
    bool any = false;
    for (const auto& m : minors.data()) {
        if (m.is_zero()) continue;
        any = true;
        g = gcd(g, m);
        at_infinity = std::min(at_infinity, minor_degree - static_cast<unsigned>(m.degree()));
    }
    if (!any) throw std::domain_error("every member has rank <= r");
    unsigned finite = static_cast<unsigned>(g.degree());
    unsigned distinct = g.is_constant() ? 0u : static_cast<unsigned>(squarefree_part(g).degree());
    return {finite + at_infinity, distinct + (at_infinity > 0 ? 1u : 0u)};
}

RootCount count_rank_drops(const Pencil& p, std::size_t r) {
    return count_rank_drops(pencil_matrix(p.q0(), p.q1()), 1, r);
}

RootCount count_marked_tangencies(const Pencil& marking, const RatMatrix& sing_basis, const RatMatrix& lambda) {
    if (sing_basis.rows() != lambda.rows()) throw std::invalid_argument("subspaces live in different spaces");
    if (marking.q0().size() != sing_basis.cols()) throw std::invalid_argument("marking does not match Sing basis");
    const std::size_t a = sing_basis.cols(), b = lambda.cols();
    RatMatrix joint = zeros(sing_basis.rows(), a + b);
    for (std::size_t r = 0; r < sing_basis.rows(); ++r) {
        for (std::size_t c = 0; c < a; ++c) joint(r, c) = sing_basis(r, c);
        for (std::size_t c = 0; c < b; ++c) joint(r, a + c) = -lambda(r, c);
    }
    RatMatrix ns = nullspace(joint);
    if (ns.cols() == 0) return {0, 0};
    Subset top(a), cols(ns.cols());
    for (std::size_t i = 0; i < a; ++i) top[i] = i;
    for (std::size_t i = 0; i < ns.cols(); ++i) cols[i] = i;
    return count_tangencies(marking, ns.submatrix(top, cols));
}

Pencil random_generic_pencil(std::size_t m, Rng& rng) {
    std::optional<Pencil> last;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RatMatrix a = rng.symmetric(m + 1, kEntryBound), b = rng.symmetric(m + 1, kEntryBound);
        if (proportional(a, b)) continue;
        Pencil p{SymmetricForm(a), SymmetricForm(b)};
        BinaryForm f = det_form(p.q0(), p.q1());
        if (f.is_zero()) continue;
        last = p;
        RootCount c = count_binary_roots(f);
        if (c.distinct == c.degree) return p;
    }
    if (!last) throw std::runtime_error("could not draw a non-degenerate pencil");
    return *last;
}

namespace {

// Repeats a random draw until it yields a reduced (squarefree) count, then
// reports it; falls back to the last count with multiplicities.
DirectCount sample(std::string curve, std::string divisor, const std::function<RootCount()>& draw) {
    std::optional<RootCount> last;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RootCount c;
        try {
            c = draw();
        } catch (const std::invalid_argument&) {
            continue;
        } catch (const std::domain_error&) {
            continue;
        }
        last = c;
        if (c.distinct == c.degree) return {std::move(curve), std::move(divisor), c, true};
    }
    if (!last) throw std::runtime_error("no valid draw for " + curve + "." + divisor);
    return {std::move(curve), std::move(divisor), *last, false};
}

// General pencil of quadrics in P^3.
void counts_G(Rng& rng, std::vector<DirectCount>& out) {
    for (std::size_t k = 1; k <= 3; ++k) {
        out.push_back(sample("G", "H" + std::to_string(k), [&rng, k] {
            Pencil p = random_generic_pencil(3, rng);
            return count_tangencies(p, rng.full_column_rank(4, k, kEntryBound));
        }));
    }
    out.push_back(sample("G", "E3", [&rng] { return count_degenerations(random_generic_pencil(3, rng)); }));
}

// Pencil of conics on a fixed double plane.
void counts_C1(Rng& rng, std::vector<DirectCount>& out) {
    auto draw_setup = [&rng] {
        RatVector l = nonzero_vector(rng, 4);
        RatMatrix sing = kernel_basis(SymmetricForm(outer(l, l)));
        return std::make_pair(sing, random_generic_pencil(2, rng));
    };
    out.push_back(sample("C1", "H2", [&] {
        auto [sing, marking] = draw_setup();
        return count_marked_tangencies(marking, sing, rng.full_column_rank(4, 2, kEntryBound));
    }));
    out.push_back(sample("C1", "H3", [&] {
        auto [sing, marking] = draw_setup();
        return count_marked_tangencies(marking, sing, rng.full_column_rank(4, 3, kEntryBound));
    }));
    out.push_back(sample("C1", "E3", [&] { return count_degenerations(draw_setup().second); }));
}

// Pencil of dual conics on a fixed double plane.
void counts_C1_star(Rng& rng, std::vector<DirectCount>& out) {
    out.push_back(sample("C1*", "E2", [&rng] { return count_degenerations(random_generic_pencil(2, rng)); }));
    out.push_back(sample("C1*", "H3", [&rng] {
        RatVector l = nonzero_vector(rng, 4);
        RatMatrix sing = kernel_basis(SymmetricForm(outer(l, l)));
        Pencil dual = random_generic_pencil(2, rng);
        // a fixed plane {mu . x = 0} cuts the double plane in a line, i.e. a point of the dual plane
        RatVector mu = nonzero_vector(rng, 4);
        RatVector line_as_dual_point = mat_vec(sing.transpose(), mu);
        return count_tangencies(dual, column(line_as_dual_point));
    }));
}

// Cone over a pencil of conics in a fixed plane.
void counts_C3(Rng& rng, std::vector<DirectCount>& out) {
    out.push_back(sample("C3", "E2", [&rng] {
        Pencil conics = random_generic_pencil(2, rng);
        RatMatrix m = rng.invertible(4, kEntryBound);
        auto cone = [&m](const SymmetricForm& c) {
            RatMatrix padded = zeros(4, 4);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) padded(i, j) = c(i, j);
            return SymmetricForm(m.transpose() * padded * m);
        };
        return count_rank_drops(Pencil(cone(conics.q0()), cone(conics.q1())), 2);
    }));
}

// Two fixed planes; one of the two marked points on their common line moves.
void counts_L2(Rng& rng, std::vector<DirectCount>& out) {
    out.push_back(sample("L2", "H3", [&rng] {
        RatVector l1 = nonzero_vector(rng, 4), l2 = nonzero_vector(rng, 4);
        RatMatrix sing = kernel_basis(SymmetricForm(sym_product(l1, l2)));
        if (sing.cols() != 2) throw std::invalid_argument("planes coincide");
        RatVector m0 = nonzero_vector(rng, 2), m1 = nonzero_vector(rng, 2), m2 = nonzero_vector(rng, 2);
        Pencil marking(SymmetricForm(sym_product(m0, m1)), SymmetricForm(sym_product(m0, m2)));
        return count_marked_tangencies(marking, sing, rng.full_column_rank(4, 3, kEntryBound));
    }));
}

// A fixed plane times a pencil of planes.
void counts_C2(Rng& rng, std::vector<DirectCount>& out) {
    out.push_back(sample("C2", "H1", [&rng] {
        RatVector l0 = nonzero_vector(rng, 4), l1 = nonzero_vector(rng, 4), l2 = nonzero_vector(rng, 4);
        Pencil p(SymmetricForm(sym_product(l0, l1)), SymmetricForm(sym_product(l0, l2)));
        return count_tangencies(p, rng.full_column_rank(4, 1, kEntryBound));
    }));
}

// General pencil of dual quadrics; E1 is where the primal quadric adj(D) drops to rank 1.
void counts_G_star(Rng& rng, std::vector<DirectCount>& out) {
    out.push_back(sample("G*", "E1", [&rng] {
        Pencil dual = random_generic_pencil(3, rng);
        Matrix<Poly1> primal = adjugate(pencil_matrix(dual.q0(), dual.q1()));
        return count_rank_drops(primal, 3, 1);
    }));
}

} // namespace

unsigned bk_number(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("bk_number: need 1 <= k <= n-1");
    Rng rng(seed);
    SymmetricForm fixed = random_form(n, k, rng.next());
    RatMatrix sing = kernel_basis(fixed);
    DirectCount c = sample("B" + std::to_string(k), "E" + std::to_string(k + 1), [&] {
        Pencil ambient = random_generic_pencil(n, rng);
        Pencil marking(restrict(ambient.q0(), sing), restrict(ambient.q1(), sing));
        return count_degenerations(marking);
    });
    return c.count.degree;
}

std::vector<DirectCount> direct_table_counts(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<DirectCount> out;
    counts_G(rng, out);
    counts_C1(rng, out);
    counts_C1_star(rng, out);
    counts_C3(rng, out);
    counts_L2(rng, out);
    counts_C2(rng, out);
    counts_G_star(rng, out);
    return out;
}

std::vector<DirectCount> dual_pencil_checks(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<DirectCount> out;
    counts_G_star(rng, out);
    counts_C1_star(rng, out);
    return out;
}

} // namespace cquad
