#include "cquad/chowform.hpp"

#include "cquad/core/poly1.hpp"

#include <set>
#include <stdexcept>

namespace cquad {

PluckerVector plucker(const RatMatrix& basis) {
    const std::size_t k = basis.cols();
    if (k == 0 || k > basis.rows()) throw std::invalid_argument("plucker: bad basis shape");
    if (mat_rank(basis) != k) throw std::invalid_argument("plucker: basis matrix is rank deficient");
    Subset all_cols(k);
    for (std::size_t i = 0; i < k; ++i) all_cols[i] = i;
    PluckerVector p{basis.rows() - 1, k, {}};
    for (const auto& rows : k_subsets(basis.rows(), k)) p.coords.push_back(ff_det(basis.submatrix(rows, all_cols)));
    return p;
}

Rat chow_eval(const SymmetricForm& q, std::size_t k, const RatMatrix& basis) {
    if (basis.cols() != k) throw std::invalid_argument("chow_eval: basis must have k columns");
    if (basis.rows() != q.size()) throw std::invalid_argument("chow_eval: basis has wrong number of rows");
    PluckerVector p = plucker(basis);
    return dot(p.coords, mat_vec(compound(q, k).matrix(), p.coords));
}

bool is_tangent(const SymmetricForm& q, const RatMatrix& basis) {
    return chow_eval(q, basis.cols(), basis).is_zero();
}

namespace {

// Ratio x = a / b if a = x b entrywise, with b's first nonzero entry fixing x.
std::optional<Rat> proportionality(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::optional<Rat> ratio;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!b[i].is_zero()) {
            ratio = a[i] / b[i];
            break;
        }
    }
    if (!ratio) {
        // b is zero: a must be zero too, and every scale works.
        for (const auto& x : a)
            if (!x.is_zero()) return std::nullopt;
        return Rat(1);
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!(a[i] == *ratio * b[i])) return std::nullopt;
    return ratio;
}

} // namespace

std::optional<ProportionalityWitness> minors_proportional(const SymmetricForm& a, const SymmetricForm& b,
                                                          std::size_t k) {
    if (a.size() != b.size()) throw std::invalid_argument("minors_proportional: ambient dimensions differ");
    auto mu = proportionality(compound(a, k).matrix().data(), compound(b, k).matrix().data());
    if (!mu) return std::nullopt;
    ProportionalityWitness w{*mu, std::nullopt};
    if (is_smooth(a) && is_smooth(b)) w.lambda = proportionality(a.matrix().data(), b.matrix().data());
    return w;
}

namespace {

RatVector normalize_coords(const RatVector& v) {
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, x.den());
    BigInt g = 0;
    std::vector<BigInt> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        BigInt i = x.num() * (l / x.den());
        g = gcd(g, i);
        ints.push_back(i);
    }
    if (g == 0) throw std::invalid_argument("projective point with all coordinates zero");
    for (const auto& i : ints) {
        if (i != 0) {
            if (i < 0) g = -g;
            break;
        }
    }
    RatVector out;
    out.reserve(v.size());
    for (const auto& i : ints) out.emplace_back(BigInt(i / g));
    return out;
}

} // namespace

ProjectivePoint::ProjectivePoint(const RatVector& coords) : coords_(normalize_coords(coords)) {}

RatMatrix normalize_projective(const RatMatrix& m) {
    RatVector flat = normalize_coords(m.data());
    RatMatrix out = zeros(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = flat[i * m.cols() + j];
    return out;
}

ChowLimit chow_limit(const SymmetricForm& q0, const SymmetricForm& q1, std::size_t k) {
    if (q0.size() != q1.size()) throw std::invalid_argument("chow_limit: forms of different size");
    const Poly1 t = Poly1::x("t");
    Matrix<Poly1> pencil(q0.size(), q0.size(), Poly1(Rat(0)));
    for (std::size_t i = 0; i < q0.size(); ++i)
        for (std::size_t j = 0; j < q0.size(); ++j) pencil(i, j) = Poly1(q0(i, j)) + t * Poly1(q1(i, j));
    Matrix<Poly1> wedge = compound_matrix(pencil, k);
    int order = -1;
    for (const auto& e : wedge.data()) {
        int v = e.valuation();
        if (v >= 0 && (order < 0 || v < order)) order = v;
    }
    if (order < 0) throw std::domain_error("chow_limit: compound of the pencil vanishes identically");
    RatMatrix lim = zeros(wedge.rows(), wedge.cols());
    for (std::size_t i = 0; i < wedge.rows(); ++i)
        for (std::size_t j = 0; j < wedge.cols(); ++j) lim(i, j) = wedge(i, j).coeff(static_cast<std::size_t>(order));
    return {normalize_projective(lim), static_cast<unsigned>(order)};
}

std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rat>> quadric_coefficients(const RatMatrix& m) {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rat>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) {
            Rat c = i == j ? m(i, i) : m(i, j) + m(j, i);
            if (!c.is_zero()) out.push_back({{i, j}, c});
        }
    return out;
}

VarSet flag_varset(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    return VarSet(std::move(names));
}

Matrix<MPoly> flag_parametrization(std::size_t n, const std::vector<bool>& live_t) {
    if (live_t.size() != n) throw std::invalid_argument("flag_parametrization: live mask must have n entries");
    VarSet vars = flag_varset(n);
    const MPoly zero(vars), one(vars, Rat(1));
    Matrix<MPoly> m = Matrix<MPoly>::identity(n + 1, one);
    for (std::size_t j = 1; j <= n; ++j)
        if (live_t[j - 1]) m(j - 1, j) = MPoly::variable(vars, j - 1);
    Matrix<MPoly> q(n + 1, n + 1, zero);
    MPoly diag = one;
    q(0, 0) = diag;
    for (std::size_t r = 1; r <= n; ++r) {
        diag = diag * MPoly::variable(vars, n + r - 1);
        q(r, r) = diag;
    }
    return m.transpose() * q * m;
}

Matrix<MPoly> contracted_wedge(std::size_t n, std::size_t k, const std::vector<bool>& live_t) {
    if (k < 1 || k > n) throw std::invalid_argument("contracted_wedge: k out of range");
    Matrix<MPoly> wedge = compound_matrix(flag_parametrization(n, live_t), k);
    std::vector<bool> q_mask(2 * n, false);
    for (std::size_t r = 0; r < n; ++r) q_mask[n + r] = true;
    Exponents content;
    for (const auto& e : wedge.data())
        if (!e.is_zero()) content = exponent_min(content, e.monomial_content(q_mask));
    for (std::size_t i = 0; i < wedge.rows(); ++i)
        for (std::size_t j = 0; j < wedge.cols(); ++j)
            wedge(i, j) = wedge(i, j).divide_monomial(content).set_zero(q_mask);
    return wedge;
}

bool projectively_constant(const Matrix<MPoly>& m) {
    // Coefficient matrix: one row per entry, one column per monomial. The
    // projective point is constant iff this matrix has rank <= 1.
    std::set<Exponents> monomials;
    for (const auto& e : m.data())
        for (const auto& [exp, c] : e.terms()) monomials.insert(exp);
    std::vector<Exponents> cols(monomials.begin(), monomials.end());
    RatMatrix coeffs = zeros(m.data().size(), cols.size());
    for (std::size_t i = 0; i < m.data().size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) coeffs(i, j) = m.data()[i].coeff(cols[j]);
    return mat_rank(coeffs) <= 1;
}

FlagWedge flag_wedge(std::size_t n, std::size_t k, std::size_t j) {
    if (j < 1 || j > n || k < 1 || k > n) throw std::invalid_argument("flag_wedge: indices out of range");
    std::vector<bool> live(n, false);
    live[j - 1] = true;
    FlagWedge out{contracted_wedge(n, k, live), false};
    out.constant = projectively_constant(out.matrix);
    return out;
}

Matrix<MPoly> wedge2_example_matrix() { return contracted_wedge(3, 2, {true, true, true}); }

} // namespace cquad
