#include "cquad/core/linalg.hpp"

namespace cquad {

std::vector<Subset> k_subsets(std::size_t n, std::size_t k) {
    std::vector<Subset> out;
    if (k > n) return out;
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        // advance to the next combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

RatMatrix zeros(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, Rat(0)); }

RatMatrix identity(std::size_t n) { return RatMatrix::identity(n, Rat(0)); }

RatMatrix diagonal(const RatVector& d) {
    RatMatrix m = zeros(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RatMatrix column(const RatVector& v) {
    RatMatrix m = zeros(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

RatMatrix outer(const RatVector& u, const RatVector& v) {
    RatMatrix m = zeros(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    RatVector out(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
    RatMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(row, p);
        Rat inv = Rat(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Rat f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

std::size_t mat_rank(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

RatMatrix nullspace(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    RatMatrix r = rref(m, &piv);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    RatMatrix basis = zeros(n, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        basis(free[f], f) = Rat(1);
        for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], f) = -r(i, free[f]);
    }
    return basis;
}

SolveResult solve_exact(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_exact: right-hand side length mismatch");
    RatMatrix aug = zeros(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    RatMatrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == a.cols()) return {SolveStatus::inconsistent, std::nullopt};
    RatVector x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
    auto status = piv.size() == a.cols() ? SolveStatus::unique : SolveStatus::underdetermined;
    return {status, std::move(x)};
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug = zeros(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rat(1);
    }
    std::vector<std::size_t> piv;
    RatMatrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    RatMatrix out = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
    return out;
}

} // namespace cquad
