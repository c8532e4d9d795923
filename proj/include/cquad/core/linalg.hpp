#pragma once

#include "cquad/core/matrix.hpp"
#include "cquad/core/rat.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cquad {

using Subset = std::vector<std::size_t>;

/// All k-subsets of {0..n-1}, each sorted increasingly, in lexicographic order.
std::vector<Subset> k_subsets(std::size_t n, std::size_t k);

/// Binomial coefficient C(n, k) (0 when k > n).
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// Every intermediate quantity is a minor of M, so each division is exact in
/// the entry ring and polynomial entries never leave the polynomial ring.
template <class R>
R ff_det(const Matrix<R>& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
    const std::size_t n = m.rows();
    Matrix<R> a = m;
    R prev = one_like(a(0, 0));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(a(p, k))) ++p;
            if (p == n) return zero_like(a(0, 0));
            a.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        }
        prev = a(k, k);
    }
    R d = a(n - 1, n - 1);
    if (negate) d = zero_like(d) - d;
    return d;
}

/// k-th compound matrix: entry (S, T) is the minor det(M[S, T]) with S, T
/// ranging over k-subsets of rows/columns in lexicographic order.
template <class R>
Matrix<R> compound_matrix(const Matrix<R>& m, std::size_t k) {
    if (k == 0 || k > m.rows() || k > m.cols())
        throw std::invalid_argument("compound order out of range");
    auto rs = k_subsets(m.rows(), k);
    auto cs = k_subsets(m.cols(), k);
    Matrix<R> out(rs.size(), cs.size(), zero_like(m(0, 0)));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = ff_det(m.submatrix(rs[i], cs[j]));
    return out;
}

/// Classical adjugate (transposed cofactor matrix): adjugate(M) * M = det(M) * I.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
    if (m.empty()) throw std::invalid_argument("adjugate of an empty matrix");
    const std::size_t n = m.rows();
    if (n == 1) return Matrix<R>(1, 1, one_like(m(0, 0)));
    Matrix<R> out(n, n, zero_like(m(0, 0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Subset rs, cs;
            for (std::size_t r = 0; r < n; ++r)
                if (r != j) rs.push_back(r);
            for (std::size_t c = 0; c < n; ++c)
                if (c != i) cs.push_back(c);
            R minor = ff_det(m.submatrix(rs, cs));
            out(i, j) = ((i + j) % 2 == 0) ? minor : zero_like(minor) - minor;
        }
    }
    return out;
}

using RatMatrix = Matrix<Rat>;
using RatVector = std::vector<Rat>;

RatMatrix zeros(std::size_t rows, std::size_t cols);
RatMatrix identity(std::size_t n);
RatMatrix diagonal(const RatVector& d);
RatMatrix column(const RatVector& v);
RatMatrix outer(const RatVector& u, const RatVector& v);
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
Rat dot(const RatVector& a, const RatVector& b);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Rank over Q.
std::size_t mat_rank(const RatMatrix& m);

/// Basis of {x : M x = 0} as columns, in reduced column-echelon form
/// (each basis vector has a 1 at its free coordinate and 0 at the other free
/// coordinates).
RatMatrix nullspace(const RatMatrix& m);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::inconsistent;
    /// Present when status == unique. For underdetermined systems a particular
    /// solution (free variables set to zero) is supplied as well.
    std::optional<RatVector> solution;
};

/// Exact solve of A x = b. Reports inconsistency or non-uniqueness instead of guessing.
SolveResult solve_exact(const RatMatrix& a, const RatVector& b);

/// Inverse of an invertible square matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

} // namespace cquad
