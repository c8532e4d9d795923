#pragma once

#include "cquad/core/mpoly.hpp"
#include "cquad/quadrics.hpp"

#include <optional>

namespace cquad {

/// Maximal minors of an (n+1) x k basis matrix, indexed by lexicographic k-subsets of rows.
struct PluckerVector {
    std::size_t n = 0;
    std::size_t k = 0;
    RatVector coords;
};

PluckerVector plucker(const RatMatrix& basis);

/// Value of the second-order Chow form of Q at the (k-1)-plane spanned by
/// `basis`: p^t * compound(Q, k) * p with p = plucker(basis). Vanishes exactly
/// when the plane is tangent to Q (or contained in it).
Rat chow_eval(const SymmetricForm& q, std::size_t k, const RatMatrix& basis);
bool is_tangent(const SymmetricForm& q, const RatMatrix& basis);

struct ProportionalityWitness {
    Rat mu;                     ///< compound(A,k) = mu * compound(B,k)
    std::optional<Rat> lambda;  ///< A = lambda * B, reported for invertible inputs when it holds
};

/// Scale relating the k-th compounds of A and B, if one exists.
std::optional<ProportionalityWitness> minors_proportional(const SymmetricForm& a, const SymmetricForm& b,
                                                          std::size_t k);

/// A point of a projective space, kept in a canonical representative:
/// integer coordinates with content 1 and first nonzero coordinate positive.
class ProjectivePoint {
public:
    explicit ProjectivePoint(const RatVector& coords);

    const RatVector& coords() const { return coords_; }
    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    RatVector coords_;
};

/// Same normalization applied entrywise (row-major) to a nonzero matrix.
RatMatrix normalize_projective(const RatMatrix& m);

struct ChowLimit {
    RatMatrix form;       ///< normalized limit of compound(Q0 + t Q1, k)
    unsigned t_order = 0; ///< power of t cleared before setting t = 0
    ProjectivePoint point() const { return ProjectivePoint(form.data()); }
};

/// Limit as t -> 0 of the k-th compound of the pencil Q0 + t Q1, after clearing
/// the common power of t. Throws if the compound vanishes identically.
ChowLimit chow_limit(const SymmetricForm& q0, const SymmetricForm& q1, std::size_t k);

/// Coefficients of the quadratic form x^t M x, keyed (i, j) with i <= j:
/// M_ii for squares and 2 M_ij for cross terms.
std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rat>> quadric_coefficients(const RatMatrix& m);

/// Variables t_1..t_n, q_1..q_n of the flag parametrization Q = M^t q M.
VarSet flag_varset(std::size_t n);

/// M^t q M where M is unipotent upper-bidiagonal with M(j-1, j) = t_j for the
/// live parameters (others 0) and q = diag(1, q1, q1 q2, ..., q1...qn).
Matrix<MPoly> flag_parametrization(std::size_t n, const std::vector<bool>& live_t);

/// compound(M^t q M, k) with the common q-monomial content divided out and
/// then every q_r set to 0: the image under rho_k of the maximally degenerate
/// complete quadric with the live flag parameters.
Matrix<MPoly> contracted_wedge(std::size_t n, std::size_t k, const std::vector<bool>& live_t);

/// True when the projective point given by the matrix entries does not depend
/// on the polynomial variables (entries are all multiples of one polynomial).
bool projectively_constant(const Matrix<MPoly>& m);

struct FlagWedge {
    Matrix<MPoly> matrix;
    bool constant = false;
};

/// Checks whether rho_k contracts the flag curve Fl_j (only t_j live).
FlagWedge flag_wedge(std::size_t n, std::size_t k, std::size_t j);

/// The 6x6 contracted wedge for n = 3, k = 2 with t1, t2, t3 all live.
Matrix<MPoly> wedge2_example_matrix();

} // namespace cquad
