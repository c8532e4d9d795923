#pragma once

#include "cquad/core/json_io.hpp"
#include "cquad/core/linalg.hpp"

#include <cstdint>
#include <vector>

namespace cquad {

/// A quadric hypersurface in P^n, stored as its (n+1)x(n+1) symmetric Gram matrix.
///
/// Forms on P^0 (1x1 matrices) are allowed: they arise as restrictions to a
/// single point and as the last step of a fully degenerate flag.
class SymmetricForm {
public:
    explicit SymmetricForm(RatMatrix matrix);

    /// n, for a form on P^n.
    std::size_t ambient() const { return m_.rows() - 1; }
    std::size_t size() const { return m_.rows(); }
    const RatMatrix& matrix() const { return m_; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;

private:
    RatMatrix m_;
};

/// The form B^t Q B on P^{k-1}; B is (n+1) x k of rank k.
SymmetricForm restrict(const SymmetricForm& q, const RatMatrix& basis);

/// k-th compound (wedge) form: minors det(Q[S,T]) over lexicographically
/// ordered k-subsets. Lives on P^{C(n+1,k)-1}.
SymmetricForm compound(const SymmetricForm& q, std::size_t k);

std::size_t form_rank(const SymmetricForm& q);
inline bool is_smooth(const SymmetricForm& q) { return form_rank(q) == q.size(); }

/// Basis of the kernel of Q, i.e. of the vertex Sing(Q) ~ P^{n-rank}, as
/// columns in reduced column-echelon form.
RatMatrix kernel_basis(const SymmetricForm& q);

struct StratumDescriptor {
    std::size_t n = 0;
    std::size_t i = 0;
    std::uint64_t codim = 0;
};

/// Codimension in P^N of the locus of quadrics in P^n of rank at most i:
/// (n+1-i)(n+2-i)/2. Requires 1 <= i <= n+1.
std::uint64_t stratum_codim(std::size_t n, std::size_t i);
StratumDescriptor stratum(std::size_t n, std::size_t i);

/// Deterministic random form M^t D M on P^n with exactly `rank` nonzero
/// diagonal entries in D and M invertible with small integer entries.
SymmetricForm random_form(std::size_t n, std::size_t rank, std::uint64_t seed);

/// A quadric together with its nested markings.
///
/// flag[0] is a form on P^n; flag[i+1] is a form on Sing(flag[i]) written in
/// the coordinates of kernel_basis(flag[i]), so its ambient dimension is
/// ambient(flag[i]) - rank(flag[i]).
class CompleteQuadric {
public:
    explicit CompleteQuadric(std::vector<SymmetricForm> flag);

    const std::vector<SymmetricForm>& flag() const { return flag_; }
    /// Rank of the first form; a flag starting with rank k lies on the boundary divisor E_k
    /// (or is smooth when k = n+1).
    std::size_t leading_rank() const { return form_rank(flag_.front()); }
    /// True when the last marking is a smooth quadric.
    bool is_complete() const { return is_smooth(flag_.back()); }

private:
    std::vector<SymmetricForm> flag_;
};

/// Marking induced on Sing(Q0) by the direction Q1: the restriction of Q1 to
/// kernel_basis(Q0). This is the marking of the limit of Q0 + t Q1 as t -> 0
/// when it is nonzero.
SymmetricForm marking_from_direction(const SymmetricForm& q0, const SymmetricForm& q1);

Json to_json(const SymmetricForm& q);
SymmetricForm form_from_json(const Json& j);
Json to_json(const CompleteQuadric& q);
CompleteQuadric complete_quadric_from_json(const Json& j);

} // namespace cquad
