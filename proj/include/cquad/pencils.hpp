#pragma once

#include "cquad/core/poly1.hpp"
#include "cquad/core/random.hpp"
#include "cquad/quadrics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cquad {

/// The line of quadrics s*Q0 + t*Q1 on P^m.
class Pencil {
public:
    /// Throws std::invalid_argument if the forms differ in size or are proportional.
    Pencil(SymmetricForm q0, SymmetricForm q1);

    const SymmetricForm& q0() const { return q0_; }
    const SymmetricForm& q1() const { return q1_; }
    std::size_t ambient() const { return q0_.ambient(); }

private:
    SymmetricForm q0_;
    SymmetricForm q1_;
};

/// Homogeneous binary form in (s, t); coeffs[i] multiplies s^(degree-i) t^i.
struct BinaryForm {
    unsigned degree = 0;
    std::vector<Rat> coeffs;

    bool is_zero() const;
    /// The form at s = 1, as a polynomial in t.
    Poly1 dehomogenize() const;
    std::string to_string() const;
};

/// Number of roots on P^1 of a binary form of the given formal degree, with
/// and without multiplicity. A drop in degree after setting s = 1 counts as
/// roots at t = infinity.
RootCount count_binary_roots(const BinaryForm& f);

/// det(s Q0 + t Q1), a binary form of degree m+1. Throws std::domain_error if
/// it vanishes identically (the pencil lies in the discriminant).
BinaryForm pencil_det_form(const Pencil& p);
/// Same for an arbitrary pair of equal-size forms (proportional pairs allowed,
/// e.g. restrictions to a point).
BinaryForm det_form(const SymmetricForm& q0, const SymmetricForm& q1);

RootCount count_degenerations(const Pencil& p);

/// Members of the pencil tangent to the subspace spanned by `basis`: the
/// degeneration count of the restricted pencil.
RootCount count_tangencies(const Pencil& p, const RatMatrix& basis);

/// Members of a one-parameter family of symmetric matrices of rank <= r.
/// `family` holds the entries at s = 1 as polynomials in t, each entry a
/// binary form of formal degree `entry_degree`. The locus is cut out by the
/// gcd of all (r+1)-minors. Throws std::domain_error if every member has rank <= r.
RootCount count_rank_drops(const Matrix<Poly1>& family, unsigned entry_degree, std::size_t r);
RootCount count_rank_drops(const Pencil& p, std::size_t r);

/// s Q0 + t Q1 as a matrix of polynomials in t (s = 1).
Matrix<Poly1> pencil_matrix(const SymmetricForm& q0, const SymmetricForm& q1);

/// Tangencies of a pencil of markings living on Sing(Q'), against a fixed
/// subspace Lambda of the ambient space. Only Lambda meet Sing(Q') matters:
/// the count is the tangency count of the marking pencil with that intersection.
RootCount count_marked_tangencies(const Pencil& marking, const RatMatrix& sing_basis, const RatMatrix& lambda);

/// Random pencil on P^m whose determinant form is nonzero and squarefree
/// (resampled up to a bounded number of attempts).
Pencil random_generic_pencil(std::size_t m, Rng& rng);

/// Number of times the marking of a fixed rank-k quadric on P^n becomes
/// singular as it moves in a general pencil on Sing(Q') ~ P^{n-k}.
unsigned bk_number(std::size_t n, std::size_t k, std::uint64_t seed);

/// A curve/divisor intersection number obtained by counting members of an
/// explicit one-parameter family.
struct DirectCount {
    std::string curve;
    std::string divisor;
    RootCount count;
    bool generic = true;  ///< false if no squarefree draw was found within the retry budget
};

/// The thirteen table entries observable as degeneration or tangency counts.
std::vector<DirectCount> direct_table_counts(std::uint64_t seed);

/// G*.E1 (adjugate route), C1*.E2 and C1*.H3 from pencils of dual quadrics.
std::vector<DirectCount> dual_pencil_checks(std::uint64_t seed);

} // namespace cquad
