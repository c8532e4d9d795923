#pragma once

#include "cquad/core/json_io.hpp"
#include "cquad/core/linalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace cquad {

/// Bases of Pic(X_n) (tensored with Q):
///   H     : H_1..H_n, the tangency divisors (nef basis)
///   Mixed : H_1, E_1..E_{n-1}
///   E     : E_1..E_n, the boundary divisors
enum class DivisorBasis { H, Mixed, E };

std::string to_string(DivisorBasis b);
/// Accepts "H", "E", "mixed" and "E-mixed".
DivisorBasis parse_basis(const std::string& s);

struct DivisorClass {
    std::size_t n = 0;
    DivisorBasis basis = DivisorBasis::H;
    RatVector coeffs;
};

/// Curve class in N_1(X_n), coordinates in the basis Fl_1..Fl_n dual to H_1..H_n.
struct CurveClass {
    std::size_t n = 0;
    RatVector coeffs;
};

/// E_i = 2H_i - H_{i-1} - H_{i+1} with H_0 = H_{n+1} = 0: the rows of the
/// A_n Cartan matrix.
struct LatticeRelations {
    std::size_t n = 0;
    RatMatrix e_in_h;  ///< row i holds E_{i+1} in the H basis
};

LatticeRelations lattice_relations(std::size_t n);

/// Columns are the basis divisors of `b` written in the H basis.
RatMatrix basis_matrix(std::size_t n, DivisorBasis b);

DivisorClass divisor_H(std::size_t n, std::size_t i);
DivisorClass divisor_E(std::size_t n, std::size_t i);
CurveClass flag_curve(std::size_t n, std::size_t j);

DivisorClass convert(const DivisorClass& d, DivisorBasis target);
/// Coefficients in the H basis.
RatVector h_coeffs(const DivisorClass& d);
bool same_class(const DivisorClass& a, const DivisorClass& b);

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rat& c, const DivisorClass& d);

Rat pair(const CurveClass& c, const DivisorClass& d);

enum class Cone { nef, eff, mov };

struct Membership {
    bool member = false;
    bool interior = false;
};

/// nef: nonnegative H coefficients. eff: nonnegative E coefficients.
/// mov (n = 3 only): inside <H1,H2,H3> or <H1,H3,P>.
Membership cone_membership(const DivisorClass& d, Cone cone);

enum class CanonicalMethod { blowup, nefbasis };

/// blowup: -(N+1) H_1 + sum (Gamma_i - 1) E_i over the blowup sequence, in
/// the Mixed basis. nefbasis: -2H_1 - H_2 - ... - H_{n-1} - 2H_n in the H basis.
DivisorClass canonical(std::size_t n, CanonicalMethod method);
bool is_fano(std::size_t n);

/// One test curve: its pairings with the basis divisors and with the unknown divisor.
struct PairingRow {
    RatVector basis_pairings;
    Rat value;
};

/// Solves for the divisor whose pairings with the test curves are `value`,
/// the curves being described by their pairings with the basis divisors of
/// `basis`. Throws std::domain_error when the curves do not determine the class.
DivisorClass derive_class_from_pairings(std::size_t n, DivisorBasis basis, const std::vector<PairingRow>& rows);

/// Same, with curves given as classes in N_1.
DivisorClass derive_class_from_curves(std::size_t n, DivisorBasis basis,
                                      const std::vector<std::pair<CurveClass, Rat>>& rows);

/// Curve class determined by its pairings with the given divisors.
CurveClass curve_from_pairings(std::size_t n, const std::vector<std::pair<DivisorClass, Rat>>& rows);

/// Involution of Pic(X_3) induced by Q -> wedge^3 Q: H1 <-> H3, H2 fixed.
DivisorClass xi(const DivisorClass& d);

/// Class of the divisor P on X_3: 2(2H1 - H2 + 2H3).
DivisorClass class_P();

/// The test curves on X_3 and the divisor each one's deformations cover.
struct TestCurve {
    std::string name;
    std::array<int, 3> h_pairings;  ///< C.H1, C.H2, C.H3
    std::string cover;
};

const std::vector<TestCurve>& x3_test_curves();
/// Curve class of a named test curve (also accepts "R2" and "Fl1".."Fl3").
CurveClass x3_curve(const std::string& name);

struct TableRow {
    std::string name;
    std::array<Rat, 6> values;  ///< C.H1, C.H2, C.H3, C.E1, C.E2, C.E3
    std::string cover;
};

/// Intersection table of the X_3 test curves. Only the H columns are input;
/// the E columns are computed through the lattice relations.
std::vector<TableRow> table_x3();

/// Nef cone of X(1) = Bl_{Phi_1} P^9, kept as data: <H1, H2>.
std::vector<DivisorClass> nef_cone_x1();

Json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j, std::size_t default_n = 3);
Json to_json(const CurveClass& c);

} // namespace cquad
