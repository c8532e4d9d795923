#include "cquad/picard.hpp"

#include "cquad/quadrics.hpp"

#include <stdexcept>

namespace cquad {

std::string to_string(DivisorBasis b) {
    switch (b) {
    case DivisorBasis::H: return "H";
    case DivisorBasis::Mixed: return "mixed";
    case DivisorBasis::E: return "E";
    }
    return "?";
}

DivisorBasis parse_basis(const std::string& s) {
    if (s == "H") return DivisorBasis::H;
    if (s == "E") return DivisorBasis::E;
    if (s == "mixed" || s == "E-mixed") return DivisorBasis::Mixed;
    throw std::invalid_argument("unknown divisor basis '" + s + "'");
}

namespace {

void check_n(std::size_t n) {
    if (n < 1) throw std::invalid_argument("Picard lattice needs n >= 1");
}

void check_same_n(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("classes on different X_n");
}

} // namespace

LatticeRelations lattice_relations(std::size_t n) {
    check_n(n);
    RatMatrix c = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        c(i, i) = Rat(2);
        if (i > 0) c(i, i - 1) = Rat(-1);
        if (i + 1 < n) c(i, i + 1) = Rat(-1);
    }
    return {n, c};
}

RatMatrix basis_matrix(std::size_t n, DivisorBasis b) {
    RatMatrix e = lattice_relations(n).e_in_h.transpose();  // column i = E_{i+1}
    switch (b) {
    case DivisorBasis::H: return identity(n);
    case DivisorBasis::E: return e;
    case DivisorBasis::Mixed: {
        RatMatrix m = zeros(n, n);
        m(0, 0) = Rat(1);
        for (std::size_t c = 1; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) m(r, c) = e(r, c - 1);
        return m;
    }
    }
    throw std::logic_error("unreachable");
}

DivisorClass divisor_H(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw std::invalid_argument("H_i index out of range");
    RatVector v(n, Rat(0));
    v[i - 1] = Rat(1);
    return {n, DivisorBasis::H, v};
}

DivisorClass divisor_E(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw std::invalid_argument("E_i index out of range");
    RatVector v(n, Rat(0));
    v[i - 1] = Rat(1);
    return {n, DivisorBasis::E, v};
}

CurveClass flag_curve(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw std::invalid_argument("Fl_j index out of range");
    RatVector v(n, Rat(0));
    v[j - 1] = Rat(1);
    return {n, v};
}

RatVector h_coeffs(const DivisorClass& d) {
    if (d.coeffs.size() != d.n) throw std::invalid_argument("divisor has wrong number of coefficients");
    return mat_vec(basis_matrix(d.n, d.basis), d.coeffs);
}

DivisorClass convert(const DivisorClass& d, DivisorBasis target) {
    RatVector h = h_coeffs(d);
    if (target == DivisorBasis::H) return {d.n, target, h};
    auto sol = solve_exact(basis_matrix(d.n, target), h);
    if (sol.status != SolveStatus::unique) throw std::logic_error("divisor basis matrix is singular");
    return {d.n, target, *sol.solution};
}

bool same_class(const DivisorClass& a, const DivisorClass& b) {
    return a.n == b.n && h_coeffs(a) == h_coeffs(b);
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    check_same_n(a.n, b.n);
    RatVector x = h_coeffs(a), y = h_coeffs(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return convert({a.n, DivisorBasis::H, x}, a.basis);
}

DivisorClass operator*(const Rat& c, const DivisorClass& d) {
    DivisorClass out = d;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

Rat pair(const CurveClass& c, const DivisorClass& d) {
    check_same_n(c.n, d.n);
    return dot(c.coeffs, h_coeffs(d));
}

namespace {

bool all_nonneg(const RatVector& v) {
    for (const auto& x : v)
        if (x.sign() < 0) return false;
    return true;
}

bool all_pos(const RatVector& v) {
    for (const auto& x : v)
        if (x.sign() <= 0) return false;
    return true;
}

RatVector coords_in(const RatVector& h, const std::vector<RatVector>& gens) {
    RatMatrix m = zeros(h.size(), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
        for (std::size_t r = 0; r < h.size(); ++r) m(r, c) = gens[c][r];
    auto sol = solve_exact(m, h);
    if (sol.status != SolveStatus::unique) throw std::logic_error("cone generators are not a basis");
    return *sol.solution;
}

} // namespace

Membership cone_membership(const DivisorClass& d, Cone cone) {
    switch (cone) {
    case Cone::nef: {
        RatVector h = h_coeffs(d);
        return {all_nonneg(h), all_pos(h)};
    }
    case Cone::eff: {
        RatVector e = convert(d, DivisorBasis::E).coeffs;
        return {all_nonneg(e), all_pos(e)};
    }
    case Cone::mov: {
        if (d.n != 3) throw std::invalid_argument("movable cone is only available for n = 3");
        RatVector h = h_coeffs(d);
        RatVector p = h_coeffs(class_P());
        RatVector side = coords_in(h, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}, p});
        Membership m;
        m.member = all_nonneg(h) || all_nonneg(side);
        // interior of the union: inside either cone, or on the open face <H1,H3> they share
        bool on_shared_face = h[1].is_zero() && h[0].sign() > 0 && h[2].sign() > 0;
        m.interior = all_pos(h) || all_pos(side) || on_shared_face;
        return m;
    }
    }
    throw std::logic_error("unreachable");
}

DivisorClass canonical(std::size_t n, CanonicalMethod method) {
    if (n < 2) throw std::invalid_argument("canonical class needs n >= 2");
    if (method == CanonicalMethod::nefbasis) {
        RatVector h(n, Rat(-1));
        h.front() = Rat(-2);
        h.back() = Rat(-2);
        return {n, DivisorBasis::H, h};
    }
    // K_{P^N} = -(N+1) H_1, then each blowup along a stratum of codimension
    // Gamma_i adds (Gamma_i - 1) E_i; the last step adds 2 E_{n-1}.
    const long big_n = static_cast<long>(binomial(n + 2, 2)) - 1;
    RatVector m(n, Rat(0));
    m[0] = Rat(-(big_n + 1));
    for (std::size_t i = 1; i + 1 < n; ++i) m[i] = Rat(static_cast<long>(stratum_codim(n, i)) - 1);
    m[n - 1] = Rat(2);
    return {n, DivisorBasis::Mixed, m};
}

bool is_fano(std::size_t n) {
    RatVector h = h_coeffs(canonical(n, CanonicalMethod::nefbasis));
    for (const auto& x : h)
        if (x.sign() >= 0) return false;
    return true;
}

DivisorClass derive_class_from_pairings(std::size_t n, DivisorBasis basis, const std::vector<PairingRow>& rows) {
    check_n(n);
    RatMatrix a = zeros(rows.size(), n);
    RatVector b;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].basis_pairings.size() != n)
            throw std::invalid_argument("pairing row has wrong number of basis pairings");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i].basis_pairings[j];
        b.push_back(rows[i].value);
    }
    auto sol = solve_exact(a, b);
    if (sol.status == SolveStatus::inconsistent)
        throw std::domain_error("test-curve pairings are inconsistent");
    if (sol.status == SolveStatus::underdetermined)
        throw std::domain_error("test curves do not span N_1; class is not determined");
    return {n, basis, *sol.solution};
}

DivisorClass derive_class_from_curves(std::size_t n, DivisorBasis basis,
                                      const std::vector<std::pair<CurveClass, Rat>>& rows) {
    RatMatrix bm = basis_matrix(n, basis);
    std::vector<PairingRow> pr;
    for (const auto& [c, v] : rows) {
        check_same_n(c.n, n);
        RatVector bp;
        for (std::size_t j = 0; j < n; ++j) {
            RatVector col(n);
            for (std::size_t r = 0; r < n; ++r) col[r] = bm(r, j);
            bp.push_back(dot(c.coeffs, col));
        }
        pr.push_back({bp, v});
    }
    return derive_class_from_pairings(n, basis, pr);
}

CurveClass curve_from_pairings(std::size_t n, const std::vector<std::pair<DivisorClass, Rat>>& rows) {
    RatMatrix a = zeros(rows.size(), n);
    RatVector b;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        check_same_n(rows[i].first.n, n);
        RatVector h = h_coeffs(rows[i].first);
        for (std::size_t j = 0; j < n; ++j) a(i, j) = h[j];
        b.push_back(rows[i].second);
    }
    auto sol = solve_exact(a, b);
    if (sol.status != SolveStatus::unique) throw std::domain_error("pairings do not determine a curve class");
    return {n, *sol.solution};
}

DivisorClass xi(const DivisorClass& d) {
    if (d.n != 3) throw std::invalid_argument("xi is only defined on X_3");
    RatVector h = h_coeffs(d);
    return convert({3, DivisorBasis::H, {h[2], h[1], h[0]}}, d.basis);
}

DivisorClass class_P() { return {3, DivisorBasis::H, {Rat(4), Rat(-2), Rat(4)}}; }

const std::vector<TestCurve>& x3_test_curves() {
    static const std::vector<TestCurve> curves = {
        {"G", {1, 2, 3}, "X3"},       {"G*", {3, 2, 1}, "X3"},  {"C1", {0, 1, 2}, "E1"},
        {"C1*", {0, 2, 1}, "E1"},     {"C2", {1, 0, 0}, "E2"},  {"C3", {1, 2, 0}, "E3"},
        {"C1,2", {0, 1, 0}, "E1 cap E3"}, {"L2", {0, 0, 1}, "E2"},
    };
    return curves;
}

CurveClass x3_curve(const std::string& name) {
    for (const auto& c : x3_test_curves()) {
        if (c.name != name) continue;
        std::vector<std::pair<DivisorClass, Rat>> rows;
        for (std::size_t i = 0; i < 3; ++i) rows.push_back({divisor_H(3, i + 1), Rat(c.h_pairings[i])});
        return curve_from_pairings(3, rows);
    }
    if (name == "R2") {
        // strict transform of a pencil of rank-2 quadrics: meets H1 once, E2 twice
        return curve_from_pairings(3, {{divisor_H(3, 1), Rat(1)},
                                       {divisor_E(3, 1), Rat(0)},
                                       {divisor_E(3, 2), Rat(2)},
                                       {divisor_E(3, 3), Rat(0)}});
    }
    if (name.size() == 3 && name.rfind("Fl", 0) == 0 && name[2] >= '1' && name[2] <= '3')
        return flag_curve(3, static_cast<std::size_t>(name[2] - '0'));
    throw std::invalid_argument("unknown test curve '" + name + "'");
}

std::vector<TableRow> table_x3() {
    std::vector<TableRow> rows;
    for (const auto& tc : x3_test_curves()) {
        CurveClass c = x3_curve(tc.name);
        TableRow row{tc.name, {}, tc.cover};
        for (std::size_t i = 0; i < 3; ++i) row.values[i] = pair(c, divisor_H(3, i + 1));
        for (std::size_t i = 0; i < 3; ++i) row.values[3 + i] = pair(c, divisor_E(3, i + 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<DivisorClass> nef_cone_x1() {
    return {{3, DivisorBasis::H, {Rat(1), Rat(0), Rat(0)}}, {3, DivisorBasis::H, {Rat(0), Rat(1), Rat(0)}}};
}

Json to_json(const DivisorClass& d) {
    return Json{{"n", d.n}, {"basis", to_string(d.basis)}, {"coeffs", to_json(d.coeffs)}};
}

DivisorClass divisor_from_json(const Json& j, std::size_t default_n) {
    DivisorClass d;
    d.basis = parse_basis(j.value("basis", std::string("H")));
    d.coeffs = vector_from_json(j.at("coeffs"));
    d.n = j.value("n", d.coeffs.empty() ? default_n : d.coeffs.size());
    if (d.coeffs.size() != d.n) throw std::invalid_argument("divisor JSON: coefficient count does not match n");
    check_n(d.n);
    return d;
}

Json to_json(const CurveClass& c) { return Json{{"n", c.n}, {"basis", "Fl"}, {"coeffs", to_json(c.coeffs)}}; }

} // namespace cquad
