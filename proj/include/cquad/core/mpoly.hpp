#pragma once

#include "cquad/core/rat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cquad {

using Exponents = std::vector<unsigned>;

/// Ordered variable set shared by all polynomials of one computation.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }
    /// Index of `name`; throws std::out_of_range if absent.
    std::size_t index(const std::string& name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms live in a map keyed by exponent vectors; the map's lexicographic key
/// order is the lex monomial order with the first variable most significant,
/// which is what exact division relies on. Zero coefficients are never stored.
class MPoly {
public:
    explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}
    MPoly(VarSet vars, const Rat& constant);

    static MPoly variable(const VarSet& vars, std::size_t i);
    static MPoly variable(const VarSet& vars, const std::string& name) {
        return variable(vars, vars.index(name));
    }
    static MPoly monomial(const VarSet& vars, Exponents e, Rat c);

    const VarSet& vars() const { return vars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value (zero if absent).
    Rat constant_term() const;
    Rat coeff(const Exponents& e) const;
    unsigned degree_in(std::size_t var) const;

    /// Substitutes 0 for every variable whose mask entry is true.
    MPoly set_zero(const std::vector<bool>& mask) const;
    /// Substitutes the given rational values for the masked variables.
    MPoly substitute(const std::vector<bool>& mask, const std::vector<Rat>& values) const;
    /// Componentwise minimum exponent over all terms, restricted to masked
    /// variables (other components are 0). Zero polynomial -> empty vector.
    Exponents monomial_content(const std::vector<bool>& mask) const;
    /// Divides every term by the monomial x^e; throws if some term is not divisible.
    MPoly divide_monomial(const Exponents& e) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const Rat& c);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void check_vars(const MPoly& o) const;
    void add_term(const Exponents& e, const Rat& c);

    VarSet vars_;
    std::map<Exponents, Rat> terms_;
};

/// Componentwise minimum of two exponent vectors (empty acts as identity).
Exponents exponent_min(const Exponents& a, const Exponents& b);

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline MPoly zero_like(const MPoly& p) { return MPoly(p.vars()); }
inline MPoly one_like(const MPoly& p) { return MPoly(p.vars(), Rat(1)); }
/// Exact quotient by lex-order division; throws std::domain_error if b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);

} // namespace cquad
