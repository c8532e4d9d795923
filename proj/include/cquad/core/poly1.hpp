#pragma once

#include "cquad/core/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cquad {

/// Dense univariate polynomial over Q, lowest degree first.
///
/// Trailing zero coefficients are stripped on construction, so the stored
/// length is degree + 1 and the zero polynomial has no coefficients.
/// Binary operations require matching variable names unless one operand is
/// a constant.
class Poly1 {
public:
    Poly1() = default;
    Poly1(Rat constant, std::string var = "t");
    Poly1(std::vector<Rat> coeffs, std::string var = "t");

    static Poly1 monomial(Rat c, unsigned degree, std::string var = "t");
    /// The polynomial `var` itself.
    static Poly1 x(std::string var = "t") { return monomial(Rat(1), 1, std::move(var)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::string& var() const { return var_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    /// Exponent of the lowest nonzero term; zero polynomial has none (returns -1).
    int valuation() const;
    /// Divides by var^k; all dropped coefficients must be zero.
    Poly1 shift_down(unsigned k) const;

    Rat eval(const Rat& x) const;
    Poly1 derivative() const;
    Poly1 monic() const;

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    Poly1& operator*=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    void adopt_var(const Poly1& o);

    std::vector<Rat> c_;
    std::string var_ = "t";
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly1 gcd(const Poly1& a, const Poly1& b);
/// p / gcd(p, p'), made monic.
Poly1 squarefree_part(const Poly1& p);

struct RootCount {
    unsigned degree = 0;
    unsigned distinct = 0;
    friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Degree of p and number of distinct complex roots. Throws on the zero polynomial.
RootCount distinct_root_count(const Poly1& p);

inline bool is_zero(const Poly1& p) { return p.is_zero(); }
inline Poly1 zero_like(const Poly1& p) { return Poly1(std::vector<Rat>{}, p.var()); }
inline Poly1 one_like(const Poly1& p) { return Poly1(Rat(1), p.var()); }
/// Exact quotient; throws std::domain_error if b does not divide a.
Poly1 exact_div(const Poly1& a, const Poly1& b);

} // namespace cquad
