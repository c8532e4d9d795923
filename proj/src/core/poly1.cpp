#include "cquad/core/poly1.hpp"

#include <sstream>
#include <stdexcept>

namespace cquad {

Poly1::Poly1(Rat constant, std::string var) : c_{std::move(constant)}, var_(std::move(var)) {
    trim();
}

Poly1::Poly1(std::vector<Rat> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

Poly1 Poly1::monomial(Rat c, unsigned degree, std::string var) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = std::move(c);
    return Poly1(std::move(v), std::move(var));
}

void Poly1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly1::adopt_var(const Poly1& o) {
    if (var_ == o.var_) return;
    if (o.is_constant()) return;
    if (is_constant()) {
        var_ = o.var_;
        return;
    }
    throw std::invalid_argument("polynomials in different variables: " + var_ + ", " + o.var_);
}

int Poly1::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Poly1 Poly1::shift_down(unsigned k) const {
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (!c_[i].is_zero()) throw std::domain_error("shift_down would drop a nonzero term");
    if (k >= c_.size()) return Poly1(std::vector<Rat>{}, var_);
    return Poly1(std::vector<Rat>(c_.begin() + k, c_.end()), var_);
}

Rat Poly1::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly1 Poly1::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return Poly1(std::move(d), var_);
}

Poly1 Poly1::monic() const {
    if (is_zero()) return *this;
    Rat l = lead();
    std::vector<Rat> v = c_;
    for (auto& x : v) x /= l;
    return Poly1(std::move(v), var_);
}

Poly1 Poly1::operator-() const {
    Poly1 out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Poly1& Poly1::operator+=(const Poly1& o) {
    adopt_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
    adopt_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
    adopt_var(o);
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

std::string Poly1::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rat& c = c_[k];
        if (c.is_zero()) continue;
        Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rat(1);
        if (k == 0 || !unit) os << mag;
        if (k > 0) {
            if (!unit) os << "*";
            os << var_;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::string var = a.is_constant() ? b.var() : a.var();
    std::vector<Rat> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly1(std::vector<Rat>{}, var), a};
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    Rat lb = b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat f = r[k + db] / lb;
        q[k] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs()[j];
    }
    return {Poly1(std::move(q), var), Poly1(std::move(r), var)};
}

Poly1 gcd(const Poly1& a, const Poly1& b) {
    Poly1 x = a, y = b;
    while (!y.is_zero()) {
        Poly1 r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly1 squarefree_part(const Poly1& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    if (p.is_constant()) return p.monic();
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

RootCount distinct_root_count(const Poly1& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    return {static_cast<unsigned>(p.degree()), static_cast<unsigned>(squarefree_part(p).degree())};
}

Poly1 exact_div(const Poly1& a, const Poly1& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

} // namespace cquad
