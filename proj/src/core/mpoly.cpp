#include "cquad/core/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cquad {

VarSet::VarSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::size_t VarSet::index(const std::string& name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) throw std::out_of_range("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_->begin());
}

MPoly::MPoly(VarSet vars, const Rat& constant) : vars_(std::move(vars)) {
    add_term(Exponents(vars_.size(), 0), constant);
}

MPoly MPoly::variable(const VarSet& vars, std::size_t i) {
    Exponents e(vars.size(), 0);
    e.at(i) = 1;
    return monomial(vars, std::move(e), Rat(1));
}

MPoly MPoly::monomial(const VarSet& vars, Exponents e, Rat c) {
    if (e.size() != vars.size()) throw std::invalid_argument("exponent vector length mismatch");
    MPoly p(vars);
    p.add_term(e, c);
    return p;
}

void MPoly::check_vars(const MPoly& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("polynomials over different variable sets");
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rat MPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

Rat MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

MPoly MPoly::set_zero(const std::vector<bool>& mask) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        bool killed = false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (mask.at(i) && e[i] > 0) killed = true;
        if (!killed) out.add_term(e, c);
    }
    return out;
}

MPoly MPoly::substitute(const std::vector<bool>& mask, const std::vector<Rat>& values) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        Rat coef = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!mask.at(i)) continue;
            coef *= pow(values.at(i), e[i]);
            f[i] = 0;
        }
        out.add_term(f, coef);
    }
    return out;
}

Exponents exponent_min(const Exponents& a, const Exponents& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b.at(i));
    return out;
}

Exponents MPoly::monomial_content(const std::vector<bool>& mask) const {
    Exponents acc;
    for (const auto& [e, c] : terms_) acc = exponent_min(acc, e);
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!mask.at(i)) acc[i] = 0;
    return acc;
}

MPoly MPoly::divide_monomial(const Exponents& d) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < d.at(i)) throw std::domain_error("monomial does not divide polynomial");
            f[i] -= d[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    check_vars(o);
    MPoly out(vars_);
    Exponents f(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
            out.add_term(f, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

MPoly operator*(MPoly a, const Rat& c) {
    if (c.is_zero()) return MPoly(a.vars());
    for (auto& [e, x] : a.terms_) x *= c;
    return a;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        bool unit = mag == Rat(1);
        if (is_const || !unit) os << mag;
        bool need_star = !is_const && !unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << vars_.name(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    MPoly q(a.vars());
    MPoly r = a;
    const auto& [lb_e, lb_c] = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& [lr_e, lr_c] = *r.terms().rbegin();
        Exponents f(lr_e.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (lr_e[i] < lb_e[i]) throw std::domain_error("polynomial division is not exact");
            f[i] = lr_e[i] - lb_e[i];
        }
        MPoly term = MPoly::monomial(a.vars(), f, lr_c / lb_c);
        q += term;
        r -= term * b;
    }
    return q;
}

} // namespace cquad
