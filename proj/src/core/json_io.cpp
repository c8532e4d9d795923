#include "cquad/core/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace cquad {

namespace {

std::string exponent_key(const Exponents& e) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    return os.str();
}

Exponents parse_exponent_key(const std::string& key, std::size_t nvars) {
    Exponents e;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed exponent tuple '" + key + "'");
        e.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    if (e.size() != nvars) throw std::invalid_argument("exponent tuple '" + key + "' has wrong length");
    return e;
}

} // namespace

Json to_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

RatVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    RatVector v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of matrix rows");
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    return RatMatrix::from_rows(rows);
}

Json to_json(const Poly1& p) {
    Json terms = Json::object();
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (!p.coeffs()[i].is_zero()) terms[std::to_string(i)] = to_json(p.coeffs()[i]);
    return Json{{"vars", Json::array({p.var()})}, {"terms", terms}};
}

Poly1 poly1_from_json(const Json& j) {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    if (vars.size() != 1) throw std::invalid_argument("univariate polynomial needs exactly one variable");
    std::vector<Rat> c;
    for (const auto& [k, v] : j.at("terms").items()) {
        auto e = parse_exponent_key(k, 1)[0];
        if (c.size() <= e) c.resize(e + 1, Rat(0));
        c[e] += rat_from_json(v);
    }
    return Poly1(std::move(c), vars[0]);
}

Json to_json(const MPoly& p) {
    Json terms = Json::object();
    for (const auto& [e, c] : p.terms()) terms[exponent_key(e)] = to_json(c);
    return Json{{"vars", p.vars().names()}, {"terms", terms}};
}

MPoly mpoly_from_json(const Json& j) {
    VarSet vars(j.at("vars").get<std::vector<std::string>>());
    MPoly p(vars);
    for (const auto& [k, v] : j.at("terms").items())
        p += MPoly::monomial(vars, parse_exponent_key(k, vars.size()), rat_from_json(v));
    return p;
}

Json to_json(const Matrix<MPoly>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cquad
