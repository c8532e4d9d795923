#include "cquad/quadrics.hpp"

#include "cquad/core/random.hpp"

#include <stdexcept>

namespace cquad {

SymmetricForm::SymmetricForm(RatMatrix matrix) : m_(std::move(matrix)) {
    if (m_.empty() || !m_.is_square()) throw std::invalid_argument("symmetric form needs a nonempty square matrix");
    if (!m_.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

SymmetricForm restrict(const SymmetricForm& q, const RatMatrix& basis) {
    if (basis.rows() != q.size()) throw std::invalid_argument("restrict: basis has wrong number of rows");
    if (basis.cols() == 0 || mat_rank(basis) != basis.cols())
        throw std::invalid_argument("restrict: basis matrix is rank deficient");
    return SymmetricForm(basis.transpose() * q.matrix() * basis);
}

SymmetricForm compound(const SymmetricForm& q, std::size_t k) {
    if (k == 0 || k > q.size()) throw std::invalid_argument("compound: k out of range");
    return SymmetricForm(compound_matrix(q.matrix(), k));
}

std::size_t form_rank(const SymmetricForm& q) { return mat_rank(q.matrix()); }

RatMatrix kernel_basis(const SymmetricForm& q) { return nullspace(q.matrix()); }

std::uint64_t stratum_codim(std::size_t n, std::size_t i) {
    if (i < 1 || i > n + 1) throw std::invalid_argument("stratum_codim: rank bound out of range");
    return static_cast<std::uint64_t>(n + 1 - i) * (n + 2 - i) / 2;
}

StratumDescriptor stratum(std::size_t n, std::size_t i) { return {n, i, stratum_codim(n, i)}; }

SymmetricForm random_form(std::size_t n, std::size_t rank, std::uint64_t seed) {
    if (rank < 1 || rank > n + 1) throw std::invalid_argument("random_form: rank must lie in 1..n+1");
    Rng rng(seed);
    RatMatrix m = rng.invertible(n + 1, 3);
    RatVector d(n + 1, Rat(0));
    for (std::size_t i = 0; i < rank; ++i) d[i] = Rat(rng.nonzero_int(3));
    return SymmetricForm(m.transpose() * diagonal(d) * m);
}

CompleteQuadric::CompleteQuadric(std::vector<SymmetricForm> flag) : flag_(std::move(flag)) {
    if (flag_.empty()) throw std::invalid_argument("complete quadric needs at least one form");
    for (std::size_t i = 0; i < flag_.size(); ++i) {
        std::size_t r = form_rank(flag_[i]);
        if (r == 0) throw std::invalid_argument("complete quadric: form of rank 0 in flag");
        if (i + 1 < flag_.size()) {
            if (r == flag_[i].size())
                throw std::invalid_argument("complete quadric: smooth form cannot carry a marking");
            if (flag_[i + 1].ambient() != flag_[i].ambient() - r)
                throw std::invalid_argument("complete quadric: marking lives on the wrong space");
        }
    }
}

SymmetricForm marking_from_direction(const SymmetricForm& q0, const SymmetricForm& q1) {
    if (q0.size() != q1.size()) throw std::invalid_argument("marking_from_direction: size mismatch");
    RatMatrix k = kernel_basis(q0);
    if (k.cols() == 0) throw std::invalid_argument("marking_from_direction: form is smooth");
    return restrict(q1, k);
}

Json to_json(const SymmetricForm& q) {
    return Json{{"n", q.ambient()}, {"matrix", to_json(q.matrix())}};
}

SymmetricForm form_from_json(const Json& j) {
    SymmetricForm q(matrix_from_json(j.at("matrix")));
    if (j.contains("n") && j.at("n").get<std::size_t>() != q.ambient())
        throw std::invalid_argument("form JSON: 'n' does not match the matrix size");
    return q;
}

Json to_json(const CompleteQuadric& q) {
    Json flag = Json::array();
    for (const auto& f : q.flag()) flag.push_back(to_json(f));
    return Json{{"flag", flag}};
}

CompleteQuadric complete_quadric_from_json(const Json& j) {
    std::vector<SymmetricForm> flag;
    for (const auto& f : j.at("flag")) flag.push_back(form_from_json(f));
    return CompleteQuadric(std::move(flag));
}

} // namespace cquad
