// Thin pybind11 layer. Structured values cross the boundary as JSON text so
// rationals stay exact; the Python package decodes them.
#include "cquad/chambers.hpp"
#include "cquad/chowform.hpp"
#include "cquad/pencils.hpp"
#include "cquad/picard.hpp"
#include "cquad/quadrics.hpp"
#include "cquad/schubert.hpp"
#include "cquad/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cquad;

namespace {

Json parse(const std::string& s) { return Json::parse(s); }

SymmetricForm form_arg(const std::string& s) {
    Json j = parse(s);
    return j.is_array() ? SymmetricForm(matrix_from_json(j)) : form_from_json(j);
}

CanonicalMethod method_arg(const std::string& m) {
    if (m == "blowup") return CanonicalMethod::blowup;
    if (m == "nefbasis") return CanonicalMethod::nefbasis;
    throw std::invalid_argument("method must be blowup or nefbasis");
}

Cone cone_arg(const std::string& c) {
    if (c == "nef") return Cone::nef;
    if (c == "eff") return Cone::eff;
    if (c == "mov") return Cone::mov;
    throw std::invalid_argument("cone must be nef, eff or mov");
}

Json count_json(const RootCount& c) { return {{"degree", c.degree}, {"distinct", c.distinct}}; }

}  // namespace

PYBIND11_MODULE(_cquad, m) {
    m.doc() = "Exact computations on spaces of complete quadrics";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const Json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("compound", [](const std::string& form, std::size_t k) { return to_json(compound(form_arg(form), k).matrix()).dump(); });
    m.def("chow_eval", [](const std::string& form, std::size_t k, const std::string& plane) {
        return chow_eval(form_arg(form), k, matrix_from_json(parse(plane))).to_string();
    });
    m.def("chow_limit", [](const std::string& q0, const std::string& q1, std::size_t k) {
        ChowLimit lim = chow_limit(form_arg(q0), form_arg(q1), k);
        return Json{{"form", to_json(lim.form)}, {"t_order", lim.t_order}}.dump();
    });

    m.def("count_degenerations", [](const std::string& q0, const std::string& q1) {
        return count_json(count_degenerations(Pencil(form_arg(q0), form_arg(q1)))).dump();
    });
    m.def("count_tangencies", [](const std::string& q0, const std::string& q1, const std::string& basis) {
        return count_json(count_tangencies(Pencil(form_arg(q0), form_arg(q1)), matrix_from_json(parse(basis)))).dump();
    });
    m.def("bk_number", &bk_number, py::arg("n"), py::arg("k"), py::arg("seed"));
    m.def("direct_table_counts", [](std::uint64_t seed) {
        Json rows = Json::array();
        for (const auto& dc : direct_table_counts(seed))
            rows.push_back({{"curve", dc.curve}, {"divisor", dc.divisor}, {"degree", dc.count.degree},
                            {"distinct", dc.count.distinct}});
        return rows.dump();
    });

    m.def("convert", [](const std::string& d, const std::string& basis) {
        return to_json(convert(divisor_from_json(parse(d)), parse_basis(basis))).dump();
    });
    m.def("canonical", [](std::size_t n, const std::string& method) {
        return to_json(canonical(n, method_arg(method))).dump();
    });
    m.def("is_fano", &is_fano);
    m.def("cone_membership", [](const std::string& d, const std::string& cone) {
        Membership mb = cone_membership(divisor_from_json(parse(d)), cone_arg(cone));
        return std::pair<bool, bool>{mb.member, mb.interior};
    });
    m.def("pair", [](const std::string& curve, const std::string& d) {
        return pair(x3_curve(curve), divisor_from_json(parse(d))).to_string();
    });
    m.def("table_x3", [] {
        Json rows = Json::array();
        for (const auto& r : table_x3()) {
            Json vals = Json::array();
            for (const auto& v : r.values) vals.push_back(to_json(v));
            rows.push_back({{"curve", r.name}, {"values", vals}, {"cover", r.cover}});
        }
        return rows.dump();
    });
    m.def("xi", [](const std::string& d) { return to_json(xi(divisor_from_json(parse(d)))).dump(); });

    m.def("classify", [](const std::string& d) { return to_json(classify(divisor_from_json(parse(d)))).dump(); });
    m.def("classify_segment", [](const std::string& t) { return to_json(classify_segment(Rat::parse(t))).dump(); });
    m.def("chamber_census", [](std::size_t samples, std::uint64_t seed) {
        return to_json(chamber_census(samples, seed)).dump();
    });

    m.def("schubert", [](unsigned k, unsigned n, const std::string& expr) {
        return to_json(evaluate_schubert(k, n, expr)).dump();
    });
    m.def("schubert_pair", [](unsigned k, unsigned n, const std::string& a, const std::string& b) {
        return duality_pair(evaluate_schubert(k, n, a), evaluate_schubert(k, n, b)).get_str();
    });
    m.def("grassmannian_degree", [](unsigned k, unsigned n) {
        return sigma1_power_degree(k, n, (k + 1) * (n - k)).get_str();
    });

    m.def("run_acceptance", [](std::uint64_t seed) {
        Json rows = Json::array();
        for (const auto& r : run_acceptance(seed)) rows.push_back(to_json(r));
        return rows.dump();
    });
}
