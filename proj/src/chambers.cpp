#include "cquad/chambers.hpp"

#include "cquad/core/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace cquad {

namespace {

using G = Generator;
using LP = LocusPart;

bool has_part(const Locus& l, LocusPart p) {
    return std::find(l.parts.begin(), l.parts.end(), p) != l.parts.end();
}

LocusPart swap_part(LocusPart p) {
    switch (p) {
    case LP::E1: return LP::E3;
    case LP::E3: return LP::E1;
    default: return p;
    }
}

Generator swap_generator(Generator g) {
    switch (g) {
    case G::H1: return G::H3;
    case G::H3: return G::H1;
    case G::E1: return G::E3;
    case G::E3: return G::E1;
    default: return g;
    }
}

int swap_chamber(int id) {
    switch (id) {
    case 3: return 4;
    case 4: return 3;
    case 6: return 7;
    case 7: return 6;
    default: return id;
    }
}

std::vector<Generator> sorted(std::vector<Generator> gens) {
    std::sort(gens.begin(), gens.end());
    return gens;
}

const std::string kP9 = "P^9 = Hilb^{(x+1)^2}(P^3)";
const std::string kP9Dual = "P^9*";
const std::string kX1 = "X(1)=Bl_{Phi1}P^9";
const std::string kY1 = "Y(1)=Bl_{Phi1}P^9*";

std::string unclaimed_label(const Locus& l) { return "stable base locus " + l.to_string() + "; no model claimed"; }

// Model label and whether it names a model, for a cell of the given region.
std::pair<std::string, bool> model_label(int region, CellKind cell, const std::vector<Generator>& gens,
                                         const Locus& locus) {
    if (region == 1) {
        if (cell == CellKind::interior) return {"X_3", true};
        if (cell == CellKind::ray) {
            if (gens[0] == G::H1) return {kP9, true};
            if (gens[0] == G::H2) return {"Chow_2(1,X_3)", true};
            return {kP9Dual, true};
        }
        if (gens == std::vector<Generator>{G::H1, G::H3}) return {"C/(Z/2), small contraction, Exc = E1 cap E3", true};
        if (gens == std::vector<Generator>{G::H1, G::H2}) return {kX1, true};
        return {kY1, true};
    }
    if (region == 2) {
        if (cell == CellKind::interior) return {"X_3^+ (flip)", true};
        if (cell == CellKind::ray) return {"G(2,5)/(Z/2)", true};
    }
    return {unclaimed_label(locus), false};
}

std::string dual_label(const std::string& label) {
    static const std::vector<std::pair<std::string, std::string>> pairs = {{kP9, kP9Dual}, {kX1, kY1}};
    for (const auto& [a, b] : pairs) {
        if (label == a) return b;
        if (label == b) return a;
    }
    return label;
}

DivisorClass as_x3(const DivisorClass& d) {
    if (d.n != 3) throw std::invalid_argument("chamber classification is only defined on X_3");
    return d;
}

struct CellHit {
    CellKind kind;
    std::vector<Generator> gens;
    int triangle_region;
};

// Locates h in a closed triangle given the inverse of its generator matrix;
// nullopt when outside.
std::optional<CellHit> locate(const RatVector& h, const Triangle& tri, const RatMatrix& inv) {
    RatVector x = mat_vec(inv, h);
    std::vector<Generator> positive;
    for (std::size_t c = 0; c < 3; ++c) {
        int sign = x[c].sign();
        if (sign < 0) return std::nullopt;
        if (sign > 0) positive.push_back(tri.gens[c]);
    }
    CellKind kind = positive.size() == 3 ? CellKind::interior : positive.size() == 2 ? CellKind::wall : CellKind::ray;
    return CellHit{kind, sorted(positive), tri.region};
}

// Every closed triangle of the fan containing h.
std::vector<CellHit> locate_all(const RatVector& h) {
    static const auto triangles = [] {
        std::vector<std::pair<Triangle, RatMatrix>> out;
        for (const auto& region : region_specs())
            for (const auto& tri : region.triangles) {
                RatMatrix m = zeros(3, 3);
                for (std::size_t c = 0; c < 3; ++c) {
                    RatVector g = generator_coeffs(tri.gens[c]);
                    for (std::size_t r = 0; r < 3; ++r) m(r, c) = g[r];
                }
                out.push_back({tri, inverse(m)});
            }
        return out;
    }();
    std::vector<CellHit> hits;
    for (const auto& [tri, inv] : triangles)
        if (auto hit = locate(h, tri, inv)) hits.push_back(*hit);
    return hits;
}

bool owns(const RegionSpec& r, const CellHit& hit) {
    switch (hit.kind) {
    case CellKind::interior: return hit.triangle_region == r.id;
    case CellKind::wall:
        for (const auto& w : r.walls)
            if (sorted({w[0], w[1]}) == hit.gens) return true;
        return false;
    case CellKind::ray: return std::find(r.rays.begin(), r.rays.end(), hit.gens[0]) != r.rays.end();
    }
    return false;
}

RatVector checked_h(const DivisorClass& d) {
    DivisorClass x = as_x3(d);
    RatVector h = h_coeffs(x);
    if (std::all_of(h.begin(), h.end(), [](const Rat& v) { return v.is_zero(); }))
        throw std::invalid_argument("zero class has no chamber");
    if (!cone_membership(x, Cone::eff).member) throw std::invalid_argument("class is not effective");
    return h;
}

} // namespace

std::string Locus::to_string() const {
    if (parts.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " cup ";
        switch (parts[i]) {
        case LP::E1: out += "E1"; break;
        case LP::E2: out += "E2"; break;
        case LP::E3: out += "E3"; break;
        case LP::E1capE3: out += "E1 cap E3"; break;
        }
    }
    return out;
}

Locus make_locus(std::vector<LocusPart> parts) {
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    Locus l{std::move(parts)};
    if (has_part(l, LP::E1) || has_part(l, LP::E3))
        l.parts.erase(std::remove(l.parts.begin(), l.parts.end(), LP::E1capE3), l.parts.end());
    return l;
}

bool locus_contains(const Locus& big, const Locus& small) {
    for (LocusPart p : small.parts) {
        if (has_part(big, p)) continue;
        if (p == LP::E1capE3 && (has_part(big, LP::E1) || has_part(big, LP::E3))) continue;
        return false;
    }
    return true;
}

Locus dual_locus(const Locus& l) {
    std::vector<LocusPart> parts;
    for (LocusPart p : l.parts) parts.push_back(swap_part(p));
    return make_locus(std::move(parts));
}

std::string to_string(Generator g) {
    switch (g) {
    case G::H1: return "H1";
    case G::H2: return "H2";
    case G::H3: return "H3";
    case G::E1: return "E1";
    case G::E2: return "E2";
    case G::E3: return "E3";
    case G::P: return "P";
    }
    throw std::logic_error("unreachable");
}

RatVector generator_coeffs(Generator g) {
    switch (g) {
    case G::H1: return {Rat(1), Rat(0), Rat(0)};
    case G::H2: return {Rat(0), Rat(1), Rat(0)};
    case G::H3: return {Rat(0), Rat(0), Rat(1)};
    case G::E1: return h_coeffs(divisor_E(3, 1));
    case G::E2: return h_coeffs(divisor_E(3, 2));
    case G::E3: return h_coeffs(divisor_E(3, 3));
    case G::P: return h_coeffs(class_P());
    }
    throw std::logic_error("unreachable");
}

std::string to_string(CellKind k) {
    switch (k) {
    case CellKind::interior: return "interior";
    case CellKind::wall: return "wall";
    case CellKind::ray: return "ray";
    }
    throw std::logic_error("unreachable");
}

const std::vector<RegionSpec>& region_specs() {
    static const std::vector<RegionSpec> specs = {
        {1, {{{G::H1, G::H2, G::H3}, 1}}, {{G::H1, G::H2}, {G::H2, G::H3}, {G::H1, G::H3}}, {G::H1, G::H2, G::H3},
         make_locus({})},
        {2, {{{G::H1, G::H3, G::P}, 2}}, {{G::H1, G::P}, {G::H3, G::P}}, {G::P}, make_locus({LP::E1capE3})},
        {3, {{{G::H3, G::E3, G::P}, 3}}, {{G::H3, G::E3}, {G::E3, G::P}}, {G::E3}, make_locus({LP::E3})},
        {4, {{{G::H1, G::E1, G::P}, 4}}, {{G::H1, G::E1}, {G::E1, G::P}}, {G::E1}, make_locus({LP::E1})},
        {5, {{{G::P, G::E1, G::E3}, 5}}, {{G::E1, G::E3}}, {}, make_locus({LP::E1, LP::E3})},
        {6, {{{G::H3, G::E2, G::E3}, 6}}, {{G::E2, G::E3}}, {}, make_locus({LP::E2, LP::E3})},
        {7, {{{G::H1, G::E1, G::E2}, 7}}, {{G::E1, G::E2}}, {}, make_locus({LP::E1, LP::E2})},
        {8, {{{G::H1, G::H2, G::E2}, 8}, {{G::H2, G::H3, G::E2}, 8}}, {{G::H1, G::E2}, {G::H3, G::E2}, {G::H2, G::E2}},
         {G::E2}, make_locus({LP::E2})},
    };
    return specs;
}

std::string ChamberReport::cell_name() const {
    if (cell == CellKind::interior) return "chamber " + std::to_string(chamber_id);
    std::string out = to_string(cell) + " ";
    for (std::size_t i = 0; i < cell_generators.size(); ++i) out += (i ? "-" : "") + to_string(cell_generators[i]);
    return out;
}

std::vector<int> accepting_regions(const DivisorClass& d) {
    RatVector h = checked_h(d);
    std::vector<CellHit> hits = locate_all(h);
    std::vector<int> out;
    for (const auto& region : region_specs())
        if (std::any_of(hits.begin(), hits.end(), [&](const CellHit& hit) { return owns(region, hit); }))
            out.push_back(region.id);
    return out;
}

ChamberReport classify(const DivisorClass& d) {
    RatVector h = checked_h(d);
    std::vector<CellHit> hits = locate_all(h);
    for (const auto& region : region_specs()) {
        for (const auto& hit : hits) {
            if (!owns(region, hit)) continue;
            ChamberReport r;
            r.chamber_id = region.id;
            r.cell = hit.kind;
            if (hit.kind != CellKind::interior) r.cell_generators = hit.gens;
            r.base_locus = region.base_locus;
            std::tie(r.model_label, r.model_claim) = model_label(region.id, r.cell, r.cell_generators, r.base_locus);
            if (r.cell == CellKind::wall && r.cell_generators == std::vector<Generator>{G::H1, G::H3})
                r.certificate = Certificate{"C1,2", pair(x3_curve("C1,2"), d)};
            if (r.cell == CellKind::ray && r.cell_generators[0] == G::P)
                r.note = "base locus on the P ray is not stated separately; the adjacent chamber 2 value is reported";
            return r;
        }
    }
    throw std::logic_error("effective class not covered by the chamber fan");
}

ChamberReport classify_segment(const Rat& t) {
    if (t < Rat(0) || t > Rat(1)) throw std::invalid_argument("segment parameter must lie in [0, 1]");
    return classify({3, DivisorBasis::H, {t, Rat(0), Rat(1) - t}});
}

Locus forced_base_loci(const DivisorClass& d) {
    static const std::vector<std::pair<std::string, LocusPart>> covers = {
        {"C1", LP::E1}, {"C1*", LP::E1}, {"C3", LP::E3}, {"C2", LP::E2}, {"L2", LP::E2}, {"C1,2", LP::E1capE3},
    };
    std::vector<LocusPart> parts;
    for (const auto& [curve, part] : covers)
        if (pair(x3_curve(curve), as_x3(d)).sign() < 0) parts.push_back(part);
    return make_locus(std::move(parts));
}

ChamberReport dual_report(const ChamberReport& r) {
    ChamberReport out = r;
    out.chamber_id = swap_chamber(r.chamber_id);
    std::vector<Generator> gens;
    for (Generator g : r.cell_generators) gens.push_back(swap_generator(g));
    out.cell_generators = sorted(gens);
    out.base_locus = dual_locus(r.base_locus);
    out.model_label = r.model_claim ? dual_label(r.model_label) : unclaimed_label(out.base_locus);
    return out;
}

bool same_report(const ChamberReport& a, const ChamberReport& b) {
    bool cert_same = a.certificate.has_value() == b.certificate.has_value() &&
                     (!a.certificate || (a.certificate->curve == b.certificate->curve &&
                                         a.certificate->pairing == b.certificate->pairing));
    return a.chamber_id == b.chamber_id && a.cell == b.cell && a.cell_generators == b.cell_generators &&
           a.base_locus == b.base_locus && a.model_label == b.model_label && a.model_claim == b.model_claim &&
           cert_same && a.note == b.note;
}

bool Census::ok() const {
    return samples > 0 && partition_failures == 0 && xi_failures == 0 && soundness_failures == 0 &&
           nef_failures == 0 && per_chamber.size() == 8;
}

Census chamber_census(std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("census needs at least one sample");
    Rng rng(seed);
    Census c;
    c.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) {
        RatVector e(3);
        do {
            for (auto& x : e) x = Rat(rng.uniform_int(0, 12));
        } while (e[0].is_zero() && e[1].is_zero() && e[2].is_zero());
        DivisorClass d{3, DivisorBasis::E, e};

        if (accepting_regions(d).size() != 1) {
            ++c.partition_failures;
            continue;
        }
        ChamberReport r = classify(d);
        ++c.per_chamber[r.chamber_id];
        (r.cell == CellKind::interior ? c.cells_interior : r.cell == CellKind::wall ? c.cells_wall : c.cells_ray)++;
        if (!same_report(classify(xi(d)), dual_report(r))) ++c.xi_failures;
        if (!locus_contains(r.base_locus, forced_base_loci(d))) ++c.soundness_failures;
        if (r.base_locus.empty() != cone_membership(d, Cone::nef).member) ++c.nef_failures;
    }
    return c;
}

Json to_json(const ChamberReport& r) {
    Json gens = Json::array();
    for (Generator g : r.cell_generators) gens.push_back(to_string(g));
    Json j = {{"chamber_id", r.chamber_id},
              {"cell", to_string(r.cell)},
              {"cell_name", r.cell_name()},
              {"generators", gens},
              {"base_locus", r.base_locus.to_string()},
              {"model_label", r.model_label},
              {"model_claim", r.model_claim}};
    j["certificate"] = r.certificate ? Json{{"curve", r.certificate->curve}, {"pairing", to_json(r.certificate->pairing)}}
                                     : Json(nullptr);
    j["note"] = r.note ? Json(*r.note) : Json(nullptr);
    return j;
}

Json to_json(const Census& c) {
    Json per = Json::object();
    for (const auto& [id, count] : c.per_chamber) per[std::to_string(id)] = count;
    return {{"samples", c.samples},
            {"per_chamber", per},
            {"cells", {{"interior", c.cells_interior}, {"wall", c.cells_wall}, {"ray", c.cells_ray}}},
            {"partition_failures", c.partition_failures},
            {"xi_failures", c.xi_failures},
            {"soundness_failures", c.soundness_failures},
            {"nef_failures", c.nef_failures},
            {"ok", c.ok()}};
}

} // namespace cquad
