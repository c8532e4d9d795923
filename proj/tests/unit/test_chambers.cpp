#include "cquad/chambers.hpp"

#include <doctest.h>

using namespace cquad;

namespace {

DivisorClass H(long a, long b, long c) { return {3, DivisorBasis::H, {Rat(a), Rat(b), Rat(c)}}; }

DivisorClass gen(Generator g) { return {3, DivisorBasis::H, generator_coeffs(g)}; }

Rat frac(long p, long q) { return Rat(BigInt(p), BigInt(q)); }

}  // namespace

TEST_SUITE("chambers") {

TEST_CASE("loci are normalized") {
    CHECK(make_locus({}).to_string() == "empty");
    CHECK(make_locus({LocusPart::E1capE3}).to_string() == "E1 cap E3");
    CHECK(make_locus({LocusPart::E3, LocusPart::E1capE3}) == make_locus({LocusPart::E3}));
    CHECK(make_locus({LocusPart::E2, LocusPart::E1}).to_string() == "E1 cup E2");
    CHECK(locus_contains(make_locus({LocusPart::E1}), make_locus({LocusPart::E1capE3})));
    CHECK_FALSE(locus_contains(make_locus({LocusPart::E2}), make_locus({LocusPart::E1capE3})));
    CHECK(dual_locus(make_locus({LocusPart::E1, LocusPart::E2})) == make_locus({LocusPart::E2, LocusPart::E3}));
}

TEST_CASE("worked examples") {
    ChamberReport r1 = classify(H(1, 1, 1));
    CHECK(r1.chamber_id == 1);
    CHECK(r1.cell == CellKind::interior);
    CHECK(r1.base_locus.empty());
    CHECK(r1.model_label == "X_3");
    CHECK(r1.model_claim);

    ChamberReport r2 = classify(H(1, 0, 1) + class_P());
    CHECK(r2.chamber_id == 2);
    CHECK(r2.base_locus.to_string() == "E1 cap E3");

    ChamberReport r7 = classify(divisor_E(3, 1) + divisor_E(3, 2));
    CHECK(r7.chamber_id == 7);
    CHECK(r7.base_locus.to_string() == "E1 cup E2");
    CHECK_FALSE(r7.model_claim);
}

TEST_CASE("each generator is a ray of the expected region") {
    std::vector<std::pair<Generator, int>> want = {{Generator::H1, 1}, {Generator::H2, 1}, {Generator::H3, 1},
                                                   {Generator::P, 2},  {Generator::E3, 3}, {Generator::E1, 4},
                                                   {Generator::E2, 8}};
    for (auto [g, region] : want) {
        ChamberReport r = classify(gen(g));
        INFO(to_string(g));
        CHECK(r.cell == CellKind::ray);
        CHECK(r.chamber_id == region);
        CHECK(r.cell_name() == "ray " + to_string(g));
    }
    CHECK(classify(gen(Generator::H2)).model_label == "Chow_2(1,X_3)");
    CHECK(classify(gen(Generator::P)).note.has_value());
}

TEST_CASE("the open H1-H3 segment lies on the flipping wall") {
    ChamberReport mid = classify_segment(frac(1, 2));
    CHECK(mid.cell == CellKind::wall);
    REQUIRE(mid.certificate);
    CHECK(mid.certificate->curve == "C1,2");
    CHECK(mid.certificate->pairing == Rat(0));
    CHECK(mid.base_locus.empty());
    for (Rat t : {frac(1, 3), frac(3, 4)}) CHECK(classify_segment(t).cell == CellKind::wall);
    CHECK(classify_segment(Rat(0)).cell_name() == "ray H3");
    CHECK(classify_segment(Rat(1)).cell_name() == "ray H1");
    CHECK_THROWS_AS(classify_segment(Rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(classify_segment(Rat(-1)), std::invalid_argument);
}

TEST_CASE("forced base loci come from negative covering curves") {
    CHECK(forced_base_loci(H(1, 1, 1)).empty());
    CHECK(forced_base_loci(divisor_E(3, 2)).to_string() == "E2");
    // C1,2 covers E1 cap E3 and meets P negatively
    CHECK(pair(x3_curve("C1,2"), class_P()) == Rat(-2));
    CHECK(forced_base_loci(class_P()).to_string() == "E1 cap E3");
    for (int region = 1; region <= 8; ++region)
        for (const auto& spec : region_specs())
            if (spec.id == region)
                for (const auto& tri : spec.triangles) {
                    DivisorClass c = gen(tri.gens[0]) + gen(tri.gens[1]) + gen(tri.gens[2]);
                    CHECK(locus_contains(classify(c).base_locus, forced_base_loci(c)));
                }
}

TEST_CASE("duality acts on the fan") {
    CHECK(classify(xi(divisor_E(3, 3))).chamber_id == 4);
    CHECK(classify(divisor_E(3, 2) + divisor_E(3, 3)).chamber_id == 6);
    CHECK(classify(xi(divisor_E(3, 2) + divisor_E(3, 3))).chamber_id == 7);
    ChamberReport r = classify(divisor_E(3, 2) + divisor_E(3, 3));
    CHECK(same_report(dual_report(r), classify(xi(divisor_E(3, 2) + divisor_E(3, 3)))));
    CHECK(same_report(dual_report(dual_report(r)), r));
}

TEST_CASE("regions partition the effective cone") {
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            for (long c = 0; c <= 4; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                DivisorClass d{3, DivisorBasis::E, {Rat(a), Rat(b), Rat(c)}};
                CHECK(accepting_regions(d).size() == 1);
            }
}

TEST_CASE("census over random effective classes") {
    Census c = chamber_census(2000, 71);
    CHECK(c.ok());
    CHECK(c.samples == 2000);
    CHECK(c.per_chamber.size() == 8);
    CHECK(c.cells_interior + c.cells_wall + c.cells_ray == 2000);
    Census again = chamber_census(2000, 71);
    CHECK(again.per_chamber == c.per_chamber);
}

TEST_CASE("classification rejects bad classes") {
    CHECK_THROWS_AS(classify(H(0, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(classify(H(-1, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(classify(divisor_H(4, 1)), std::invalid_argument);
}

TEST_CASE("report JSON") {
    Json j = to_json(classify(H(1, 0, 1) + class_P()));
    CHECK(j.at("chamber_id") == 2);
    CHECK(j.at("base_locus") == "E1 cap E3");
}

}  // TEST_SUITE
