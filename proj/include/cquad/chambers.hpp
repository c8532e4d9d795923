#pragma once

#include "cquad/picard.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cquad {

/// Irreducible pieces a stable base locus on X_3 is built from.
enum class LocusPart { E1, E2, E3, E1capE3 };

/// Stable base locus as a union of parts, kept sorted and without redundant
/// parts (E1 cap E3 is dropped when E1 or E3 is present).
struct Locus {
    std::vector<LocusPart> parts;

    bool empty() const { return parts.empty(); }
    std::string to_string() const;  ///< "empty", "E1", "E1 cap E3", "E1 cup E2", ...
    friend bool operator==(const Locus&, const Locus&) = default;
};

Locus make_locus(std::vector<LocusPart> parts);
/// Point-set containment: small is contained in big.
bool locus_contains(const Locus& big, const Locus& small);
/// Swaps E1 and E3.
Locus dual_locus(const Locus& l);

/// Named generators of the chamber fan, in H coordinates.
enum class Generator { H1, H2, H3, E1, E2, E3, P };
std::string to_string(Generator g);
RatVector generator_coeffs(Generator g);

enum class CellKind { interior, wall, ray };
std::string to_string(CellKind k);

/// A closed triangle of the fan, carrying the region its interior belongs to.
struct Triangle {
    std::array<Generator, 3> gens;
    int region;
};

/// A region of Eff(X_3): its triangles, and the open walls and rays it owns.
struct RegionSpec {
    int id;
    std::vector<Triangle> triangles;
    std::vector<std::array<Generator, 2>> walls;
    std::vector<Generator> rays;
    Locus base_locus;
};

const std::vector<RegionSpec>& region_specs();

struct Certificate {
    std::string curve;
    Rat pairing;
};

struct ChamberReport {
    int chamber_id = 0;
    CellKind cell = CellKind::interior;
    std::vector<Generator> cell_generators;  ///< empty for interiors
    Locus base_locus;
    std::string model_label;
    bool model_claim = false;  ///< true when the label names a birational model
    std::optional<Certificate> certificate;
    std::optional<std::string> note;

    std::string cell_name() const;  ///< "chamber 2", "wall H1-H3", "ray P"
};

/// Throws std::invalid_argument for n != 3, a zero class or a non-effective class.
ChamberReport classify(const DivisorClass& d);

/// Regions whose open cells contain d. A well-formed fan gives exactly one.
std::vector<int> accepting_regions(const DivisorClass& d);

/// t H1 + (1 - t) H3 for t in [0, 1]; the endpoints are the rays H1 and H3.
ChamberReport classify_segment(const Rat& t);

/// Loci forced into the base locus by covering curves meeting d negatively.
Locus forced_base_loci(const DivisorClass& d);

/// The report the duality xi should produce from r: E1 and E3 swapped in the
/// locus, chambers 3<->4 and 6<->7, dual model labels.
ChamberReport dual_report(const ChamberReport& r);
bool same_report(const ChamberReport& a, const ChamberReport& b);

struct Census {
    std::size_t samples = 0;
    std::map<int, std::size_t> per_chamber;
    std::size_t cells_interior = 0, cells_wall = 0, cells_ray = 0;
    std::size_t partition_failures = 0;  ///< points not accepted by exactly one region
    std::size_t xi_failures = 0;
    std::size_t soundness_failures = 0;
    std::size_t nef_failures = 0;  ///< empty locus disagreeing with nef membership

    bool ok() const;
};

/// Classifies seeded random effective classes and checks the fan invariants on each.
Census chamber_census(std::size_t samples, std::uint64_t seed);

Json to_json(const ChamberReport& r);
Json to_json(const Census& c);

} // namespace cquad
