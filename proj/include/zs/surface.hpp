#pragma once

#include <string>
#include <vector>

#include "zs/moebius.hpp"
#include "zs/words.hpp"

namespace zs {

// Boundary lengths of a hyperbolic pair of pants.
struct PantsSpec {
    double l1 = 1.0, l2 = 1.0, l3 = 1.0;
};

// Convex co-compact hyperbolic surface given by a free isometry-group
// presentation, with signature (genus, funnel count) and the lengths of the
// funnel boundary geodesics. chi = 2 - 2*genus - funnel_count, except for the
// cylinder which is admitted as a degenerate model with chi = 0.
struct SurfaceModel {
    std::vector<MoebiusMap> generators;
    int genus = 0;
    int funnel_count = 0;
    std::vector<double> boundary_lengths;
    int chi = 0;
    std::string kind; // "cylinder", "pants" or "generators"
};

// One-generator model: diag(e^{l/2}, e^{-l/2}), chi = 0, two funnels of
// boundary length l, exactly one unoriented primitive geodesic.
SurfaceModel build_cylinder(double l);

// Two-generator presentation whose three boundary classes a, b, (ab)^{-1}
// have translation lengths l1, l2, l3. Built by the trace-parameter solve
// tr a = 2cosh(l1/2), tr b = 2cosh(l2/2), tr(ab) = -2cosh(l3/2); the
// construction is validated by round-trip length measurement, not trusted.
SurfaceModel build_pants(const PantsSpec& p);

// Surface from user-supplied unit-determinant matrices (row-major a,b,c,d).
SurfaceModel build_from_generators(const std::vector<MoebiusMap>& gens, int genus,
                                   int funnels);

struct ValidationReport {
    bool valid = false;
    int depth = 0;
    // Minimal translation length among all cyclically reduced words of length
    // <= depth; used by the enumerator as its (heuristic) pruning rate.
    double min_translation_length = 0.0;
    Word shortest_word;
};

// Checks that every cyclically reduced nontrivial word of length <= depth is
// hyperbolic. Throws NonHyperbolicElement naming the offending word.
ValidationReport validate_presentation(const SurfaceModel& s, int depth);

// Parses the JSON surface description
//   { "kind": "cylinder"|"pants"|"generators",
//     "lengths": [...], "matrices": [[a,b,c,d],...],
//     "genus": h, "funnels": M }
// Throws InvalidInput naming the offending field.
SurfaceModel surface_from_json_text(const std::string& text);
SurfaceModel surface_from_json_file(const std::string& path);

} // namespace zs
