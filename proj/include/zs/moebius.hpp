#pragma once

#include <cmath>

#include "zs/errors.hpp"

namespace zs {

// Real 2x2 unit-determinant matrix acting as an isometry of the hyperbolic
// plane. Hyperbolic iff |trace| > 2; such an element translates along its
// axis by 2*arccosh(|trace|/2).
struct MoebiusMap {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    bool is_hyperbolic() const { return std::abs(trace()) > 2.0; }

    MoebiusMap inverse() const { return {d, -b, -c, a}; }

    friend MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

// Rescales so that det = 1 exactly (up to rounding). Throws InvalidInput if
// the determinant is not positive or is further than 1e-9 from 1 before
// normalization (the tolerance accepted for user-supplied matrices).
MoebiusMap normalized(const MoebiusMap& m);

// Translation length 2*arccosh(|tr|/2) of a hyperbolic element. Conjugation-
// and inversion-invariant. Throws NonHyperbolicElement if |tr| <= 2.
double translation_length(const MoebiusMap& m);

} // namespace zs
