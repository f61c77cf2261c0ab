#include "zs/moebius.hpp"

#include <cmath>
#include <string>

namespace zs {

MoebiusMap normalized(const MoebiusMap& m) {
    double det = m.det();
    if (!(det > 0.0))
        throw InvalidInput("matrix determinant must be positive, got " + std::to_string(det));
    if (std::abs(det - 1.0) > 1e-9)
        throw InvalidInput("matrix determinant " + std::to_string(det) +
                           " is too far from 1 to normalize");
    double s = 1.0 / std::sqrt(det);
    return {m.a * s, m.b * s, m.c * s, m.d * s};
}

double translation_length(const MoebiusMap& m) {
    double half_tr = std::abs(m.trace()) / 2.0;
    if (half_tr <= 1.0)
        throw NonHyperbolicElement("element with |trace| = " +
                                   std::to_string(2.0 * half_tr) + " is not hyperbolic");
    return 2.0 * std::acosh(half_tr);
}

} // namespace zs
