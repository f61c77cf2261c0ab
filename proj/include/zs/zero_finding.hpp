#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace zs {

using cplx = std::complex<double>;

struct Rect {
    double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
    double width() const { return re_hi - re_lo; }
    double height() const { return im_hi - im_lo; }
};

struct LocatedZero {
    cplx location;
    int multiplicity = 0;
};

// All zeros of f inside rect, found by argument-principle winding counts on
// recursively subdivided rectangles and polished by multiplicity-aware
// Newton steps. f must be analytic on the closed rectangle with no zero on
// the boundary. Results are sorted by (Re, Im); total multiplicity equals
// the winding number of the full contour.
//
// Throws BoundaryZero when the boundary (or, after retries, every attempted
// internal cut) passes through a zero; NonConvergence when winding data is
// inconsistent or refinement fails.
std::vector<LocatedZero> find_zeros(const std::function<cplx(cplx)>& f, Rect rect,
                                    double tol = 1e-10);

} // namespace zs
