#pragma once

#include <functional>

#include "zs/surface.hpp"

namespace zs {

struct FinitePartResult {
    double value = 0;     // constant term c0: the finite part
    double c_inverse = 0; // coefficient of 1/eps
    double c_log = 0;     // coefficient of log eps
    double c_linear = 0;  // coefficient of eps
    double fit_residual = 0;
};

struct FinitePartOptions {
    int i_min = 2;  // ladder eps_i = 2^{-i}, i = i_min .. i_max
    int i_max = 14;
    int n_t = 4096; // Simpson intervals per truncated integral
    int n_theta = 64;
    double residual_tol = 1e-5;
};

// Hadamard finite part of the funnel integral of f against the area measure,
// with defining function rho = e^{-t}: the truncated integrals over rho >= eps
// (that is, t <= ln 1/eps) are fitted against {1/eps, log eps, 1, eps} and the
// constant term returned. Throws ExpansionMismatch when the fit residual
// exceeds tolerance (the function does not follow that expansion).
FinitePartResult finite_part_integral(const std::function<double(double, double)>& f,
                                      double l, const FinitePartOptions& opt = {});

// 0-volume of the surface: core area -2 pi chi by Gauss-Bonnet plus the
// fitted 0-volume of each funnel (exactly zero in exact arithmetic).
double zero_volume(const SurfaceModel& s);

} // namespace zs
