#pragma once

#include <vector>

#include "zs/chart.hpp"

namespace zs {

// Positive-convention Laplace-Beltrami of phi on the chart, second-order
// conservative finite differences, periodic in theta. Edge t-rows are zero
// (the support contract keeps phi away from them).
std::vector<double> laplacian_tau(const ConformalFactor& cf);

// K_g = e^{-2 phi} (Delta phi - 1) pointwise; -1 off the support.
std::vector<double> curvature_g(const ConformalFactor& cf);

struct HeatInvariants {
    double a0 = 0;
    double a1 = 0;
    double a2 = 0;
    double quadrature_error = 0; // grid-doubling estimate, shared scale
};

// a0 = (1/4pi) int (e^{2 phi} - 1), a1 = (1/12pi) int Delta phi (zero up to
// quadrature error), a2 = (1/60pi) int (e^{2 phi} K^2 - 1); all integrands
// vanish off the support. Simpson in t, periodic trapezoid in theta; the
// error field is the max coarse-vs-fine difference across the three.
HeatInvariants heat_invariants(const ConformalFactor& cf);

// -(1/6pi) [ (1/2) int |grad phi|^2 - int phi ].
double polyakov_logD1(const ConformalFactor& cf);

struct JensenReport {
    double lhs = 0;  // int phi dtau
    double rhs = 0;  // (V/2) log(1 + 4 pi a0 / V)
    double area = 0; // the normalizing area V
    bool holds = true;
};

// Jensen-type bound with the probability measure taken on a region of area
// V = max(zero_area, measured support area); pass |2 pi chi| of the ambient
// surface as zero_area when known, 0 otherwise.
JensenReport jensen_bound_check(const ConformalFactor& cf, double zero_area = 0);

} // namespace zs
