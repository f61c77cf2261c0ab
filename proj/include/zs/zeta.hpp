#pragma once

#include <complex>

#include "zs/spectrum.hpp"

namespace zs {

using cplx = std::complex<double>;

enum class ZetaConvention { oriented, unoriented };

struct ZetaEvaluation {
    cplx value{};                 // log Z(s)
    double truncation_error_bound = 0;
    double l_max = 0;
    int k_max = 0;
    ZetaConvention convention = ZetaConvention::oriented;
    double abscissa = 1.0;        // convergence abscissa the evaluation relied on
    bool extended = false;        // true when below 1, certified only empirically
};

struct ZetaOptions {
    int k_max = -1;                   // < 0 selects the smallest k meeting target
    double target = 1e-14;            // absolute truncation target for auto k_max
    ZetaConvention convention = ZetaConvention::oriented;
    bool extended = false;            // permit Re s <= 1 via the counting fit
    bool allow_incomplete = false;
};

// Euler product over the spectrum:
//   log Z(s) = sum_gamma m_gamma sum_{k=0..k_max} log(1 - e^{-(s+k) l_gamma}).
// Converges for Re s above the abscissa (1 by default; the empirical counting
// exponent when `extended`).  The reported bound combines the k-tail and the
// length tail under N(t) <= C e^{delta t}.
ZetaEvaluation log_zeta(const LengthSpectrum& ls, cplx s, const ZetaOptions& opt = {});

// Single-geodesic closed form, entire in s.  Returns -inf real part at the
// zeros s = -k + 2 pi i n / l.  k_max < 0 selects automatically; valid for
// every complex s.
cplx log_zeta_cylinder(double l, cplx s, int k_max = -1);

// Long double variant of the closed form for high-precision runs.
std::complex<long double> log_zeta_cylinder_ld(long double l, std::complex<long double> s,
                                               int k_max = -1);

struct DeterminantParams {
    double F = 0;
    double G = 0;
};

// F = chi, G = -chi E: the normalization under which D(1) gives det Laplacian
// as e^G (2pi)^{-chi} Z(1).
DeterminantParams sarnak_params(int chi);

// log D(s) = F s(s-1) + G + log Z(s) + log Z_inf(s).
cplx log_det_D(const LengthSpectrum& ls, cplx s, const DeterminantParams& params,
               int chi, const ZetaOptions& opt = {});

} // namespace zs
