#pragma once

#include <complex>
#include <vector>

namespace zs {

using cplx = std::complex<double>;

// Digit strings below carry more precision than double so the same constants
// serve the long double instantiations.
inline constexpr long double kEulerGamma =
    0.5772156649015328606065120900824024310422L;
inline constexpr long double kLog2Pi =
    1.8378770664093454835606594728112352797228L;
// zeta'(-1); the unit tests re-derive this from scratch with an
// Euler-Maclaurin oracle.
inline constexpr long double kZetaPrimeMinusOne =
    -0.1654211437004509292139196602427806427635L;

inline double euler_gamma() { return static_cast<double>(kEulerGamma); }
inline double zeta_prime_minus_one() { return static_cast<double>(kZetaPrimeMinusOne); }

// -1/4 - (1/2) log 2pi + 2 zeta'(-1), the constant appearing in the
// det-of-Laplacian normalization e^{-chi E}.
double sarnak_constant_E();

template <class R> std::complex<R> digamma_t(std::complex<R> s);
template <class R> std::complex<R> log_gamma_t(std::complex<R> s);
template <class R> std::complex<R> log_barnes_gamma2_t(std::complex<R> s);

// log Z_inf(s) = -chi * (s log 2pi + 2 log Gamma_2(s) - log Gamma(s)).
// Returns 0 identically when chi == 0.
template <class R> std::complex<R> log_z_infinity_t(std::complex<R> s, int chi);

cplx digamma(cplx s);
cplx log_gamma(cplx s);
cplx log_barnes_gamma2(cplx s);
cplx log_z_infinity(cplx s, int chi);

// Large-s expansion of log Z_inf in u = s(s-1):
//   log Z_inf = c0 + c_ul * u log u + c_l * log u + c_u * u + sum_l t_l u^{-l}.
// Coefficients carry the chi factor already.
struct ExpansionCoefficients {
    int chi = 0;
    double constant = 0;
    double u_log_u = 0;
    double log_u = 0;
    double u_linear = 0;
    std::vector<double> tail; // t_1 .. t_n, divided by u^l at evaluation
};

ExpansionCoefficients z_infinity_expansion(int chi, int tail_terms);

struct AsymptoticValue {
    cplx value;
    double residual_bound;
};

// Evaluates the expansion at s (Re s >= 5 required) with tail_terms in 0..6
// and reports the first dropped tail magnitude as the residual bound.
AsymptoticValue z_infinity_asymptotics(cplx s, int chi, int tail_terms);

} // namespace zs
