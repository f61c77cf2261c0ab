#include "zs/special_functions.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "zs/errors.hpp"
#include "zs/numeric_util.hpp"

namespace zs {

namespace {

template <class R>
void check_gamma_pole(std::complex<R> s, const char* fn) {
    const R re = s.real();
    if (std::abs(s.imag()) < R(1e-12) && re < R(0.5) &&
        std::abs(re - std::round(double(re))) < R(1e-12)) {
        throw PoleAtNonpositiveInteger(std::string(fn) +
                                       ": pole at nonpositive integer");
    }
}

} // namespace

template <class R>
std::complex<R> digamma_t(std::complex<R> s) {
    check_gamma_pole(s, "digamma");
    std::complex<R> acc(0);
    while (s.real() < R(12)) {
        acc -= std::complex<R>(1) / s;
        s += std::complex<R>(1);
    }
    // psi(s) = log s - 1/(2s) - sum_r B_{2r} / (2r s^{2r})
    static const long double c[] = {1.0L / 12,  -1.0L / 120,      1.0L / 252,
                                    -1.0L / 240, 1.0L / 132,      -691.0L / 32760,
                                    1.0L / 12,  -3617.0L / 8160};
    const std::complex<R> inv = std::complex<R>(1) / s;
    const std::complex<R> inv2 = inv * inv;
    std::complex<R> p = inv2;
    std::complex<R> tail(0);
    for (long double cr : c) {
        tail += R(cr) * p;
        p *= inv2;
    }
    return acc + std::log(s) - inv / R(2) - tail;
}

template <class R>
std::complex<R> log_gamma_t(std::complex<R> s) {
    check_gamma_pole(s, "log_gamma");
    std::complex<R> acc(0);
    while (s.real() < R(12)) {
        acc -= std::log(s);
        s += std::complex<R>(1);
    }
    // Stirling: (s - 1/2) log s - s + log(2pi)/2 + sum_r B_{2r}/(2r(2r-1) s^{2r-1})
    static const long double c[] = {1.0L / 12,   -1.0L / 360,       1.0L / 1260,
                                    -1.0L / 1680, 1.0L / 1188,      -691.0L / 360360,
                                    1.0L / 156,  -3617.0L / 122400};
    const std::complex<R> inv = std::complex<R>(1) / s;
    const std::complex<R> inv2 = inv * inv;
    std::complex<R> p = inv;
    std::complex<R> tail(0);
    for (long double cr : c) {
        tail += R(cr) * p;
        p *= inv2;
    }
    return acc + (s - std::complex<R>(R(0.5))) * std::log(s) - s +
           R(kLog2Pi) / R(2) + tail;
}

// log Gamma_2 via the Weierstrass product of the Barnes G-function,
//   log G(1+z) = (z/2) log 2pi - z/2 - (1+gamma) z^2/2
//              + sum_k [ k log(1+z/k) - z + z^2/(2k) ],
// with Gamma_2 = 1/G.  The product is summed directly to K ~ max(200, 2|z|)
// and the remainder handled by Euler-Maclaurin on t(x) = x log(1+z/x) - z
// + z^2/(2x), whose antiderivative is ((x^2-z^2)/2) log(1+z/x) - zx/2.
template <class R>
std::complex<R> log_barnes_gamma2_t(std::complex<R> s) {
    check_gamma_pole(s, "log_barnes_gamma2");
    const std::complex<R> z = s - std::complex<R>(1);
    const std::complex<R> z2 = z * z;

    const std::size_t K =
        std::max<std::size_t>(200, std::size_t(2 * std::abs(z)) + 32);
    std::complex<R> head(0);
    for (std::size_t k = 1; k <= K; ++k) {
        const R rk = R(k);
        head += rk * log1p_c(z / rk) - z + z2 / (R(2) * rk);
    }

    const R a = R(K + 1);
    const std::complex<R> za = z + a;
    const std::complex<R> la = log1p_c(z / a);
    const std::complex<R> integral =
        -z2 / R(4) - (a * a - z2) / R(2) * la + z / R(2) * a;
    const std::complex<R> t0 = a * la - z + z2 / (R(2) * a);
    const std::complex<R> t1 = la - z / za - z2 / (R(2) * a * a);
    const std::complex<R> t3 = -R(1) / (za * za) - R(2) * z / (za * za * za) +
                               R(1) / (a * a) - R(3) * z2 / (a * a * a * a);
    const std::complex<R> za4 = za * za * za * za;
    const R a4 = a * a * a * a;
    const std::complex<R> t5 = -R(6) / za4 - R(24) * z / (za4 * za) +
                               R(6) / a4 - R(60) * z2 / (a4 * a * a);
    head += integral + t0 / R(2) - t1 / R(12) + t3 / R(720) - t5 / R(30240);

    const std::complex<R> logG = z / R(2) * R(kLog2Pi) - z / R(2) -
                                 (R(1) + R(kEulerGamma)) / R(2) * z2 + head;
    return -logG;
}

template <class R>
std::complex<R> log_z_infinity_t(std::complex<R> s, int chi) {
    if (chi == 0) return std::complex<R>(0);
    const std::complex<R> body =
        s * R(kLog2Pi) + R(2) * log_barnes_gamma2_t(s) - log_gamma_t(s);
    return -R(chi) * body;
}

template std::complex<double> digamma_t<double>(std::complex<double>);
template std::complex<double> log_gamma_t<double>(std::complex<double>);
template std::complex<double> log_barnes_gamma2_t<double>(std::complex<double>);
template std::complex<double> log_z_infinity_t<double>(std::complex<double>, int);
template std::complex<long double> digamma_t<long double>(std::complex<long double>);
template std::complex<long double> log_gamma_t<long double>(std::complex<long double>);
template std::complex<long double> log_barnes_gamma2_t<long double>(std::complex<long double>);
template std::complex<long double> log_z_infinity_t<long double>(std::complex<long double>, int);

cplx digamma(cplx s) { return digamma_t<double>(s); }
cplx log_gamma(cplx s) { return log_gamma_t<double>(s); }
cplx log_barnes_gamma2(cplx s) { return log_barnes_gamma2_t<double>(s); }
cplx log_z_infinity(cplx s, int chi) { return log_z_infinity_t<double>(s, chi); }

double sarnak_constant_E() {
    return static_cast<double>(-0.25L - kLog2Pi / 2 + 2 * kZetaPrimeMinusOne);
}

namespace {

// u^{-l} tail of the large-s expansion, fitted by collocation against
// log Z_inf itself at high precision; the first four round to -1/30, 2/315,
// -1/315, 4/1155.
const double kTail[] = {
    -1.0 / 30, 2.0 / 315, -1.0 / 315, 4.0 / 1155,
    -0.006784326784326784, 0.020601620601620602,
};
// Magnitude of the next (seventh) coefficient, used for the residual bound.
const double kTailNextMag[] = {
    1.0 / 30, 2.0 / 315, 1.0 / 315, 4.0 / 1155,
    0.006784326784326784, 0.020601620601620602, 0.0888,
};

double expansion_constant() {
    return static_cast<double>(kLog2Pi / 2 + 0.25L - 2 * kZetaPrimeMinusOne);
}

} // namespace

ExpansionCoefficients z_infinity_expansion(int chi, int tail_terms) {
    if (tail_terms < 0 || tail_terms > 6)
        throw InvalidInput("z_infinity_expansion: tail_terms must be in 0..6");
    ExpansionCoefficients c;
    c.chi = chi;
    c.constant = -chi * expansion_constant();
    c.u_log_u = chi * 0.5;
    c.log_u = chi / 6.0;
    c.u_linear = -chi * 1.5;
    for (int l = 0; l < tail_terms; ++l) c.tail.push_back(-chi * kTail[l]);
    return c;
}

AsymptoticValue z_infinity_asymptotics(cplx s, int chi, int tail_terms) {
    if (s.real() < 5.0)
        throw DomainError("z_infinity_asymptotics: requires Re s >= 5");
    if (tail_terms < 0 || tail_terms > 6)
        throw InvalidInput("z_infinity_asymptotics: tail_terms must be in 0..6");
    const cplx u = s * (s - 1.0);
    const cplx lu = std::log(u);
    cplx g = expansion_constant() + 1.5 * u - (0.5 * u + 1.0 / 6.0) * lu;
    cplx upow = 1.0 / u;
    for (int l = 0; l < tail_terms; ++l) {
        g += kTail[l] * upow;
        upow /= u;
    }
    const cplx value = -double(chi) * g;
    // Truncation residual plus a roundoff floor: at deep tails the stated
    // |u|^{-(l+1)} term drops below what double arithmetic can resolve on a
    // value of this size.
    const double bound = 2.0 * std::abs(chi) * kTailNextMag[tail_terms] /
                             std::pow(std::abs(u), tail_terms + 1) +
                         8.0 * std::numeric_limits<double>::epsilon() *
                             std::abs(value);
    return {value, chi == 0 ? 0.0 : bound};
}

} // namespace zs
