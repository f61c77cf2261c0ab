#include "zs/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zs/errors.hpp"
#include "zs/numeric_util.hpp"
#include "zs/parallel.hpp"
#include "zs/special_functions.hpp"

namespace zs {

namespace {

// Smallest k with e^{-(sigma+k) l0} N / (1 - e^{-l0}) below target.
int auto_k_max(double sigma, double l0, double weighted_count, double target) {
    const double need =
        std::log(weighted_count / ((1.0 - std::exp(-l0)) * target)) / l0 - sigma;
    const int k = static_cast<int>(std::ceil(need));
    return std::clamp(k, 1, 20000);
}

template <class R>
std::complex<R> product_log_sum(const LengthSpectrum& ls, std::complex<R> s,
                                int k_max, bool oriented) {
    return parallel_sum(
        ls.classes.size(), 64, std::complex<R>(0), [&](std::size_t i) {
            const GeodesicClass& c = ls.classes[i];
            const R m = oriented ? R(c.oriented_multiplicity) : R(1);
            std::complex<R> x = std::exp(-s * R(c.length));
            const R ratio = std::exp(R(-c.length));
            std::complex<R> acc(0);
            for (int k = 0; k <= k_max; ++k) {
                acc += log1p_c(-x);
                x *= ratio;
                if (std::abs(x) < R(1e-320)) break;
            }
            return m * acc;
        });
}

} // namespace

ZetaEvaluation log_zeta(const LengthSpectrum& ls, cplx s, const ZetaOptions& opt) {
    if (!ls.complete && !opt.allow_incomplete)
        throw IncompleteSpectrum(
            "log_zeta: spectrum incomplete below its cutoff; enumeration was truncated");
    if (ls.classes.empty())
        throw EmptySpectrum("log_zeta: no geodesic classes below the cutoff");

    const double sigma = s.real();
    double abscissa = 1.0;
    bool extended = false;
    if (!(sigma > 1.0)) {
        if (!opt.extended)
            throw ConvergenceRegionError(
                "log_zeta: Re s <= 1 requires the extended-region option");
        abscissa = std::max(counting_exponent_fit(ls, 0.0), 0.0);
        extended = true;
        if (!(sigma > abscissa))
            throw ConvergenceRegionError(
                "log_zeta: Re s at or below the empirical counting exponent");
    }

    const bool oriented = opt.convention == ZetaConvention::oriented;
    const double l0 = ls.classes.front().length;
    double weighted = 0;
    for (const GeodesicClass& c : ls.classes)
        weighted += oriented ? c.oriented_multiplicity : 1;

    const int k_max = opt.k_max >= 0
                          ? opt.k_max
                          : auto_k_max(sigma, l0, weighted, opt.target);

    ZetaEvaluation ev;
    ev.value = product_log_sum<double>(ls, s, k_max, oriented);
    ev.k_max = k_max;
    ev.l_max = ls.cutoff;
    ev.convention = opt.convention;
    ev.abscissa = abscissa;
    ev.extended = extended;

    // k-tail: sum_gamma m e^{-(sigma+k_max+1) l} / ((1-e^{-l})(1-q)) bounds
    // the dropped factors via |log(1-x)| <= |x|/(1-|x|).
    const double q = std::exp(-(sigma + k_max + 1) * l0);
    double k_tail = 0;
    if (q < 1) {
        for (const GeodesicClass& c : ls.classes) {
            const double m = oriented ? c.oriented_multiplicity : 1;
            k_tail += m * std::exp(-(sigma + k_max + 1) * c.length) /
                      (1.0 - std::exp(-c.length));
        }
        k_tail /= 1.0 - q;
    } else {
        k_tail = std::numeric_limits<double>::infinity();
    }

    // Length tail under N(t) <= C e^{delta t}: each class of length t > L
    // contributes at most K0 e^{-sigma t}, and partial summation of the
    // counting bound gives C e^{(delta-sigma)L} (1 + sigma/(sigma-delta)).
    const double L = ls.cutoff;
    double C = 0, running = 0;
    for (const GeodesicClass& c : ls.classes) {
        running += oriented ? c.oriented_multiplicity : 1;
        C = std::max(C, running * std::exp(-abscissa * c.length));
    }
    const double K0 =
        1.0 / ((1.0 - std::exp(-sigma * L)) * (1.0 - std::exp(-L)));
    const double length_tail = K0 * C * std::exp((abscissa - sigma) * L) *
                               (1.0 + sigma / (sigma - abscissa));

    ev.truncation_error_bound = k_tail + length_tail;
    return ev;
}

namespace {

template <class R>
std::complex<R> cylinder_log_sum(R l, std::complex<R> s, int k_max) {
    if (!(l > 0)) throw InvalidLength("log_zeta_cylinder: length must be positive");
    if (k_max < 0)
        k_max = auto_k_max(double(s.real()), double(l), 2.0, 1e-14);
    std::complex<R> x = std::exp(-s * l);
    const R ratio = std::exp(-l);
    std::complex<R> acc(0);
    for (int k = 0; k <= k_max; ++k) {
        const std::complex<R> w = std::complex<R>(1) - x;
        if (std::abs(w) == R(0))
            return {-std::numeric_limits<R>::infinity(), 0};
        acc += log1p_c(-x);
        x *= ratio;
        if (std::abs(x) < R(1e-320) && s.real() + R(k) > R(1)) break;
    }
    return R(2) * acc;
}

} // namespace

cplx log_zeta_cylinder(double l, cplx s, int k_max) {
    return cylinder_log_sum<double>(l, s, k_max);
}

std::complex<long double> log_zeta_cylinder_ld(long double l,
                                               std::complex<long double> s,
                                               int k_max) {
    return cylinder_log_sum<long double>(l, s, k_max);
}

DeterminantParams sarnak_params(int chi) {
    return {double(chi), -double(chi) * sarnak_constant_E()};
}

cplx log_det_D(const LengthSpectrum& ls, cplx s, const DeterminantParams& params,
               int chi, const ZetaOptions& opt) {
    const ZetaEvaluation z = log_zeta(ls, s, opt);
    return params.F * s * (s - 1.0) + params.G + z.value + log_z_infinity(s, chi);
}

} // namespace zs
