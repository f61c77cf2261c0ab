#pragma once

#include <cmath>
#include <complex>

namespace zs {

// log(1+w) for complex w, series-expanded when w is small enough that the
// literal 1+w would lose the low bits, and corrected for the rounding of
// 1+w at moderate |w| (Kahan's trick; the raw form loses eps/|w| relative
// accuracy, which matters when the caller multiplies the result back up).
template <class R>
std::complex<R> log1p_c(std::complex<R> w) {
    if (std::abs(w) < R(1e-3)) {
        std::complex<R> sum(0);
        std::complex<R> p = w;
        for (int j = 1; j <= 8; ++j) {
            sum += p / R(j) * R(j % 2 ? 1 : -1);
            p *= w;
        }
        return sum;
    }
    const std::complex<R> u = std::complex<R>(1) + w;
    if (std::abs(w) < R(0.5) && u != std::complex<R>(1)) {
        // u - 1 recovers the rounded w exactly here, so the factor
        // w / (u - 1) cancels the formation error of 1 + w.
        return std::log(u) * (w / (u - std::complex<R>(1)));
    }
    return std::log(u);
}

// exp(w) - 1 with the same small-argument care.
template <class R>
std::complex<R> expm1_c(std::complex<R> w) {
    if (std::abs(w) < R(1e-3)) {
        std::complex<R> sum(0);
        std::complex<R> p = w;
        R fact = 1;
        for (int j = 1; j <= 8; ++j) {
            fact *= R(j);
            sum += p / fact;
            p *= w;
        }
        return sum;
    }
    return std::exp(w) - std::complex<R>(1);
}

} // namespace zs
