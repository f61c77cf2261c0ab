#pragma once

#include <complex>
#include <string>
#include <vector>

namespace zs {

using cplx = std::complex<double>;

struct ResonancePoint {
    cplx zeta;
    int m = 1;
};

struct ResonanceSet {
    std::vector<ResonancePoint> points;
    // 0 means the set is exact/finite; > 0 records that points with
    // |zeta| > truncation_radius were dropped.
    double truncation_radius = 0;

    // Merge within 1e-10 of an existing point (multiplicities add).
    void insert(cplx z, int m);
    // Total multiplicity with |zeta| <= r.
    long long count_within(double r) const;
};

// {-k + 2 pi i n / l : 0 <= k <= k_max, |n| <= n_max}. Multiplicities are the
// zeta-zero orders under the oriented convention (2 at every lattice point);
// the resolvent multiplicities are only known to be supported inside this set.
ResonanceSet cylinder_resonances(double l, int k_max, int n_max);

struct CountingFit {
    double exponent = 0;   // least-squares slope of log N(r) vs log r
    double quad_coeff = 0; // a in N(r) ~ a r^2, least squares
};

CountingFit resonance_counting_fit(const ResonanceSet& rs, double r_min,
                                   double r_max, int samples);

// log of  prod (1 - s/zeta)^m exp(m(-s/zeta + s^2/(2 zeta^2)))  over the set.
// Throws ZeroDivision if some zeta = 0.
cplx hadamard_log_P(const ResonanceSet& rs, cplx s);

// Estimate of the canonical-product remainder beyond the truncation radius:
// sum over |zeta| > R of m |log(1-s/zeta) + s/zeta + s^2/(2 zeta^2)| under the
// quadratic counting fit. The linear cross-term of the stored convention is
// not included; for the model sets it cancels in conjugate pairs. 0 for
// finite sets; requires R >= 2|s|.
double hadamard_tail_bound(const ResonanceSet& rs, cplx s, double quad_coeff);

std::string resonances_to_json(const ResonanceSet& rs, int digits = 17);
ResonanceSet resonances_from_json(const std::string& text);

} // namespace zs
