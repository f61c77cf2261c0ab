#pragma once

#include <functional>
#include <vector>

#include "zs/spectrum.hpp"

namespace zs {

struct PeeledLength {
    double length = 0;
    double multiplicity = 0;
    // True when the fitted multiplicity fell within 0.1 of an integer and was
    // rounded; false leaves the fractional estimate (caller should warn).
    bool integer_multiplicity = false;
};

struct HuberResult {
    std::vector<PeeledLength> entries; // ascending lengths
    // True when the residual fell below the sampler precision before `count`
    // entries were extracted; entries then hold the partial list.
    bool exhausted = false;
};

struct HuberOptions {
    double sampler_precision = 1e-13;
    double s_lo = 2.0;  // smallest ray point the sampler may be asked for
    double s_hi = 46.0; // top of the scan and the prefactor-fit window
    int sweeps = 4;     // refinement passes over the extracted entries
};

// Recovers leading (length, multiplicity) pairs from samples of log Z (or of
// log of e^{q(s)} Z for a polynomial prefactor q, which is fitted at large s
// and removed) on a real ray. Peels entries in order of increasing length:
// a rough length from the log-slope of the residual, refined by matching the
// ratio of the residual at two ray points against the single-length model
// S(s,l) = sum_k log(1 - e^{-(s+k)l}), then multiplicity from the quotient.
HuberResult huber_extract_lengths(const std::function<double(double)>& sampler,
                                  int count, const HuberOptions& opt = {});

// Samplers for the round-trip experiments.
std::function<double(double)> make_spectrum_sampler(const LengthSpectrum& ls);
std::function<double(double)> make_cylinder_sampler(double l);

} // namespace zs
