#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zs/surface.hpp"

namespace zs {

// One unoriented primitive conjugacy class. word is the canonical
// representative (cyclically reduced, lexicographically minimal among the
// rotations of itself and of its inverse). oriented_multiplicity is 2 when
// the class differs from its inverse class, else 1.
struct GeodesicClass {
    Word word;
    double length = 0.0;
    bool primitive = true;
    int oriented_multiplicity = 2;
};

struct LengthSpectrum {
    std::vector<GeodesicClass> classes; // sorted by (length, word)
    double cutoff = 0.0;
    bool complete = false;
    // Heuristic pruning rate: every cyclically reduced word of length n is
    // assumed to have geodesic length >= n * pruning_rate. Exact for the
    // cylinder; cross-checked against brute force for the pants test cases.
    double pruning_rate = 0.0;
};

struct EnumerateOptions {
    // Hard cap on examined words; exceeding it returns complete = false.
    std::uint64_t word_budget = 20'000'000;
    // Word length whose classes seed the pruning rate estimate.
    int validation_depth = 2;
};

// All unoriented primitive conjugacy classes of geodesic length <= l_max,
// each exactly once, sorted by (length, canonical word).
LengthSpectrum enumerate_spectrum(const SurfaceModel& s, double l_max,
                                  const EnumerateOptions& opt = {});

// Minimum length; throws EmptySpectrum when there are no classes.
double systole(const LengthSpectrum& ls);

struct CountingResult {
    std::int64_t count = 0; // N(t), classes weighted by oriented_multiplicity
    // Smallest C with N(t_i) <= C e^{t_i} over the sampled t_i (the class
    // lengths up to t).
    double exponential_fit_C = 0.0;
};

// N(t) with the exponential-bound fit. Throws CutoffExceeded if t > cutoff.
CountingResult counting_function(const LengthSpectrum& ls, double t);

// Least-squares slope of log N(t) against t over the class lengths; used to
// gate extended-region zeta evaluation. Requires at least two distinct
// lengths, else returns fallback.
double counting_exponent_fit(const LengthSpectrum& ls, double fallback);

// CSV columns: word,length,primitive,oriented_multiplicity. Lengths printed
// with 15 significant digits.
void write_spectrum_csv(std::ostream& out, const LengthSpectrum& ls);

} // namespace zs
