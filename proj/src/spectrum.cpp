#include "zs/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

namespace zs {

LengthSpectrum enumerate_spectrum(const SurfaceModel& s, double l_max,
                                  const EnumerateOptions& opt) {
    if (!(l_max > 0.0)) throw InvalidInput("enumeration cutoff must be positive");
    int g = static_cast<int>(s.generators.size());
    ValidationReport val = validate_presentation(s, std::max(1, opt.validation_depth));

    LengthSpectrum ls;
    ls.cutoff = l_max;
    ls.pruning_rate = val.min_translation_length;
    ls.complete = true;

    // Words longer than n_max cannot (per the pruning heuristic) be shorter
    // than l_max. A tiny slack absorbs rounding of the rate itself.
    int n_max = static_cast<int>(std::floor(l_max / ls.pruning_rate + 1e-9));

    std::map<Word, GeodesicClass> classes;
    std::uint64_t examined = 0;
    for (int n = 1; n <= n_max && ls.complete; ++n) {
        for_each_cyclic_word(g, n, [&](const Word& w) {
            if (++examined > opt.word_budget) {
                ls.complete = false;
                return false;
            }
            // Keep only canonical representatives so each unoriented class is
            // seen exactly once.
            Word canon = canonical_class(w);
            if (canon != w) return true;
            if (!is_primitive(w)) return true;
            double l = translation_length(word_matrix(w, s.generators));
            if (l > l_max + 1e-12) return true;
            GeodesicClass c;
            c.word = w;
            c.length = l;
            c.primitive = true;
            c.oriented_multiplicity = (least_rotation(w) == least_rotation(inverse_word(w))) ? 1 : 2;
            classes.emplace(w, std::move(c));
            return true;
        });
    }

    ls.classes.reserve(classes.size());
    for (auto& [w, c] : classes) ls.classes.push_back(std::move(c));
    std::sort(ls.classes.begin(), ls.classes.end(),
              [](const GeodesicClass& a, const GeodesicClass& b) {
                  if (a.length != b.length) return a.length < b.length;
                  return a.word < b.word;
              });
    return ls;
}

double systole(const LengthSpectrum& ls) {
    if (ls.classes.empty()) throw EmptySpectrum("length spectrum has no classes");
    return ls.classes.front().length;
}

CountingResult counting_function(const LengthSpectrum& ls, double t) {
    if (t > ls.cutoff)
        throw CutoffExceeded("counting requested at t = " + std::to_string(t) +
                             " beyond cutoff " + std::to_string(ls.cutoff));
    CountingResult r;
    double best_c = 0.0;
    std::int64_t n = 0;
    for (const GeodesicClass& c : ls.classes) {
        if (c.length > t) break;
        n += c.oriented_multiplicity;
        best_c = std::max(best_c, static_cast<double>(n) * std::exp(-c.length));
    }
    r.count = n;
    r.exponential_fit_C = best_c;
    return r;
}

double counting_exponent_fit(const LengthSpectrum& ls, double fallback) {
    // Cumulative oriented count at each distinct length, then least squares
    // of log N against t.
    std::vector<std::pair<double, double>> pts; // (t, log N)
    std::int64_t n = 0;
    for (std::size_t i = 0; i < ls.classes.size(); ++i) {
        n += ls.classes[i].oriented_multiplicity;
        if (i + 1 < ls.classes.size() && ls.classes[i + 1].length == ls.classes[i].length)
            continue;
        pts.emplace_back(ls.classes[i].length, std::log(static_cast<double>(n)));
    }
    if (pts.size() < 2) return fallback;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = pts.size();
    double denom = m * sxx - sx * sx;
    if (denom <= 0.0) return fallback;
    return (m * sxy - sx * sy) / denom;
}

void write_spectrum_csv(std::ostream& out, const LengthSpectrum& ls) {
    out << "word,length,primitive,oriented_multiplicity\n";
    char buf[64];
    for (const GeodesicClass& c : ls.classes) {
        std::snprintf(buf, sizeof buf, "%.15g", c.length);
        out << word_to_string(c.word) << ',' << buf << ','
            << (c.primitive ? 1 : 0) << ',' << c.oriented_multiplicity << '\n';
    }
}

} // namespace zs
