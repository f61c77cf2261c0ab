#include "zs/huber.hpp"

#include <algorithm>
#include <cmath>

#include "zs/errors.hpp"
#include "zs/zeta.hpp"

namespace zs {

namespace {

// Single-class log product sum_k log(1 - e^{-(s+k)l}), truncated where the
// dropped terms fall below 1e-19 relative to the leading one.
double single_length_sum(double s, double l) {
    const int kk = std::min(4000, static_cast<int>(std::ceil(45.0 / l)) + 3);
    double x = std::exp(-s * l);
    const double ratio = std::exp(-l);
    double acc = 0;
    for (int k = 0; k <= kk; ++k) {
        acc += std::log1p(-x);
        x *= ratio;
        if (x < 1e-320) break;
    }
    return acc;
}

// |d/dl| of single_length_sum; every term of the derivative is positive.
double single_length_deriv(double s, double l) {
    const int kk = std::min(4000, static_cast<int>(std::ceil(45.0 / l)) + 3);
    double x = std::exp(-s * l);
    const double ratio = std::exp(-l);
    double acc = 0;
    for (int k = 0; k <= kk; ++k) {
        acc += (s + k) * x / (1.0 - x);
        x *= ratio;
        if (x < 1e-320) break;
    }
    return acc;
}

struct Entry {
    double length = 0;
    double mult = 0;
    double u_len = 1e-3;  // running length-uncertainty estimate
    double u_mult = 1e-2; // multiplicity uncertainty; 0 once snapped
    bool snapped = false;
};

struct Peeler {
    const std::function<double(double)>& raw;
    HuberOptions opt;
    double q0 = 0, q1 = 0, q2 = 0; // prefactor fit in v = (s - c) / w
    double c = 0, w = 1;
    double noise = 0;
    // Set once a detection pass runs dry: the sampler holds no further signal
    // above the gates, so refits may use low ray points freely.
    bool tail_exhausted = false;
    std::vector<Entry> found;

    double cleaned(double s) const {
        const double v = (s - c) / w;
        return raw(s) - (q0 + v * (q1 + v * q2));
    }

    double residual(double s, int skip) const {
        double r = cleaned(s);
        for (std::size_t j = 0; j < found.size(); ++j) {
            if (int(j) == skip) continue;
            r -= found[j].mult * single_length_sum(s, found[j].length);
        }
        return r;
    }

    // How badly the peeled models of the other entries can be off at s.
    double residue_bound(double s, int skip) const {
        double b = 0;
        for (std::size_t j = 0; j < found.size(); ++j) {
            if (int(j) == skip) continue;
            const Entry& e = found[j];
            b += std::abs(e.mult) * single_length_deriv(s, e.length) * e.u_len +
                 e.u_mult * std::abs(single_length_sum(s, e.length));
        }
        return b;
    }

    // Least-squares quadratic through 7 nodes at the top of the window, in a
    // centered variable so that extrapolation back to small s stays tame. A
    // pure log Z sampler fits to ~0 here; a polynomial prefactor is exact.
    void fit_prefactor() {
        constexpr int n = 7;
        const double lo = opt.s_hi - 6.0;
        c = 0.5 * (lo + opt.s_hi);
        w = 0.5 * (opt.s_hi - lo);
        double sv[5] = {0, 0, 0, 0, 0}; // sums of v^0..v^4
        double b0 = 0, b1 = 0, b2 = 0;
        double scale = 0;
        for (int i = 0; i < n; ++i) {
            const double s = lo + 6.0 * i / (n - 1);
            const double v = (s - c) / w;
            const double y = raw(s);
            scale = std::max(scale, std::abs(y));
            double p = 1;
            for (int d = 0; d <= 4; ++d, p *= v) sv[d] += p;
            b0 += y;
            b1 += y * v;
            b2 += y * v * v;
        }
        const double a11 = sv[0], a12 = sv[1], a13 = sv[2];
        const double a22 = sv[2], a23 = sv[3], a33 = sv[4];
        const double det = a11 * (a22 * a33 - a23 * a23) -
                           a12 * (a12 * a33 - a23 * a13) +
                           a13 * (a12 * a23 - a22 * a13);
        q0 = (b0 * (a22 * a33 - a23 * a23) - a12 * (b1 * a33 - a23 * b2) +
              a13 * (b1 * a23 - a22 * b2)) / det;
        q1 = (a11 * (b1 * a33 - b2 * a23) - b0 * (a12 * a33 - a23 * a13) +
              a13 * (a12 * b2 - b1 * a13)) / det;
        q2 = (a11 * (a22 * b2 - b1 * a23) - a12 * (a12 * b2 - b1 * a13) +
              b0 * (a12 * a23 - a22 * a13)) / det;
        // Extrapolating the centered quadratic to s_lo multiplies rounding
        // noise by roughly ((s_hi - s_lo)/w)^2.
        const double reach = (opt.s_hi - opt.s_lo) / w;
        noise = std::max(opt.sampler_precision, scale * 1e-15 * reach * reach);
    }

    // Ratio-matching solve for the length from ray points s1, s1+1.
    double solve_length(double s1, double guess, int skip) const {
        const double r1 = residual(s1, skip);
        const double r2 = residual(s1 + 1.0, skip);
        if (r1 == 0 || r2 / r1 <= 0) return guess;
        const double target = r2 / r1;
        auto h = [&](double l) {
            return single_length_sum(s1 + 1.0, l) / single_length_sum(s1, l) -
                   target;
        };
        double lo = std::max(1e-3, 0.7 * guess), hi = 1.3 * guess;
        double hlo = h(lo), hhi = h(hi);
        for (int grow = 0; grow < 8 && hlo * hhi > 0; ++grow) {
            lo *= 0.8;
            hi *= 1.2;
            hlo = h(lo);
            hhi = h(hi);
        }
        if (hlo * hhi > 0) return guess;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double hm = h(mid);
            if (hm == 0) return mid;
            if (hlo * hm <= 0) {
                hi = mid;
            } else {
                lo = mid;
                hlo = hm;
            }
        }
        return 0.5 * (lo + hi);
    }

    // Relative error budget for re-solving a length-l entry at ray point s:
    // sampler noise, the other entries' model residues, and a conservative
    // stand-in for everything not yet extracted (mass 4 at half a unit past
    // the longest known length), against the entry's own signal. No measured
    // residual enters here: a blended wrong model can zero the residual near
    // its own fit point and would bless itself.
    double objective(double s, double l, double m, int skip) const {
        const double sig = std::abs(m) * std::abs(single_length_sum(s, l));
        if (!(sig > 1e-300)) return 1e300;
        double cont = noise + residue_bound(s, skip);
        if (!tail_exhausted && !found.empty()) {
            double lmax = 0;
            for (const Entry& e : found) lmax = std::max(lmax, e.length);
            cont += 4.0 * std::abs(single_length_sum(s, lmax + 0.5));
        }
        return 2.0 * cont / sig;
    }

    double pick_s(double l, double m, int skip, double* obj_out) const {
        double best_s = -1, best_o = 1e300;
        for (double s = opt.s_lo; s <= opt.s_hi - 1.25; s += 0.25) {
            const double o = objective(s, l, m, skip);
            if (o < best_o) {
                best_o = o;
                best_s = s;
            }
        }
        if (obj_out) *obj_out = best_o;
        return best_s;
    }

    void snap(Entry& e) const {
        const double nearest = std::round(e.mult);
        e.snapped = std::abs(e.mult - nearest) <= 0.1 && nearest != 0;
        if (e.snapped) {
            e.mult = nearest;
            e.u_mult = 0;
        }
    }

    // Re-solve entry j against the residual with everything else subtracted.
    void refit(std::size_t j) {
        Entry& e = found[j];
        double obj = 0;
        const double s1 = pick_s(e.length, e.mult, int(j), &obj);
        if (s1 < 0 || obj > 0.2) return;
        const double l = solve_length(s1, e.length, int(j));
        const double m = residual(s1, int(j)) / single_length_sum(s1, l);
        const double delta = std::abs(l - e.length);
        e.length = l;
        e.mult = m;
        e.u_len = std::max({obj, 2.0 * delta, 0.25 * e.u_len, 1e-12});
        e.u_mult = std::abs(m) * obj + 1e-12;
        snap(e);
    }

    // Gauss-Seidel rounds over all entries until lengths stop moving.
    void refine_all(int max_rounds) {
        for (int round = 0; round < max_rounds; ++round) {
            double worst = 0;
            for (std::size_t j = 0; j < found.size(); ++j) {
                const double before = found[j].length;
                refit(j);
                worst = std::max(worst, std::abs(found[j].length - before));
            }
            if (worst < 5e-11) break;
        }
    }

    // Scan down the ray for a residual clearing the noise and residue gates;
    // returns false when nothing is left to detect.
    bool detect_new(Entry& out) const {
        for (double s = opt.s_hi - 1.25; s >= opt.s_lo - 1e-9; s -= 0.25) {
            const double r1 = residual(s, -1);
            const double gate = std::max(
                {30.0 * noise, 30.0 * residue_bound(s, -1), 1e-12});
            if (std::abs(r1) < gate) continue;
            const double r2 = residual(s + 1.0, -1);
            const double gate2 = std::max(
                {10.0 * noise, 10.0 * residue_bound(s + 1.0, -1), 3e-13});
            if (std::abs(r2) < gate2 || r2 / r1 <= 0) continue;
            const double l_rough = std::log(r1 / r2);
            if (!(l_rough > 1e-3) || l_rough > 30.0) continue;
            Entry e;
            e.length = l_rough;
            e.mult = r1 / single_length_sum(s, l_rough);
            e.u_len = 0.05 * (1.0 + l_rough);
            e.u_mult = 0.2 * std::abs(e.mult) + 0.01;
            snap(e);
            out = e;
            return true;
        }
        return false;
    }

    // A detection that refines onto an existing entry (or to negligible
    // mass) is that entry's peel residue, not a new length.
    bool is_artifact(std::size_t j) const {
        const Entry& e = found[j];
        if (std::abs(e.mult) < 0.05) return true;
        for (std::size_t i = 0; i < found.size(); ++i)
            if (i != j && std::abs(e.length - found[i].length) <
                              0.05 * (1.0 + found[i].length))
                return true;
        return false;
    }
};

} // namespace

HuberResult huber_extract_lengths(const std::function<double(double)>& sampler,
                                  int count, const HuberOptions& opt) {
    if (count < 1) throw InvalidInput("huber_extract_lengths: count must be >= 1");
    if (!(opt.s_lo > 0) || !(opt.s_hi > opt.s_lo + 8))
        throw InvalidInput("huber_extract_lengths: need 0 < s_lo < s_hi - 8");

    Peeler p{sampler, opt};
    p.fit_prefactor();

    // Extract a few entries past `count`: the extras soak up contamination
    // that would otherwise bias the requested lengths from below the tail.
    const std::size_t cap = std::size_t(count) + 3;
    int artifact_retries = 1;
    while (p.found.size() < cap) {
        Entry e;
        if (!p.detect_new(e)) {
            p.tail_exhausted = true;
            break;
        }
        p.found.push_back(e);
        p.refit(p.found.size() - 1);
        if (p.is_artifact(p.found.size() - 1)) {
            p.found.pop_back();
            if (artifact_retries-- > 0) {
                p.refine_all(2 * opt.sweeps);
                continue;
            }
            break; // cannot tell residue from signal any more
        }
        p.refine_all(opt.sweeps);
    }
    p.refine_all(3 * opt.sweeps);

    std::sort(p.found.begin(), p.found.end(),
              [](const Entry& a, const Entry& b) { return a.length < b.length; });

    HuberResult result;
    result.exhausted = p.found.size() < std::size_t(count);
    const std::size_t take = std::min(p.found.size(), std::size_t(count));
    for (std::size_t j = 0; j < take; ++j)
        result.entries.push_back(
            {p.found[j].length, p.found[j].mult, p.found[j].snapped});
    return result;
}

std::function<double(double)> make_spectrum_sampler(const LengthSpectrum& ls) {
    // The automatic k-cutoff only keeps the absolute truncation small, which
    // leaves percent-level relative error at large s. Peeling needs relative
    // accuracy across the whole ray, so pin the cutoff.
    ZetaOptions zopt;
    zopt.k_max = static_cast<int>(std::ceil(45.0 / systole(ls))) + 2;
    return [ls, zopt](double s) {
        return log_zeta(ls, cplx(s, 0), zopt).value.real();
    };
}

std::function<double(double)> make_cylinder_sampler(double l) {
    const int k_max = static_cast<int>(std::ceil(45.0 / l)) + 2;
    return [l, k_max](double s) {
        return log_zeta_cylinder(l, cplx(s, 0), k_max).real();
    };
}

} // namespace zs
