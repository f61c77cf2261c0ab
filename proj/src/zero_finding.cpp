#include "zs/zero_finding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "zs/errors.hpp"

namespace zs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxStepArg = std::numbers::pi / 2;
constexpr int kEdgeDepthCap = 52;
constexpr int kRectDepthCap = 200;

// Internal signal: the contour ran into (or could not be tracked past) a
// zero at `at`. Converted to BoundaryZero at the user-facing boundary and
// into a shifted-cut retry at internal subdivision lines.
struct CutZero {
    cplx at;
};

using Fn = std::function<cplx(cplx)>;

struct Accum {
    double total_arg = 0;
    cplx moment{0, 0}; // contour integral of s dlog f
};

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void walk_edge(const Fn& f, cplx a, cplx fa, cplx b, cplx fb, int depth,
               double h_max, Accum& acc) {
    if (!finite(fa) || !finite(fb))
        throw NonConvergence("find_zeros: function not finite on the contour");
    if (std::abs(fa) == 0.0) throw CutZero{a};
    if (std::abs(fb) == 0.0) throw CutZero{b};
    const cplx r = fb / fa;
    const double da = std::arg(r);
    if (std::abs(da) <= kMaxStepArg && std::abs(b - a) <= h_max) {
        acc.total_arg += da;
        acc.moment += 0.5 * (a + b) * std::log(r);
        return;
    }
    if (depth >= kEdgeDepthCap) throw CutZero{0.5 * (a + b)};
    const cplx m = 0.5 * (a + b);
    const cplx fm = f(m);
    walk_edge(f, a, fa, m, fm, depth + 1, h_max, acc);
    walk_edge(f, m, fm, b, fb, depth + 1, h_max, acc);
}

Accum walk_boundary(const Fn& f, const Rect& r) {
    const cplx c0(r.re_lo, r.im_lo), c1(r.re_hi, r.im_lo);
    const cplx c2(r.re_hi, r.im_hi), c3(r.re_lo, r.im_hi);
    const double h_max = std::max(r.width(), r.height()) / 128.0;
    const cplx f0 = f(c0), f1 = f(c1), f2 = f(c2), f3 = f(c3);
    Accum acc;
    walk_edge(f, c0, f0, c1, f1, 0, h_max, acc);
    walk_edge(f, c1, f1, c2, f2, 0, h_max, acc);
    walk_edge(f, c2, f2, c3, f3, 0, h_max, acc);
    walk_edge(f, c3, f3, c0, f0, 0, h_max, acc);
    return acc;
}

int winding_of(const Accum& acc) {
    const double w = acc.total_arg / kTwoPi;
    const int n = static_cast<int>(std::lround(w));
    if (std::abs(w - n) > 0.25)
        throw NonConvergence("find_zeros: winding integral far from an integer");
    return n;
}

cplx clamp_into(cplx z, const Rect& r) {
    return {std::clamp(z.real(), r.re_lo, r.re_hi),
            std::clamp(z.imag(), r.im_lo, r.im_hi)};
}

std::optional<cplx> newton_refine(const Fn& f, cplx seed, int mult,
                                  const Rect& r, double tol) {
    const double span = std::max(r.width(), r.height());
    cplx x = clamp_into(seed, r);
    for (int it = 0; it < 100; ++it) {
        const double h = 1e-7 * (1.0 + std::abs(x));
        const cplx fx = f(x);
        if (!finite(fx)) return std::nullopt;
        if (std::abs(fx) == 0.0) return x;
        const cplx fp = (f(x + h) - f(x - h)) / (2.0 * h);
        if (!finite(fp) || std::abs(fp) == 0.0) return std::nullopt;
        const cplx step = -double(mult) * fx / fp;
        x += step;
        if (x.real() < r.re_lo - 2 * span || x.real() > r.re_hi + 2 * span ||
            x.imag() < r.im_lo - 2 * span || x.imag() > r.im_hi + 2 * span)
            return std::nullopt;
        if (std::abs(step) <= 0.25 * tol) return x;
    }
    return std::nullopt;
}

// Cut offsets tried when a subdivision line lands on a zero. Irrational
// fractions keep the cuts off the symmetry axes of lattice-like zero sets
// (an even-order zero sitting exactly on a cut produces no phase jump along
// it and would silently split its winding between the two halves).
constexpr double kCutOffsets[] = {0.5299590419, 0.4700409581, 0.5773502692,
                                  0.4226497308, 0.6180339887, 0.3819660113,
                                  0.6563462370, 0.3436537630};

void solve(const Fn& f, const Rect& rect, double tol, int depth,
           std::vector<LocatedZero>& out) {
    if (depth > kRectDepthCap)
        throw NonConvergence("find_zeros: subdivision depth exhausted");
    const Accum acc = walk_boundary(f, rect);
    const int w = winding_of(acc);
    if (w == 0) return;

    const double maxdim = std::max(rect.width(), rect.height());
    const double iso = std::max(1e-3, 8 * tol);
    if (maxdim <= iso) {
        const cplx centroid = acc.moment / (cplx(0, 1) * kTwoPi * double(w));
        if (auto x = newton_refine(f, centroid, w, rect, tol)) {
            out.push_back({*x, w});
            return;
        }
        if (maxdim <= tol) {
            out.push_back({clamp_into(centroid, rect), w});
            return;
        }
    }

    const bool split_re = rect.width() >= rect.height();
    for (double off : kCutOffsets) {
        Rect a = rect, b = rect;
        if (split_re) {
            const double cut = rect.re_lo + off * rect.width();
            a.re_hi = cut;
            b.re_lo = cut;
        } else {
            const double cut = rect.im_lo + off * rect.height();
            a.im_hi = cut;
            b.im_lo = cut;
        }
        std::vector<LocatedZero> sub;
        try {
            solve(f, a, tol, depth + 1, sub);
            solve(f, b, tol, depth + 1, sub);
        } catch (const CutZero&) {
            continue; // unlucky cut; shift it
        }
        out.insert(out.end(), sub.begin(), sub.end());
        return;
    }
    throw NonConvergence(
        "find_zeros: every subdivision cut met a zero; perturb the rectangle");
}

} // namespace

std::vector<LocatedZero> find_zeros(const Fn& f, Rect rect, double tol) {
    if (!(rect.re_lo < rect.re_hi) || !(rect.im_lo < rect.im_hi))
        throw InvalidInput("find_zeros: rectangle must have positive extent");
    if (!(tol > 0)) throw InvalidInput("find_zeros: tol must be positive");

    std::vector<LocatedZero> out;
    try {
        solve(f, rect, tol, 0, out);
    } catch (const CutZero& cz) {
        std::ostringstream msg;
        msg << "find_zeros: zero on or next to the rectangle boundary near ("
            << cz.at.real() << ", " << cz.at.imag()
            << "); perturb the rectangle edges by ~1e-6";
        throw BoundaryZero(msg.str());
    }
    // A zero that a subdivision cut sliced through gets reported once per
    // side; merge anything closer than half the isolation radius, summing
    // multiplicities so the total still matches the boundary winding.
    const double merge = 0.5 * std::max(1e-3, 8 * tol);
    std::vector<LocatedZero> merged;
    for (const LocatedZero& z : out) {
        bool absorbed = false;
        for (LocatedZero& m : merged) {
            if (std::abs(m.location - z.location) <= merge) {
                m.location = (m.location * double(m.multiplicity) +
                              z.location * double(z.multiplicity)) /
                             double(m.multiplicity + z.multiplicity);
                m.multiplicity += z.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(z);
    }
    std::sort(merged.begin(), merged.end(),
              [](const LocatedZero& a, const LocatedZero& b) {
                  if (a.location.real() != b.location.real())
                      return a.location.real() < b.location.real();
                  return a.location.imag() < b.location.imag();
              });
    return merged;
}

} // namespace zs
