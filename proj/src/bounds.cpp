#include "zs/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zs/errors.hpp"
#include "zs/parallel.hpp"
#include "zs/spectrum.hpp"
#include "zs/zeta.hpp"

namespace zs {

double epsilon_R(double R) {
    if (!(R > 0)) throw InvalidR("epsilon_R: requires R > 0");
    return -0.5 * std::log1p(-std::exp(-R));
}

BoundReport systole_bound_check(const SurfaceModel& s, double l_max) {
    double sys = 0, log_z1 = 0;
    if (s.kind == "cylinder") {
        sys = s.boundary_lengths.at(0);
        log_z1 = log_zeta_cylinder(sys, cplx(1.0, 0.0)).real();
    } else {
        const LengthSpectrum ls = enumerate_spectrum(s, l_max);
        sys = systole(ls);
        ZetaOptions opt;
        opt.extended = true;
        log_z1 = log_zeta(ls, cplx(1.0, 0.0), opt).value.real();
    }
    const double R = std::max(-log_z1, 1e-300);
    BoundReport rep;
    rep.quantity = "systole_lower_bound";
    rep.lhs = epsilon_R(R);
    rep.rhs = sys;
    rep.holds = rep.lhs <= rep.rhs + 1e-12 * std::max(1.0, rep.rhs);
    std::ostringstream ctx;
    ctx << "kind=" << s.kind << " l_max=" << l_max << " R=" << R;
    rep.context = ctx.str();
    return rep;
}

BoundReport bers_curve_bound_check(const PantsSpec& p, double t) {
    if (!(p.l1 > 0) || !(p.l2 > 0) || !(p.l3 > 0))
        throw InvalidLength("bers_curve_bound_check: boundary lengths must be positive");
    if (!(t >= 0)) throw InvalidInput("bers_curve_bound_check: t must be >= 0");
    const double area = 2 * std::numbers::pi;
    const double boundary = p.l1 + p.l2 + p.l3;
    if (std::sinh(t) * boundary > area)
        throw RangeExceeded(
            "bers_curve_bound_check: collar area sinh(t) l(dS) exceeds Area(S)");
    BoundReport rep;
    rep.quantity = "curve_collar_bound";
    const double c = std::cosh(t);
    rep.lhs = c * c * boundary * boundary;
    rep.rhs = boundary * boundary + area * area;
    rep.holds = rep.lhs <= rep.rhs + 1e-12 * rep.rhs;
    std::ostringstream ctx;
    ctx << "pants=(" << p.l1 << "," << p.l2 << "," << p.l3 << ") t=" << t;
    rep.context = ctx.str();
    return rep;
}

std::vector<SweepRow> properness_sweep(double l_min, double l_max, int steps) {
    if (l_min < 2.0)
        throw InvalidInput("properness_sweep: grid restricted to l >= 2 where the "
                           "s = 1 evaluation is certified");
    if (!(l_max >= l_min) || steps < 1)
        throw InvalidInput("properness_sweep: need l_max >= l_min and steps >= 1");
    std::vector<SweepRow> rows(steps);
    parallel_blocks(std::size_t(steps), 1, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j) {
            const double l =
                steps == 1 ? l_min : l_min + (l_max - l_min) * double(j) / (steps - 1);
            const SurfaceModel s = build_pants({l, l, l});
            const LengthSpectrum ls = enumerate_spectrum(s, l + 3.0);
            ZetaOptions opt;
            opt.extended = true;
            rows[j].l = l;
            rows[j].systole = systole(ls);
            rows[j].neg_log_z1 = -log_zeta(ls, cplx(1.0, 0.0), opt).value.real();
        }
    });
    return rows;
}

std::string bound_reports_json(const std::vector<BoundReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BoundReport& r : reports) {
        arr.push_back({{"quantity", r.quantity},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"holds", r.holds},
                       {"context", r.context}});
    }
    return arr.dump(2) + "\n";
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "l,systole,neg_log_zeta_1\n";
    char buf[128];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", r.l, r.systole,
                      r.neg_log_z1);
        out << buf;
    }
}

} // namespace zs
