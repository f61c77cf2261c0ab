#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zs/surface.hpp"

namespace zs {

struct BoundReport {
    std::string quantity;
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
    std::string context;
};

// -1/2 ln(1 - e^{-R}); strictly decreasing, diverging as R -> 0+.
// Throws InvalidR for R <= 0.
double epsilon_R(double R);

// With R := -log Z(1), checks epsilon_R(R) <= systole. Cylinders use the
// closed-form zeta; other surfaces the enumerated spectrum up to l_max with
// the extended-region evaluation at s = 1.
BoundReport systole_bound_check(const SurfaceModel& s, double l_max);

// Collar step of the curve-count bound: with the collar area substituted as
// sinh(t) l(dS), checks cosh^2(t) l^2(dS) <= l^2(dS) + Area(S)^2 for the
// pair of pants (Area = 2 pi). Throws RangeExceeded once sinh(t) l(dS)
// exceeds the total area.
BoundReport bers_curve_bound_check(const PantsSpec& p, double t);

struct SweepRow {
    double l = 0;
    double systole = 0;
    double neg_log_z1 = 0;
};

// Uniform pants family (l,l,l) on a grid: systole stays l while -log Z(1)
// decays to 0, the non-properness experiment. Restricted to l >= 2 where the
// s = 1 evaluation is tail-certified.
std::vector<SweepRow> properness_sweep(double l_min, double l_max, int steps);

std::string bound_reports_json(const std::vector<BoundReport>& reports);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

} // namespace zs
