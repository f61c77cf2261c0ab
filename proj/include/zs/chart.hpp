#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zs {

// Funnel coordinate patch: metric dt^2 + (l cosh t / 2pi)^2 dtheta^2 with
// theta of period 2pi, so the t = 0 circle has length exactly l. The chart
// extends below the neck (t = -t_lo) to hold collar-supported data.
struct FunnelChart {
    double l = 1;
    double t_lo = 1;
    double t_max = 6;
    int n_t = 161;   // t samples; n_t - 1 divisible by 4 (Simpson + coarse grid)
    int n_theta = 64; // even

    double dt() const { return (t_max + t_lo) / (n_t - 1); }
    double dtheta() const;
    double t(int i) const { return -t_lo + i * dt(); }
    double theta(int j) const;
    // sqrt(g) = l cosh t / (2pi)
    double area_element(double tt) const;
    double g_theta_theta(double tt) const;
};

// Throws InvalidInput when the grid is unusable (resolution < 16x16, parity
// constraints, nonpositive extents).
void validate_chart(const FunnelChart& chart);

struct ConformalFactor {
    FunnelChart chart;
    std::vector<double> phi; // n_t * n_theta, t-major
    double t_supp = 0;       // phi == 0 at every sample with t > t_supp

    double at(int i, int j) const { return phi[std::size_t(i) * chart.n_theta + j]; }
    double& at(int i, int j) { return phi[std::size_t(i) * chart.n_theta + j]; }
};

// amplitude * b((t-t_center)/width) * cos(mode*theta + phase), where b is the
// standard C-infinity bump exp(1 - 1/(1-x^2)) on |x| < 1; mode 0 drops the
// angular factor. Exactly zero outside |t - t_center| < width.
ConformalFactor make_bump(const FunnelChart& chart, double amplitude,
                          double t_center, double width, int theta_mode,
                          double theta_phase = 0);

// Checks the compact-support contract: nonzero samples keep >= 2 cells of
// margin from both t edges and respect t_supp. max_second_difference > 0
// additionally bounds |phi_{i+1} - 2 phi_i + phi_{i-1}| / dt^2 as a
// smoothness proxy. Throws SupportTouchesBoundary / InvalidInput.
void verify_support(const ConformalFactor& cf, double max_second_difference = 0);

FunnelChart chart_from_json_text(const std::string& text);
FunnelChart chart_from_json_file(const std::string& path);

// CSV layout: n_t rows of n_theta comma-separated values.
ConformalFactor phi_from_csv(const FunnelChart& chart, std::istream& in);
void write_phi_csv(std::ostream& out, const ConformalFactor& cf);

} // namespace zs
