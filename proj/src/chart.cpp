#include "zs/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "zs/errors.hpp"

namespace zs {

double FunnelChart::dtheta() const { return 2.0 * std::numbers::pi / n_theta; }
double FunnelChart::theta(int j) const { return j * dtheta(); }
double FunnelChart::area_element(double tt) const {
    return l * std::cosh(tt) / (2.0 * std::numbers::pi);
}
double FunnelChart::g_theta_theta(double tt) const {
    const double r = area_element(tt);
    return r * r;
}

void validate_chart(const FunnelChart& chart) {
    if (!(chart.l > 0)) throw InvalidInput("chart: boundary length l must be positive");
    if (!(chart.t_lo >= 0) || !(chart.t_max > 0))
        throw InvalidInput("chart: need t_lo >= 0 and t_max > 0");
    if (chart.n_t < 16 || chart.n_theta < 16)
        throw InvalidInput("chart: grid resolution must be at least 16 x 16");
    if ((chart.n_t - 1) % 4 != 0)
        throw InvalidInput("chart: n_t - 1 must be divisible by 4");
    if (chart.n_theta % 2 != 0)
        throw InvalidInput("chart: n_theta must be even");
}

namespace {

double smooth_bump(double x) {
    const double x2 = x * x;
    if (x2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - x2));
}

} // namespace

ConformalFactor make_bump(const FunnelChart& chart, double amplitude,
                          double t_center, double width, int theta_mode,
                          double theta_phase) {
    validate_chart(chart);
    if (!(width > 0)) throw InvalidInput("make_bump: width must be positive");
    ConformalFactor cf;
    cf.chart = chart;
    cf.phi.assign(std::size_t(chart.n_t) * chart.n_theta, 0.0);
    for (int i = 0; i < chart.n_t; ++i) {
        const double b = smooth_bump((chart.t(i) - t_center) / width);
        if (b == 0.0) continue;
        for (int j = 0; j < chart.n_theta; ++j) {
            const double ang =
                theta_mode == 0 ? 1.0 : std::cos(theta_mode * chart.theta(j) + theta_phase);
            cf.at(i, j) = amplitude * b * ang;
        }
    }
    cf.t_supp = t_center + width;
    return cf;
}

void verify_support(const ConformalFactor& cf, double max_second_difference) {
    validate_chart(cf.chart);
    const int nt = cf.chart.n_t, nth = cf.chart.n_theta;
    if (cf.phi.size() != std::size_t(nt) * nth)
        throw InvalidInput("conformal factor: grid size mismatch with chart");
    int lo = nt, hi = -1;
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nth; ++j)
            if (cf.at(i, j) != 0.0) {
                lo = std::min(lo, i);
                hi = std::max(hi, i);
            }
    if (hi < 0) return; // identically zero
    if (lo < 2 || hi > nt - 3)
        throw SupportTouchesBoundary(
            "conformal factor: support within 2 cells of a chart t-edge");
    if (cf.chart.t(hi) > cf.t_supp + 1e-12)
        throw InvalidInput("conformal factor: sample beyond declared t_supp is nonzero");
    if (max_second_difference > 0) {
        const double inv_dt2 = 1.0 / (cf.chart.dt() * cf.chart.dt());
        for (int i = 1; i + 1 < nt; ++i)
            for (int j = 0; j < nth; ++j) {
                const double d2 =
                    (cf.at(i + 1, j) - 2 * cf.at(i, j) + cf.at(i - 1, j)) * inv_dt2;
                if (std::abs(d2) > max_second_difference)
                    throw InvalidInput(
                        "conformal factor: second difference exceeds the smoothness bound");
            }
    }
}

FunnelChart chart_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("chart json: parse failure: ") + e.what());
    }
    FunnelChart c;
    auto need = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field))
            throw InvalidInput(std::string("chart json: missing field '") + field + "'");
        return j[field];
    };
    try {
        c.l = need("l").get<double>();
        c.t_lo = j.value("t_lo", 1.0);
        c.t_max = need("t_max").get<double>();
        c.n_t = need("n_t").get<int>();
        c.n_theta = need("n_theta").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("chart json: bad field type: ") + e.what());
    }
    validate_chart(c);
    return c;
}

FunnelChart chart_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("chart json: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return chart_from_json_text(ss.str());
}

ConformalFactor phi_from_csv(const FunnelChart& chart, std::istream& in) {
    validate_chart(chart);
    ConformalFactor cf;
    cf.chart = chart;
    cf.phi.assign(std::size_t(chart.n_t) * chart.n_theta, 0.0);
    std::string line;
    int i = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (i >= chart.n_t)
            throw InvalidInput("phi csv: more rows than chart n_t");
        std::istringstream row(line);
        std::string cell;
        int j = 0;
        while (std::getline(row, cell, ',')) {
            if (j >= chart.n_theta)
                throw InvalidInput("phi csv: more columns than chart n_theta");
            try {
                cf.at(i, j) = std::stod(cell);
            } catch (const std::exception&) {
                throw InvalidInput("phi csv: non-numeric cell at row " +
                                   std::to_string(i) + ", column " + std::to_string(j));
            }
            ++j;
        }
        if (j != chart.n_theta)
            throw InvalidInput("phi csv: row " + std::to_string(i) + " has " +
                               std::to_string(j) + " columns, expected " +
                               std::to_string(chart.n_theta));
        ++i;
    }
    if (i != chart.n_t)
        throw InvalidInput("phi csv: " + std::to_string(i) + " rows, expected " +
                           std::to_string(chart.n_t));
    double supp = -chart.t_lo;
    for (int r = 0; r < chart.n_t; ++r)
        for (int j = 0; j < chart.n_theta; ++j)
            if (cf.at(r, j) != 0.0) supp = chart.t(r);
    cf.t_supp = supp;
    return cf;
}

void write_phi_csv(std::ostream& out, const ConformalFactor& cf) {
    char buf[32];
    for (int i = 0; i < cf.chart.n_t; ++i) {
        for (int j = 0; j < cf.chart.n_theta; ++j) {
            std::snprintf(buf, sizeof buf, "%.15g", cf.at(i, j));
            out << (j ? "," : "") << buf;
        }
        out << "\n";
    }
}

} // namespace zs
