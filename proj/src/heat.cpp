#include "zs/heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zs/errors.hpp"

namespace zs {

namespace {

constexpr double kPi = std::numbers::pi;

int sub_nt(const FunnelChart& c, int stride) { return (c.n_t - 1) / stride + 1; }
int sub_ntheta(const FunnelChart& c, int stride) { return c.n_theta / stride; }

// Conservative second-order Laplacian on the stride-subsampled grid.
std::vector<double> laplacian_stride(const ConformalFactor& cf, int stride) {
    const FunnelChart& c = cf.chart;
    const int nt = sub_nt(c, stride), nth = sub_ntheta(c, stride);
    const double dts = stride * c.dt();
    const double dths = stride * c.dtheta();
    std::vector<double> lap(std::size_t(nt) * nth, 0.0);
    for (int it = 1; it + 1 < nt; ++it) {
        const int i = it * stride;
        const double tt = c.t(i);
        const double ch = std::cosh(tt);
        const double chp = std::cosh(tt + 0.5 * dts);
        const double chm = std::cosh(tt - 0.5 * dts);
        const double gt = c.g_theta_theta(tt);
        for (int jt = 0; jt < nth; ++jt) {
            const int j = jt * stride;
            const int jp = (j + stride) % c.n_theta;
            const int jm = (j - stride + c.n_theta) % c.n_theta;
            const double p = cf.at(i, j);
            const double d_t = (chp * (cf.at(i + stride, j) - p) -
                                chm * (p - cf.at(i - stride, j))) /
                               (ch * dts * dts);
            const double d_th =
                (cf.at(i, jp) - 2 * p + cf.at(i, jm)) / (gt * dths * dths);
            lap[std::size_t(it) * nth + jt] = -d_t - d_th;
        }
    }
    return lap;
}

double integrate_stride(const FunnelChart& c, const std::vector<double>& v,
                        int stride) {
    const int nt = sub_nt(c, stride), nth = sub_ntheta(c, stride);
    const double dts = stride * c.dt();
    const double dths = stride * c.dtheta();
    double total = 0;
    for (int it = 0; it < nt; ++it) {
        const double w_simp =
            (it == 0 || it == nt - 1) ? 1.0 : (it % 2 ? 4.0 : 2.0);
        double row = 0;
        for (int jt = 0; jt < nth; ++jt) row += v[std::size_t(it) * nth + jt];
        total += w_simp * row * c.area_element(c.t(it * stride));
    }
    return total * (dts / 3.0) * dths;
}

struct InvariantsAt {
    double a0, a1, a2;
};

InvariantsAt invariants_stride(const ConformalFactor& cf, int stride) {
    const FunnelChart& c = cf.chart;
    const int nt = sub_nt(c, stride), nth = sub_ntheta(c, stride);
    const std::vector<double> lap = laplacian_stride(cf, stride);
    std::vector<double> f0(lap.size()), f2(lap.size());
    for (int it = 0; it < nt; ++it)
        for (int jt = 0; jt < nth; ++jt) {
            const std::size_t idx = std::size_t(it) * nth + jt;
            const double p = cf.at(it * stride, jt * stride);
            const double e2p = std::exp(2 * p);
            const double K = std::exp(-2 * p) * (lap[idx] - 1.0);
            f0[idx] = e2p - 1.0;
            f2[idx] = e2p * K * K - 1.0;
            if (!std::isfinite(f0[idx]) || !std::isfinite(f2[idx]))
                throw QuadratureFailure("heat_invariants: non-finite integrand");
        }
    InvariantsAt r;
    r.a0 = integrate_stride(c, f0, stride) / (4 * kPi);
    r.a1 = integrate_stride(c, lap, stride) / (12 * kPi);
    r.a2 = integrate_stride(c, f2, stride) / (60 * kPi);
    return r;
}

std::vector<double> gradsq_stride(const ConformalFactor& cf, int stride) {
    const FunnelChart& c = cf.chart;
    const int nt = sub_nt(c, stride), nth = sub_ntheta(c, stride);
    const double dts = stride * c.dt();
    const double dths = stride * c.dtheta();
    std::vector<double> g(std::size_t(nt) * nth, 0.0);
    for (int it = 1; it + 1 < nt; ++it) {
        const int i = it * stride;
        const double gt = c.g_theta_theta(c.t(i));
        for (int jt = 0; jt < nth; ++jt) {
            const int j = jt * stride;
            const int jp = (j + stride) % c.n_theta;
            const int jm = (j - stride + c.n_theta) % c.n_theta;
            const double dpt = (cf.at(i + stride, j) - cf.at(i - stride, j)) / (2 * dts);
            const double dpth = (cf.at(i, jp) - cf.at(i, jm)) / (2 * dths);
            g[std::size_t(it) * nth + jt] = dpt * dpt + dpth * dpth / gt;
        }
    }
    return g;
}

std::vector<double> values_stride(const ConformalFactor& cf, int stride) {
    const FunnelChart& c = cf.chart;
    const int nt = sub_nt(c, stride), nth = sub_ntheta(c, stride);
    std::vector<double> v(std::size_t(nt) * nth);
    for (int it = 0; it < nt; ++it)
        for (int jt = 0; jt < nth; ++jt)
            v[std::size_t(it) * nth + jt] = cf.at(it * stride, jt * stride);
    return v;
}

} // namespace

std::vector<double> laplacian_tau(const ConformalFactor& cf) {
    verify_support(cf);
    return laplacian_stride(cf, 1);
}

std::vector<double> curvature_g(const ConformalFactor& cf) {
    verify_support(cf);
    std::vector<double> K = laplacian_stride(cf, 1);
    for (int i = 0; i < cf.chart.n_t; ++i)
        for (int j = 0; j < cf.chart.n_theta; ++j) {
            const std::size_t idx = std::size_t(i) * cf.chart.n_theta + j;
            K[idx] = std::exp(-2 * cf.at(i, j)) * (K[idx] - 1.0);
        }
    return K;
}

HeatInvariants heat_invariants(const ConformalFactor& cf) {
    verify_support(cf);
    const InvariantsAt fine = invariants_stride(cf, 1);
    const InvariantsAt coarse = invariants_stride(cf, 2);
    HeatInvariants h;
    h.a0 = fine.a0;
    h.a1 = fine.a1;
    h.a2 = fine.a2;
    h.quadrature_error = std::max({std::abs(fine.a0 - coarse.a0),
                                   std::abs(fine.a1 - coarse.a1),
                                   std::abs(fine.a2 - coarse.a2)}) +
                         1e-15 * (1.0 + std::abs(fine.a0) + std::abs(fine.a2));
    return h;
}

double polyakov_logD1(const ConformalFactor& cf) {
    verify_support(cf);
    const double grad = integrate_stride(cf.chart, gradsq_stride(cf, 1), 1);
    const double mass = integrate_stride(cf.chart, values_stride(cf, 1), 1);
    const double v = -(0.5 * grad - mass) / (6 * kPi);
    if (!std::isfinite(v))
        throw QuadratureFailure("polyakov_logD1: non-finite integral");
    return v;
}

JensenReport jensen_bound_check(const ConformalFactor& cf, double zero_area) {
    verify_support(cf);
    const FunnelChart& c = cf.chart;
    double supp_area = 0;
    for (int i = 0; i < c.n_t; ++i) {
        bool nonzero = false;
        for (int j = 0; j < c.n_theta; ++j)
            if (cf.at(i, j) != 0.0) nonzero = true;
        if (nonzero) supp_area += c.area_element(c.t(i)) * c.dt() * 2 * kPi;
    }
    JensenReport rep;
    rep.area = std::max(zero_area, supp_area);
    rep.lhs = integrate_stride(c, values_stride(cf, 1), 1);
    if (rep.area <= 0) {
        rep.rhs = 0;
        rep.holds = rep.lhs <= 1e-12;
        return rep;
    }
    const double a0 = invariants_stride(cf, 1).a0;
    rep.rhs = 0.5 * rep.area * std::log1p(4 * kPi * a0 / rep.area);
    rep.holds = rep.lhs <= rep.rhs + 1e-12 * std::max(1.0, std::abs(rep.rhs));
    return rep;
}

} // namespace zs
