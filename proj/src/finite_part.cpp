#include "zs/finite_part.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "zs/errors.hpp"

namespace zs {

namespace {

constexpr double kPi = std::numbers::pi;

// int_0^T int_0^{2pi} f (l cosh t / 2pi) dtheta dt, Simpson x periodic trapezoid.
double truncated_integral(const std::function<double(double, double)>& f, double l,
                          double T, int n_t, int n_theta) {
    const double dt = T / n_t;
    const double dth = 2 * kPi / n_theta;
    double total = 0;
    for (int i = 0; i <= n_t; ++i) {
        const double t = i * dt;
        const double w = (i == 0 || i == n_t) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        double row = 0;
        for (int j = 0; j < n_theta; ++j) row += f(t, j * dth);
        const double val = w * row * (l * std::cosh(t) / (2 * kPi));
        if (!std::isfinite(val))
            throw QuadratureFailure("finite_part_integral: non-finite integrand");
        total += val;
    }
    return total * (dt / 3.0) * dth;
}

// Least squares for a 4-column design, normal equations with column scaling.
std::array<double, 4> solve_ls(const std::vector<std::array<double, 4>>& X,
                               const std::vector<double>& y) {
    std::array<double, 4> norm{};
    for (int j = 0; j < 4; ++j) {
        double s = 0;
        for (const auto& row : X) s += row[j] * row[j];
        norm[j] = std::sqrt(s);
    }
    double A[4][5] = {};
    for (std::size_t i = 0; i < X.size(); ++i)
        for (int j = 0; j < 4; ++j) {
            const double xij = X[i][j] / norm[j];
            for (int k = 0; k < 4; ++k) A[j][k] += xij * X[i][k] / norm[k];
            A[j][4] += xij * y[i];
        }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        for (int k = 0; k <= 4; ++k) std::swap(A[piv][k], A[col][k]);
        for (int r = 0; r < 4; ++r) {
            if (r == col || A[col][col] == 0) continue;
            const double fct = A[r][col] / A[col][col];
            for (int k = col; k <= 4; ++k) A[r][k] -= fct * A[col][k];
        }
    }
    std::array<double, 4> beta{};
    for (int j = 0; j < 4; ++j)
        beta[j] = A[j][4] / A[j][j] / norm[j];
    return beta;
}

} // namespace

FinitePartResult finite_part_integral(const std::function<double(double, double)>& f,
                                      double l, const FinitePartOptions& opt) {
    if (!(l > 0)) throw InvalidLength("finite_part_integral: funnel length must be positive");
    if (opt.i_min < 1 || opt.i_max - opt.i_min < 5)
        throw InvalidInput("finite_part_integral: ladder needs at least 6 rungs");
    if (opt.n_t < 16 || opt.n_t % 2 || opt.n_theta < 4)
        throw InvalidInput("finite_part_integral: bad quadrature sizes");

    std::vector<std::array<double, 4>> X;
    std::vector<double> y;
    for (int i = opt.i_min; i <= opt.i_max; ++i) {
        const double eps = std::ldexp(1.0, -i);
        const double T = std::log(1.0 / eps);
        X.push_back({1.0 / eps, std::log(eps), 1.0, eps});
        y.push_back(truncated_integral(f, l, T, opt.n_t, opt.n_theta));
    }

    const std::array<double, 4> beta = solve_ls(X, y);
    double rss = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        double fit = 0;
        for (int j = 0; j < 4; ++j) fit += X[i][j] * beta[j];
        rss += (y[i] - fit) * (y[i] - fit);
    }
    FinitePartResult r;
    r.c_inverse = beta[0];
    r.c_log = beta[1];
    r.value = beta[2];
    r.c_linear = beta[3];
    r.fit_residual = std::sqrt(rss / double(y.size()));
    const double scale = 1.0 + std::abs(beta[0]) + std::abs(beta[1]) +
                         std::abs(beta[2]) + std::abs(beta[3]);
    if (r.fit_residual > opt.residual_tol * scale)
        throw ExpansionMismatch(
            "finite_part_integral: truncated integrals do not follow "
            "c/eps + c log eps + c0 + O(eps)");
    return r;
}

double zero_volume(const SurfaceModel& s) {
    double total = -2 * kPi * s.chi;
    for (double l : s.boundary_lengths)
        total += finite_part_integral([](double, double) { return 1.0; }, l).value;
    return total;
}

} // namespace zs
