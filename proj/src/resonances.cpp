#include "zs/resonances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "zs/errors.hpp"
#include "zs/numeric_util.hpp"

namespace zs {

void ResonanceSet::insert(cplx z, int m) {
    if (m < 1) throw InvalidInput("ResonanceSet::insert: multiplicity must be >= 1");
    for (ResonancePoint& p : points) {
        if (std::abs(p.zeta - z) <= 1e-10) {
            p.m += m;
            return;
        }
    }
    points.push_back({z, m});
}

long long ResonanceSet::count_within(double r) const {
    long long n = 0;
    for (const ResonancePoint& p : points)
        if (std::abs(p.zeta) <= r) n += p.m;
    return n;
}

ResonanceSet cylinder_resonances(double l, int k_max, int n_max) {
    if (!(l > 0)) throw InvalidLength("cylinder_resonances: length must be positive");
    if (k_max < 0 || n_max < 0)
        throw InvalidInput("cylinder_resonances: k_max and n_max must be >= 0");
    ResonanceSet rs;
    rs.points.reserve(std::size_t(k_max + 1) * (2 * n_max + 1));
    for (int k = 0; k <= k_max; ++k)
        for (int n = -n_max; n <= n_max; ++n)
            rs.points.push_back({cplx(-k, 2.0 * std::numbers::pi * n / l), 2});
    std::sort(rs.points.begin(), rs.points.end(),
              [](const ResonancePoint& a, const ResonancePoint& b) {
                  if (std::abs(a.zeta) != std::abs(b.zeta))
                      return std::abs(a.zeta) < std::abs(b.zeta);
                  if (a.zeta.real() != b.zeta.real())
                      return a.zeta.real() > b.zeta.real();
                  return a.zeta.imag() < b.zeta.imag();
              });
    return rs;
}

CountingFit resonance_counting_fit(const ResonanceSet& rs, double r_min,
                                   double r_max, int samples) {
    if (!(r_min > 0) || !(r_max > r_min) || samples < 2)
        throw InvalidInput("resonance_counting_fit: need 0 < r_min < r_max, samples >= 2");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double sr4 = 0, snr2 = 0;
    int used = 0;
    for (int i = 0; i < samples; ++i) {
        const double r = r_min * std::pow(r_max / r_min, double(i) / (samples - 1));
        const long long n = rs.count_within(r);
        if (n <= 0) continue;
        const double x = std::log(r), y = std::log(double(n));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        sr4 += r * r * r * r;
        snr2 += double(n) * r * r;
        ++used;
    }
    if (used < 2)
        throw InvalidInput("resonance_counting_fit: too few radii with nonzero count");
    const double denom = used * sxx - sx * sx;
    CountingFit fit;
    fit.exponent = (used * sxy - sx * sy) / denom;
    fit.quad_coeff = snr2 / sr4;
    return fit;
}

cplx hadamard_log_P(const ResonanceSet& rs, cplx s) {
    cplx acc(0);
    for (const ResonancePoint& p : rs.points) {
        if (std::abs(p.zeta) == 0.0)
            throw ZeroDivision("hadamard_log_P: resonance at 0 has no Hadamard factor");
        const cplx w = s / p.zeta;
        acc += double(p.m) * (log1p_c(-w) - w + w * w / 2.0);
    }
    return acc;
}

double hadamard_tail_bound(const ResonanceSet& rs, cplx s, double quad_coeff) {
    if (rs.truncation_radius <= 0) return 0.0;
    const double R = rs.truncation_radius;
    const double a = std::abs(s);
    if (R < 2 * a) return std::numeric_limits<double>::infinity();
    // |sum_{j>=3} w^j / j| <= |w|^3 / (3 (1-|w|)) <= (2/3)|w|^3 for |w|<=1/2,
    // then integrate r^{-3} against dN with N(r) <= quad_coeff r^2.
    return (2.0 / 3.0) * a * a * a * 2.0 * quad_coeff / R;
}

std::string resonances_to_json(const ResonanceSet& rs, int digits) {
    nlohmann::json arr = nlohmann::json::array();
    char buf[64];
    for (const ResonancePoint& p : rs.points) {
        nlohmann::json obj;
        std::snprintf(buf, sizeof buf, "%.*g", digits, p.zeta.real());
        obj["re"] = digits > 17 ? nlohmann::json(std::string(buf))
                                : nlohmann::json(p.zeta.real());
        std::snprintf(buf, sizeof buf, "%.*g", digits, p.zeta.imag());
        obj["im"] = digits > 17 ? nlohmann::json(std::string(buf))
                                : nlohmann::json(p.zeta.imag());
        obj["m"] = p.m;
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

ResonanceSet resonances_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("resonances_from_json: parse failure: ") + e.what());
    }
    if (!arr.is_array())
        throw InvalidInput("resonances_from_json: expected a JSON array");
    ResonanceSet rs;
    auto num = [](const nlohmann::json& v, const char* field) -> double {
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) return std::stod(v.get<std::string>());
        throw InvalidInput(std::string("resonances_from_json: field '") + field +
                           "' must be numeric");
    };
    for (const auto& obj : arr) {
        if (!obj.contains("re") || !obj.contains("im"))
            throw InvalidInput("resonances_from_json: entry missing 're'/'im'");
        const int m = obj.value("m", 1);
        rs.insert(cplx(num(obj["re"], "re"), num(obj["im"], "im")), m);
    }
    return rs;
}

} // namespace zs
