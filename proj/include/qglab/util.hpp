/*
 * util.hpp — small numeric helpers shared across modules.
 */

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qglab {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need >= 2 matched points");
    double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

// geometric time grid {0, t_min, t_min*rho, ...} with spacing capped at
// dt_cap, ending exactly at t_end
inline std::vector<double> make_time_grid(double t_min, double t_end, double rho = 1.15,
                                          double dt_cap = std::numeric_limits<double>::infinity()) {
    if (!(t_min > 0.0) || !(t_end > t_min)) throw std::invalid_argument("make_time_grid: bad range");
    if (!(rho > 1.0)) throw std::invalid_argument("make_time_grid: rho must be > 1");
    std::vector<double> ts{0.0, t_min};
    double t = t_min;
    while (true) {
        double dt = std::min(t * (rho - 1.0), dt_cap);
        t += dt;
        if (t >= t_end * (1.0 - 1e-12)) break;
        ts.push_back(t);
    }
    ts.push_back(t_end);
    return ts;
}

inline double median_of(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median_of: empty");
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

inline double percentile_of(std::vector<double> v, double q) {
    if (v.empty()) throw std::invalid_argument("percentile_of: empty");
    std::sort(v.begin(), v.end());
    double pos = q * static_cast<double>(v.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= v.size()) return v.back();
    double w = pos - static_cast<double>(lo);
    return v[lo] * (1.0 - w) + v[lo + 1] * w;
}

}  // namespace qglab
