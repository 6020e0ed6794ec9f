/*
 * dyadic.hpp — homogeneous Littlewood-Paley decomposition on the grid.
 *
 * The generating profile phi0_hat is a radial C^inf bump supported in
 * {1/2 <= |xi| <= 2} with 0 <= phi0_hat <= 1, built from the standard
 * exp(-1/x) mollifier and normalized so that the dyadic translates
 * phi_j_hat(xi) = phi0_hat(2^-j xi) telescope:
 *
 *     sum_j phi_j_hat(xi) = 1   for every xi != 0.
 *
 * Blocks and low-pass:
 *     Delta_j f = F^-1 phi_j_hat F f,      S_j f = sum_{k <= j-3} Delta_k f,
 * so S_j rolls off across |xi| in [2^(j-3), 2^(j-2)] and
 * Delta_j (1 - S_(N+3)) f = 0 for j <= N-1.
 *
 * On an n x n grid with period L the resolved shells are
 * j in [j_lo, j_hi]; blocks outside are identically zero (documented,
 * not an error).
 */

#pragma once

#include <vector>

#include "qglab/fft.hpp"
#include "qglab/operators.hpp"

namespace qglab {
namespace detail {

// C^inf step: 0 for x <= 0, 1 for x >= 1, strictly increasing between
inline double smooth_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double a = std::exp(-1.0 / x);
    double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

}  // namespace detail

class DyadicProfile {
public:
    explicit DyadicProfile(const Grid& grid) : grid_(grid) {
        double kmin = grid.min_wavenumber();
        double kmax = grid.max_wavenumber();
        j_lo_ = static_cast<int>(std::floor(std::log2(kmin)));
        j_hi_ = static_cast<int>(std::ceil(std::log2(kmax)));
    }

    const Grid& grid() const { return grid_; }
    int j_lo() const { return j_lo_; }
    int j_hi() const { return j_hi_; }

    // phi0_hat(r), supported in [1/2, 2], equal to 1 at r = 1
    static double phi0_hat(double r) {
        if (r <= 0.5 || r >= 2.0) return 0.0;
        double u = std::log2(r);
        if (u <= 0.0) return detail::smooth_step(1.0 + u);
        return 1.0 - detail::smooth_step(u);
    }

    double phi_hat(int j, double r) const { return phi0_hat(std::ldexp(r, -j)); }

    // multiplier of S_j: 1 below 2^(j-3), smooth roll-off, 0 above 2^(j-2)
    static double lowpass_hat(int j, double r) {
        if (r <= 0.0) return 1.0;
        double u = std::log2(r) - (j - 3);
        if (u <= 0.0) return 1.0;
        if (u >= 1.0) return 0.0;
        return 1.0 - detail::smooth_step(u);
    }

    SpectralField block_project(const SpectralField& F, int j) const {
        return detail::apply_multiplier(
            F, [this, j](double, double, double r) { return Complex(phi_hat(j, r), 0.0); });
    }

    SpectralField low_pass(const SpectralField& F, int j) const {
        return detail::apply_multiplier(
            F, [j](double, double, double r) { return Complex(lowpass_hat(j, r), 0.0); });
    }

    SpectralField high_pass(const SpectralField& F, int j) const {
        return detail::apply_multiplier(
            F, [j](double, double, double r) { return Complex(1.0 - lowpass_hat(j, r), 0.0); });
    }

    // worst deviation of the partition sum from 1 over resolved xi != 0
    double partition_defect() const {
        int n = grid_.n();
        double worst = 0.0;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2) {
                if (i1 == 0 && i2 == 0) continue;
                if (grid_.is_nyquist(i1, i2)) continue;
                double r = grid_.xi_norm(i1, i2);
                double s = 0.0;
                for (int j = j_lo_ - 1; j <= j_hi_ + 1; ++j) s += phi_hat(j, r);
                worst = std::max(worst, std::abs(s - 1.0));
            }
        return worst;
    }

private:
    Grid grid_;
    int j_lo_;
    int j_hi_;
};

}  // namespace qglab
