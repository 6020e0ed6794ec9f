/*
 * besov.hpp — homogeneous Besov and Sobolev norms through dyadic blocks.
 *
 *     ||f||_{B^s_{p,q}} = || { 2^{js} ||Delta_j f||_{L^p} }_j ||_{l^q},
 *
 * with H^s = B^s_{2,2}.  Block L^2 norms are evaluated spectrally
 * (Plancherel); other p go through the inverse transform and grid
 * quadrature.  The direct-weight Sobolev norm (sum |xi|^{2s} |fhat|^2)
 * is kept as an independent route for equivalence tests.
 */

#pragma once

#include <limits>

#include "qglab/dyadic.hpp"

namespace qglab {

struct BesovSpec {
    double p = 2.0;
    double q = 2.0;
    double s = 0.0;

    void check_valid() const {
        if (!(p >= 1.0)) throw std::invalid_argument("BesovSpec: p must be >= 1 or inf");
        if (!(q >= 1.0)) throw std::invalid_argument("BesovSpec: q must be >= 1 or inf");
    }
};

namespace detail {

inline double lq_combine(const std::vector<double>& values, double q) {
    if (std::isinf(q)) {
        double m = 0.0;
        for (double v : values) m = std::max(m, v);
        return m;
    }
    double acc = 0.0;
    for (double v : values) acc += std::pow(v, q);
    return std::pow(acc, 1.0 / q);
}

// ||Delta_j F||_{L^2} without leaving Fourier space
inline double block_l2(const DyadicProfile& prof, const SpectralField& F, int j) {
    const Grid& g = F.grid();
    int n = g.n();
    double acc = 0.0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            if (i1 == 0 && i2 == 0) continue;
            if (g.is_nyquist(i1, i2)) continue;
            double w = prof.phi_hat(j, g.xi_norm(i1, i2));
            if (w != 0.0) acc += w * w * std::norm(F.at(i1, i2));
        }
    double n2 = static_cast<double>(n) * n;
    return g.length() / n2 * std::sqrt(acc);
}

}  // namespace detail

inline double block_lp_norm(const DyadicProfile& prof, const SpectralField& F, int j, double p) {
    if (p == 2.0) return detail::block_l2(prof, F, j);
    return lp_norm(detail::inverse_unchecked(prof.block_project(F, j)), p);
}

inline double besov_norm(const SpectralField& F, const BesovSpec& spec, const DyadicProfile& prof) {
    spec.check_valid();
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(prof.j_hi() - prof.j_lo() + 1));
    for (int j = prof.j_lo(); j <= prof.j_hi(); ++j) {
        double b = block_lp_norm(prof, F, j, spec.p);
        terms.push_back(std::pow(2.0, spec.s * j) * b);
    }
    return detail::lq_combine(terms, spec.q);
}

// H^s norm via blocks (B^s_{2,2})
inline double sobolev_norm(const SpectralField& F, double s, const DyadicProfile& prof) {
    return besov_norm(F, BesovSpec{2.0, 2.0, s}, prof);
}

// independent route: (L^2/n^4 sum |xi|^{2s} |fhat|^2)^(1/2)
inline double direct_sobolev_norm(const SpectralField& F, double s) {
    const Grid& g = F.grid();
    int n = g.n();
    double acc = 0.0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            if (i1 == 0 && i2 == 0) continue;
            if (g.is_nyquist(i1, i2)) continue;
            acc += std::pow(g.xi_norm(i1, i2), 2.0 * s) * std::norm(F.at(i1, i2));
        }
    double n2 = static_cast<double>(n) * n;
    return g.length() / n2 * std::sqrt(acc);
}

}  // namespace qglab
