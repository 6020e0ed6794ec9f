/*
 * ensemble.hpp — seeded Gaussian random fields, band-limited to a dyadic
 * shell range, with a power-law radial amplitude profile.
 *
 * Each Fourier mode on the canonical half-lattice gets an independent
 * complex Gaussian with std |xi|^slope, keyed by (seed, member, mode), and
 * is mirrored to keep the field real.  Fields are identical bitwise across
 * runs, thread counts, and iteration orders.
 */

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qglab/fft.hpp"
#include "qglab/rng.hpp"

namespace qglab {

struct EnsembleSpec {
    int count = 1;
    std::uint64_t seed = 0;
    double spectrum_slope = 0.0;  // expected |fhat(xi)| ~ |xi|^slope
    int j_min = 0;
    int j_max = 0;

    void check_valid() const {
        if (count < 1) throw std::invalid_argument("EnsembleSpec: count must be >= 1");
        if (j_min > j_max) throw std::invalid_argument("EnsembleSpec: j_min > j_max");
    }
};

inline SpectralField gaussian_spectral_member(const EnsembleSpec& spec, const Grid& grid, int member) {
    spec.check_valid();
    double band_lo = std::pow(2.0, spec.j_min - 1);
    double band_hi = std::pow(2.0, spec.j_max + 1);
    if (band_hi > grid.max_axis_wavenumber())
        throw std::invalid_argument(
            "gaussian_ensemble: shell band exceeds resolved wavenumbers (j_max too high for grid)");

    int n = grid.n();
    SpectralField F(grid);
    std::uint64_t stream = splitmix64(spec.seed ^ (0x9e3779b9ULL + static_cast<std::uint64_t>(member)));
    for (int i1 = 0; i1 < n; ++i1) {
        int k1 = grid.k_of(i1);
        for (int i2 = 0; i2 < n; ++i2) {
            int k2 = grid.k_of(i2);
            // canonical half: k2 > 0, or k2 == 0 and k1 > 0
            if (!(k2 > 0 || (k2 == 0 && k1 > 0))) continue;
            if (grid.is_nyquist(i1, i2)) continue;
            double r = grid.xi_norm(i1, i2);
            if (r < band_lo || r > band_hi) continue;
            std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k1)) << 32) |
                                static_cast<std::uint64_t>(static_cast<std::uint32_t>(k2));
            GaussPair gp = gauss_pair(spec.seed, stream, key);
            double amp = std::pow(r, spec.spectrum_slope) / std::sqrt(2.0);
            Complex c(amp * gp.a, amp * gp.b);
            F.at(i1, i2) = c;
            F.at((n - i1) % n, (n - i2) % n) = std::conj(c);
        }
    }
    return F;
}

inline std::vector<RealField> gaussian_ensemble(const EnsembleSpec& spec, const Grid& grid) {
    std::vector<RealField> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int m = 0; m < spec.count; ++m)
        out.push_back(detail::inverse_unchecked(gaussian_spectral_member(spec, grid, m)));
    return out;
}

}  // namespace qglab
