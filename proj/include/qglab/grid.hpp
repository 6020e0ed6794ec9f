/*
 * grid.hpp — periodic square grid [0, L)^2 with n x n collocation points.
 *
 * Wavenumbers follow the usual centered integer lattice in FFT storage
 * order: index i maps to k = i for i < n/2 and k = i - n otherwise, and
 * xi = (2 pi / L) k.  The k = -n/2 row/column (the Nyquist line) carries
 * no usable phase information for real data; every multiplier application
 * zeroes it, which keeps derivative operators symmetric.
 *
 * The two-thirds dealiasing rule is expressed on integer indices:
 * a mode is dropped when 3 * max(|k1|, |k2|) >= n.  For band-limited
 * inputs below the cut, aliases of quadratic products then land strictly
 * inside the dropped region.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qglab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

class Grid {
public:
    Grid(int n, double length) : n_(n), length_(length) {
        if (n <= 0 || n % 2 != 0) throw std::invalid_argument("Grid: n must be positive and even");
        if (!(length > 0.0)) throw std::invalid_argument("Grid: L must be > 0");
    }

    int n() const { return n_; }
    double length() const { return length_; }
    double dx() const { return length_ / n_; }
    std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

    // integer wavenumber of storage index i
    int k_of(int i) const { return i < n_ / 2 ? i : i - n_; }

    double xi_of(int i) const { return (kTwoPi / length_) * k_of(i); }

    // |xi| at flattened index (row-major: idx = i1 * n + i2)
    double xi_norm(int i1, int i2) const {
        double a = xi_of(i1), b = xi_of(i2);
        return std::sqrt(a * a + b * b);
    }

    bool is_nyquist(int i1, int i2) const { return i1 == n_ / 2 || i2 == n_ / 2; }

    bool is_dealiased_out(int i1, int i2) const {
        int a = k_of(i1), b = k_of(i2);
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        int m = a > b ? a : b;
        return 3 * m >= n_;
    }

    // largest |xi| along one axis excluding the Nyquist line
    double max_axis_wavenumber() const { return (kTwoPi / length_) * (n_ / 2 - 1); }

    // largest resolved |xi| over the lattice (corner mode, Nyquist excluded)
    double max_wavenumber() const { return max_axis_wavenumber() * std::sqrt(2.0); }

    // smallest nonzero |xi|
    double min_wavenumber() const { return kTwoPi / length_; }

    bool same_as(const Grid& o) const { return n_ == o.n_ && length_ == o.length_; }

private:
    int n_;
    double length_;
};

}  // namespace qglab
