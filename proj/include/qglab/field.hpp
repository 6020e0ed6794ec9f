/*
 * field.hpp — physical-space and Fourier-space field containers.
 *
 * RealField holds n x n samples of a mean-zero real scalar.  SpectralField
 * holds the full n x n complex coefficient table of the unnormalized
 * forward DFT (inverse divides by n^2).  Fields representing real data are
 * Hermitian-symmetric: coeff(-k) = conj(coeff(k)).
 *
 * The binary snapshot format shared across the project:
 *   magic "QGF1", little-endian u32 n, f64 L, f64 alpha, f64 kappa,
 *   f64 A, f64 t, then n*n f64 samples row-major.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qglab/grid.hpp"

namespace qglab {

using Complex = std::complex<double>;

struct SnapshotMeta {
    double alpha = 0.0;
    double kappa = 0.0;
    double A = 0.0;
    double t = 0.0;
};

class RealField {
public:
    explicit RealField(const Grid& grid) : grid_(grid), samples_(grid.size(), 0.0) {}
    RealField(const Grid& grid, std::vector<double> samples)
        : grid_(grid), samples_(std::move(samples)) {
        if (samples_.size() != grid_.size())
            throw std::invalid_argument("RealField: sample count does not match grid");
    }

    const Grid& grid() const { return grid_; }
    double& at(int i1, int i2) { return samples_[static_cast<std::size_t>(i1) * grid_.n() + i2]; }
    double at(int i1, int i2) const { return samples_[static_cast<std::size_t>(i1) * grid_.n() + i2]; }
    std::vector<double>& samples() { return samples_; }
    const std::vector<double>& samples() const { return samples_; }

    double max_abs() const {
        double m = 0.0;
        for (double v : samples_) m = std::max(m, std::abs(v));
        return m;
    }

    double mean() const {
        double s = 0.0;
        for (double v : samples_) s += v;
        return s / static_cast<double>(samples_.size());
    }

    bool all_finite() const {
        for (double v : samples_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    void remove_mean() {
        double m = mean();
        for (double& v : samples_) v -= m;
    }

    // invariants: finite entries, mean zero relative to the field scale
    void check_valid() const {
        if (!all_finite()) throw std::invalid_argument("RealField: non-finite samples");
        double scale = max_abs();
        if (scale > 0.0 && std::abs(mean()) > 1e-12 * scale)
            throw std::invalid_argument("RealField: mean is not zero (zero mode must be removed)");
    }

    void save(const std::string& path, const SnapshotMeta& meta) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("RealField::save: cannot open " + path);
        out.write("QGF1", 4);
        std::uint32_t n = static_cast<std::uint32_t>(grid_.n());
        double header[5] = {grid_.length(), meta.alpha, meta.kappa, meta.A, meta.t};
        out.write(reinterpret_cast<const char*>(&n), sizeof n);
        out.write(reinterpret_cast<const char*>(&header[0]), sizeof(double));
        out.write(reinterpret_cast<const char*>(&header[1]), 4 * sizeof(double));
        out.write(reinterpret_cast<const char*>(samples_.data()),
                  static_cast<std::streamsize>(samples_.size() * sizeof(double)));
        if (!out) throw std::runtime_error("RealField::save: write failed: " + path);
    }

    static RealField load(const std::string& path, SnapshotMeta* meta_out = nullptr) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("RealField::load: cannot open " + path);
        char magic[4];
        in.read(magic, 4);
        if (!in || std::memcmp(magic, "QGF1", 4) != 0)
            throw std::runtime_error("RealField::load: bad magic in " + path);
        std::uint32_t n = 0;
        double L = 0.0;
        SnapshotMeta meta;
        in.read(reinterpret_cast<char*>(&n), sizeof n);
        in.read(reinterpret_cast<char*>(&L), sizeof L);
        in.read(reinterpret_cast<char*>(&meta.alpha), sizeof(double));
        in.read(reinterpret_cast<char*>(&meta.kappa), sizeof(double));
        in.read(reinterpret_cast<char*>(&meta.A), sizeof(double));
        in.read(reinterpret_cast<char*>(&meta.t), sizeof(double));
        if (!in) throw std::runtime_error("RealField::load: truncated header in " + path);
        Grid g(static_cast<int>(n), L);
        std::vector<double> samples(g.size());
        in.read(reinterpret_cast<char*>(samples.data()),
                static_cast<std::streamsize>(samples.size() * sizeof(double)));
        if (!in) throw std::runtime_error("RealField::load: truncated samples in " + path);
        if (meta_out) *meta_out = meta;
        return RealField(g, std::move(samples));
    }

private:
    Grid grid_;
    std::vector<double> samples_;
};

class SpectralField {
public:
    explicit SpectralField(const Grid& grid) : grid_(grid), coeffs_(grid.size(), Complex(0.0, 0.0)) {}
    SpectralField(const Grid& grid, std::vector<Complex> coeffs)
        : grid_(grid), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != grid_.size())
            throw std::invalid_argument("SpectralField: coeff count does not match grid");
    }

    const Grid& grid() const { return grid_; }
    Complex& at(int i1, int i2) { return coeffs_[static_cast<std::size_t>(i1) * grid_.n() + i2]; }
    Complex at(int i1, int i2) const { return coeffs_[static_cast<std::size_t>(i1) * grid_.n() + i2]; }
    std::vector<Complex>& coeffs() { return coeffs_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    double max_abs() const {
        double m = 0.0;
        for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    // sum |coeff|^2 (Plancherel companion of the L^2 norm)
    double coeff_energy() const {
        double s = 0.0;
        for (const Complex& c : coeffs_) s += std::norm(c);
        return s;
    }

    void zero_mode_clear() { coeffs_[0] = Complex(0.0, 0.0); }

    void zero_nyquist() {
        int n = grid_.n();
        int h = n / 2;
        for (int i = 0; i < n; ++i) {
            at(h, i) = Complex(0.0, 0.0);
            at(i, h) = Complex(0.0, 0.0);
        }
    }

    // max |coeff(-k) - conj(coeff(k))| over the lattice
    double hermitian_asymmetry() const {
        int n = grid_.n();
        double worst = 0.0;
        for (int i1 = 0; i1 < n; ++i1) {
            int j1 = (n - i1) % n;
            for (int i2 = 0; i2 < n; ++i2) {
                int j2 = (n - i2) % n;
                Complex d = at(j1, j2) - std::conj(at(i1, i2));
                worst = std::max(worst, std::abs(d));
            }
        }
        return worst;
    }

    void scale(double c) {
        for (Complex& v : coeffs_) v *= c;
    }

private:
    Grid grid_;
    std::vector<Complex> coeffs_;
};

inline SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    if (!a.grid().same_as(b.grid()))
        throw std::invalid_argument("SpectralField: grid mismatch in difference");
    SpectralField out(a.grid());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out.coeffs()[i] = a.coeffs()[i] - b.coeffs()[i];
    return out;
}

inline SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    if (!a.grid().same_as(b.grid()))
        throw std::invalid_argument("SpectralField: grid mismatch in sum");
    SpectralField out(a.grid());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out.coeffs()[i] = a.coeffs()[i] + b.coeffs()[i];
    return out;
}

}  // namespace qglab
