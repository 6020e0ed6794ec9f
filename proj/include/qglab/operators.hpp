/*
 * operators.hpp — Fourier-multiplier operators of the dissipative
 * dispersive quasi-geostrophic equation
 *
 *   d theta/dt + kappa (-Laplace)^(alpha/2) theta + u . grad theta + A u_2 = 0,
 *   u = (-R_2 theta, R_1 theta),
 *
 * with the fractional Laplacian  |xi|^alpha  and Riesz transforms
 * R_k = i xi_k / |xi|.  Since u_2 = R_1 theta, the dispersive forcing is
 * the skew-adjoint multiplier i A xi_1 / |xi|.
 *
 * The advection term is pseudo-spectral: velocities and gradients are
 * brought to physical space, multiplied pointwise, transformed back, and
 * dealiased by the two-thirds rule of the grid.
 */

#pragma once

#include <utility>

#include "qglab/fft.hpp"

namespace qglab {

struct PhysParams {
    double alpha = 1.0;  // dissipation order, in (0, 2]
    double kappa = 1.0;  // dissipation coefficient, > 0
    double A = 0.0;      // dispersion parameter (0 allowed as baseline)

    void check_valid() const {
        if (!(alpha > 0.0) || alpha > 2.0)
            throw std::invalid_argument("PhysParams: alpha must lie in (0, 2]");
        if (!(kappa > 0.0)) throw std::invalid_argument("PhysParams: kappa must be > 0");
    }

    // the theorems address alpha <= 1; larger alpha runs as a baseline
    bool inside_theorem_window() const { return alpha > 0.0 && alpha <= 1.0; }
};

namespace detail {

// applies a scalar multiplier m(k1, k2, |xi|) coefficient-wise; zero mode
// and Nyquist lines are cleared afterwards
template <typename M>
inline SpectralField apply_multiplier(const SpectralField& F, M&& m) {
    SpectralField out(F.grid());
    const Grid& g = F.grid();
    int n = g.n();
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) {
            if (i1 == 0 && i2 == 0) continue;
            out.at(i1, i2) = m(g.xi_of(i1), g.xi_of(i2), g.xi_norm(i1, i2)) * F.at(i1, i2);
        }
    }
    out.zero_mode_clear();
    out.zero_nyquist();
    return out;
}

inline void dealias_inplace(SpectralField& F) {
    const Grid& g = F.grid();
    int n = g.n();
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            if (g.is_dealiased_out(i1, i2)) F.at(i1, i2) = Complex(0.0, 0.0);
    F.zero_mode_clear();
}

// dealiased pointwise product of two spectral fields
inline SpectralField dealiased_product(const SpectralField& F, const SpectralField& G) {
    if (!F.grid().same_as(G.grid()))
        throw std::invalid_argument("dealiased_product: grid mismatch");
    RealField f = inverse_unchecked(F);
    RealField g = inverse_unchecked(G);
    for (std::size_t i = 0; i < f.samples().size(); ++i) f.samples()[i] *= g.samples()[i];
    f.remove_mean();
    SpectralField P = forward_transform(f);
    dealias_inplace(P);
    return P;
}

}  // namespace detail

inline SpectralField fractional_laplacian(const SpectralField& F, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("fractional_laplacian: alpha must be >= 0");
    return detail::apply_multiplier(F, [alpha](double, double, double r) {
        return Complex(std::pow(r, alpha), 0.0);
    });
}

inline SpectralField riesz(const SpectralField& F, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("riesz: axis must be 1 or 2");
    return detail::apply_multiplier(F, [axis](double x1, double x2, double r) {
        double xk = axis == 1 ? x1 : x2;
        return Complex(0.0, xk / r);
    });
}

inline SpectralField partial_derivative(const SpectralField& F, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("partial_derivative: axis must be 1 or 2");
    return detail::apply_multiplier(F, [axis](double x1, double x2, double) {
        return Complex(0.0, axis == 1 ? x1 : x2);
    });
}

// u = (-R_2 theta, R_1 theta); divergence-free by the multiplier identity
inline std::pair<SpectralField, SpectralField> perp_velocity(const SpectralField& theta) {
    SpectralField u1 = riesz(theta, 2);
    u1.scale(-1.0);
    return {std::move(u1), riesz(theta, 1)};
}

// u . grad theta, dealiased
inline SpectralField advection(const SpectralField& theta) {
    auto [u1, u2] = perp_velocity(theta);
    SpectralField t1 = partial_derivative(theta, 1);
    SpectralField t2 = partial_derivative(theta, 2);
    RealField a = detail::inverse_unchecked(u1);
    RealField b = detail::inverse_unchecked(u2);
    RealField c = detail::inverse_unchecked(t1);
    RealField d = detail::inverse_unchecked(t2);
    RealField prod(theta.grid());
    for (std::size_t i = 0; i < prod.samples().size(); ++i)
        prod.samples()[i] = a.samples()[i] * c.samples()[i] + b.samples()[i] * d.samples()[i];
    prod.remove_mean();
    SpectralField out = forward_transform(prod);
    detail::dealias_inplace(out);
    return out;
}

// spectral divergence max |i xi . uhat| of a velocity pair
inline double max_spectral_divergence(const SpectralField& u1, const SpectralField& u2) {
    const Grid& g = u1.grid();
    int n = g.n();
    double worst = 0.0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            Complex d = Complex(0.0, g.xi_of(i1)) * u1.at(i1, i2) +
                        Complex(0.0, g.xi_of(i2)) * u2.at(i1, i2);
            worst = std::max(worst, std::abs(d));
        }
    return worst;
}

}  // namespace qglab
