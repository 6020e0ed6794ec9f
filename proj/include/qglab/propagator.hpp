/*
 * propagator.hpp — the exact linear semigroup and its decay measurements.
 *
 * T_A(t) multiplies each coefficient by exp(-kappa t |xi|^alpha)
 * exp(-i A t xi_1/|xi|): the dissipative factor damps shell j at rate
 * kappa 2^(alpha j), the dispersive factor is unimodular, and the two
 * commute with every dyadic block.  The semigroup property holds to
 * roundoff since it is a pointwise product of exponentials.
 *
 * dispersive_decay_curve measures the sup-norm of the pure dispersion
 * acting on the unit-shell projection (blocks -1, 0, 1) of a localized
 * field.  On a periodic box the free-space decay is only visible until
 * the fastest group velocity wraps around; samples past
 * L / (2 * speed_bound) are marked invalid, and a boundary-mass monitor
 * invalidates earlier wraps.
 *
 * strichartz_norm evaluates the tilde space-time Besov norm of the
 * sampled linear trajectory on a geometric time grid.  The admissible
 * window for (r, p) is
 *     (1/alpha)(1 - 2/p) <= 1/r < (1/alpha + 1/4)(1 - 2/p),
 * checked here in floating point for flagging only (the exact-rational
 * gate lives with the estimate lab).
 */

#pragma once

#include "qglab/trajectory.hpp"

namespace qglab {

struct PropagatorSpec {
    PhysParams params;
    std::vector<double> times;

    void check_valid() const {
        params.check_valid();
        if (times.empty()) throw std::invalid_argument("PropagatorSpec: empty times");
        if (times.front() < 0.0) throw std::invalid_argument("PropagatorSpec: negative time");
        for (std::size_t k = 0; k + 1 < times.size(); ++k)
            if (!(times[k] < times[k + 1]))
                throw std::invalid_argument("PropagatorSpec: times must be strictly increasing");
    }
};

inline SpectralField apply_propagator(const SpectralField& F, const PhysParams& par, double t) {
    if (t < 0.0) throw std::invalid_argument("apply_propagator: t must be >= 0");
    par.check_valid();
    return apply_linear_symbol(F, par, t);
}

// samples T_A(t) f on the given grid of times
inline Trajectory linear_trajectory(const SpectralField& f, const PhysParams& par,
                                    const std::vector<double>& times) {
    PropagatorSpec{par, times}.check_valid();
    Trajectory traj(f.grid(), par);
    for (double t : times) traj.push(t, apply_linear_symbol(f, par, t));
    // first sample time may be 0; push() demands strict increase only onward
    return traj;
}

struct DecaySample {
    double t = 0.0;
    double at = 0.0;        // |A| t
    double sup_norm = 0.0;
    bool valid = false;     // inside the wrap-free window
};

struct DecayCurve {
    std::vector<DecaySample> samples;
    double wrap_time = 0.0;
    double speed_bound = 0.0;

    // slope of log sup-norm vs log(1 + |A|t) over valid samples with |A|t in [at_lo, at_hi]
    double fitted_slope(double at_lo, double at_hi) const {
        std::vector<double> xs, ys;
        for (const auto& s : samples) {
            if (!s.valid || s.at < at_lo || s.at > at_hi) continue;
            if (s.sup_norm <= 0.0) continue;
            xs.push_back(std::log(1.0 + s.at));
            ys.push_back(std::log(s.sup_norm));
        }
        return linear_fit(xs, ys).slope;
    }
};

// sup-norm decay of exp(-A t R_1) applied to the unit-shell part of g
// (pure dispersion; kappa is ignored)
inline DecayCurve dispersive_decay_curve(const RealField& g, double A,
                                         const std::vector<double>& times,
                                         const DyadicProfile& prof) {
    SpectralField G = forward_transform(g);
    SpectralField band(G.grid());
    for (int j = -1; j <= 1; ++j) {
        SpectralField piece = prof.block_project(G, j);
        band = band + piece;
    }
    double band_l2 = l2_norm_spectral(band);
    double g_l2 = l2_norm_spectral(G);
    if (!(band_l2 > 1e-12 * std::max(g_l2, 1e-300)))
        throw std::invalid_argument(
            "dispersive_decay_curve: degenerate input, unit-shell projection carries no energy");

    // fastest group speed |A| |xi_2| / |xi|^2 over modes holding >= 0.1% of
    // the band's peak amplitude
    const Grid& grid = G.grid();
    int n = grid.n();
    double peak = band.max_abs();
    double speed = 0.0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            if (i1 == 0 && i2 == 0) continue;
            if (std::abs(band.at(i1, i2)) < 1e-3 * peak) continue;
            double x2 = grid.xi_of(i2);
            double r = grid.xi_norm(i1, i2);
            speed = std::max(speed, std::abs(x2) / (r * r));
        }
    speed *= std::abs(A);

    DecayCurve curve;
    curve.speed_bound = speed;
    curve.wrap_time = speed > 0.0 ? grid.length() / (2.0 * speed)
                                  : std::numeric_limits<double>::infinity();

    for (double t : times) {
        SpectralField moved = detail::apply_multiplier(band, [&](double x1, double, double r) {
            return std::polar(1.0, -A * t * (x1 / r));
        });
        RealField phys = detail::inverse_unchecked(moved);
        DecaySample s;
        s.t = t;
        s.at = std::abs(A) * t;
        s.sup_norm = phys.max_abs();
        s.valid = t <= curve.wrap_time;
        curve.samples.push_back(s);
    }
    return curve;
}

struct HeatDecayFit {
    std::vector<double> times;
    std::vector<double> norms;
    double fitted_rate = 0.0;  // exponent of the exponential decay in t
};

// L^p decay of the dissipative factor on shell j; the fitted rate must lie
// in kappa [2^(alpha(j-1)), 2^(alpha(j+1))] for shell-localized data
inline HeatDecayFit heat_block_decay(const SpectralField& f, int j, double kappa, double alpha,
                                     const std::vector<double>& times, const DyadicProfile& prof,
                                     double p = 2.0) {
    SpectralField block = prof.block_project(f, j);
    if (!(l2_norm_spectral(block) > 0.0))
        throw std::invalid_argument("heat_block_decay: empty shell");
    PhysParams par{alpha, kappa, 0.0};
    HeatDecayFit fit;
    std::vector<double> xs, ys;
    for (double t : times) {
        SpectralField decayed = apply_linear_symbol(block, par, t);
        double v = block_lp_norm(prof, decayed, j, p);
        fit.times.push_back(t);
        fit.norms.push_back(v);
        if (v > 0.0 && t > 0.0) {
            xs.push_back(t);
            ys.push_back(std::log(v));
        }
    }
    fit.fitted_rate = -linear_fit(xs, ys).slope;
    return fit;
}

struct StrichartzWindow {
    bool admissible = false;
    std::string violation;  // empty when admissible
};

inline StrichartzWindow strichartz_window_check(double alpha, double p, double r) {
    StrichartzWindow w;
    if (!(p > 2.0) || std::isinf(p)) {
        w.violation = "p must satisfy 2 < p < inf";
        return w;
    }
    if (!(r > 2.0) || std::isinf(r)) {
        w.violation = "r must satisfy 2 < r < inf";
        return w;
    }
    double lhs = (1.0 / alpha) * (1.0 - 2.0 / p);
    double rhs = (1.0 / alpha + 0.25) * (1.0 - 2.0 / p);
    if (!(lhs <= 1.0 / r + 1e-15)) {
        w.violation = "1/r must be >= (1/alpha)(1-2/p)";
        return w;
    }
    if (!(1.0 / r < rhs)) {
        w.violation = "1/r must be < (1/alpha + 1/4)(1-2/p)";
        return w;
    }
    w.admissible = true;
    return w;
}

struct StrichartzResult {
    double norm = 0.0;
    double quadrature_err = 0.0;  // truncation tail estimate
    bool admissible = false;
    std::string violation;
};

// tilde L^r(0, t_max; B^s_{p,2}) norm of T_A(.) f, q fixed to 2
inline StrichartzResult strichartz_norm(const SpectralField& f, const PhysParams& par, double r,
                                        double p, double s, double t_max,
                                        const DyadicProfile& prof) {
    par.check_valid();
    StrichartzWindow win = strichartz_window_check(par.alpha, p, r);

    double k_hi = std::pow(2.0, prof.j_hi());
    double t_min = 1e-4 / (par.kappa * std::pow(k_hi, par.alpha));
    std::vector<double> times = make_time_grid(t_min, t_max, 1.15);
    Trajectory traj = linear_trajectory(f, par, times);

    TimeBesovSpec spec;
    spec.r = r;
    spec.besov = BesovSpec{p, 2.0, s};
    spec.t_max = t_max;
    spec.mode = TimeMode::Tilde;
    TimeBesovResult res = time_besov_norm_with_tail(traj, spec, prof);

    StrichartzResult out;
    out.norm = res.value;
    out.quadrature_err = res.tail;
    out.admissible = win.admissible;
    out.violation = win.violation;
    return out;
}

}  // namespace qglab
