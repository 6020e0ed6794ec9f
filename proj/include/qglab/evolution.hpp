/*
 * evolution.hpp — time integration of the full equation and of the
 * frozen-velocity linear sub-problems.
 *
 * The linear part (dissipation + dispersion) is diagonal in Fourier space,
 * so the stepper advances the exact linear flow and applies a classical
 * fourth-order Runge-Kutta stage ladder to the advection term only
 * (Lawson integrating-factor RK4).  Linear runs are exact to roundoff per
 * step; only the advection limits dt through the CFL rule
 *
 *     dt = min(dt_fixed, c_cfl * dx / max|u|).
 *
 * Blow-up is flagged on NaN or when the critical-space norm exceeds 1e6
 * times its initial value; the trajectory built so far is returned with
 * the flag set, which the threshold scans read as loss of regularity.
 */

#pragma once

#include <functional>
#include <set>

#include "qglab/propagator.hpp"

namespace qglab {

struct SimConfig {
    PhysParams params;
    int n = 128;
    double length = kTwoPi;
    double dt_fixed = 0.0;  // 0 disables the fixed cap; CFL still applies
    double c_cfl = 0.5;
    double t_end = 1.0;
    std::vector<double> snapshot_times;  // 0 and t_end are always included
    bool nonlinear = true;
    double diag_s = 0.0;  // 0 resolves to the critical regularity 2 - alpha
    double blowup_factor = 1e6;

    Grid grid() const { return Grid(n, length); }
    double diag_regularity() const { return diag_s != 0.0 ? diag_s : 2.0 - params.alpha; }

    void check_valid() const {
        params.check_valid();
        if (!(t_end > 0.0)) throw std::invalid_argument("SimConfig: t_end must be > 0");
        if (!(c_cfl > 0.0) || c_cfl > 1.0)
            throw std::invalid_argument("SimConfig: c_cfl must lie in (0, 1]");
        if (dt_fixed < 0.0) throw std::invalid_argument("SimConfig: dt_fixed must be >= 0");
    }
};

struct DiagnosticsRow {
    double t = 0.0;
    double l2 = 0.0;
    double hs = 0.0;
    double hs_minus1 = 0.0;
    double dt = 0.0;
    double max_u = 0.0;
};

struct RunResult {
    Trajectory traj;
    std::vector<DiagnosticsRow> diagnostics;
    bool blown_up = false;
    double blowup_time = 0.0;
};

namespace detail {

// right-hand side of the advection part: -dealias(u . grad theta) + forcing
using RhsFn = std::function<SpectralField(double t, const SpectralField& state)>;

inline SpectralField nonlinear_rhs(const SpectralField& state) {
    SpectralField adv = advection(state);
    adv.scale(-1.0);
    return adv;
}

// u . grad theta with u taken from a frozen velocity field pair
inline SpectralField frozen_advection(const SpectralField& theta, const RealField& u1,
                                      const RealField& u2) {
    RealField g1 = inverse_unchecked(partial_derivative(theta, 1));
    RealField g2 = inverse_unchecked(partial_derivative(theta, 2));
    RealField prod(theta.grid());
    for (std::size_t i = 0; i < prod.samples().size(); ++i)
        prod.samples()[i] = u1.samples()[i] * g1.samples()[i] + u2.samples()[i] * g2.samples()[i];
    prod.remove_mean();
    SpectralField out = forward_transform(prod);
    dealias_inplace(out);
    return out;
}

inline SpectralField axpy(const SpectralField& x, double a, const SpectralField& y) {
    SpectralField out(x.grid());
    for (std::size_t i = 0; i < out.coeffs().size(); ++i)
        out.coeffs()[i] = x.coeffs()[i] + a * y.coeffs()[i];
    return out;
}

// one Lawson-RK4 step: exact linear flow, classical stages on the rest
inline SpectralField lawson_rk4_step(const SpectralField& state, const PhysParams& par, double t,
                                     double dt, const RhsFn& rhs) {
    SpectralField k1 = rhs(t, state);
    SpectralField ua = apply_linear_symbol(axpy(state, 0.5 * dt, k1), par, 0.5 * dt);
    SpectralField k2 = rhs(t + 0.5 * dt, ua);
    SpectralField ub = axpy(apply_linear_symbol(state, par, 0.5 * dt), 0.5 * dt, k2);
    SpectralField k3 = rhs(t + 0.5 * dt, ub);
    SpectralField uc =
        axpy(apply_linear_symbol(state, par, dt), dt, apply_linear_symbol(k3, par, 0.5 * dt));
    SpectralField k4 = rhs(t + dt, uc);

    SpectralField out = apply_linear_symbol(axpy(state, dt / 6.0, k1), par, dt);
    out = axpy(out, dt / 3.0, apply_linear_symbol(axpy(k2, 1.0, k3), par, 0.5 * dt));
    out = axpy(out, dt / 6.0, k4);
    return out;
}

}  // namespace detail

// single nonlinear step (velocity from the state itself)
inline SpectralField step_nonlinear(const SpectralField& state, const SimConfig& cfg, double dt,
                                    double t = 0.0) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_nonlinear: dt must be > 0");
    detail::RhsFn rhs = [&cfg](double, const SpectralField& s) {
        if (!cfg.nonlinear) return SpectralField(s.grid());
        return detail::nonlinear_rhs(s);
    };
    return detail::lawson_rk4_step(state, cfg.params, t, dt, rhs);
}

// single frozen-velocity step; velocity (and optional forcing) interpolated
// from stored trajectories
inline SpectralField step_frozen(const SpectralField& state, const Trajectory& u_source,
                                 const Trajectory* forcing, const SimConfig& cfg, double dt,
                                 double t) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_frozen: dt must be > 0");
    if (t + dt > u_source.times.back() * (1.0 + 1e-12) + 1e-300)
        throw std::invalid_argument("step_frozen: velocity trajectory does not cover [t, t+dt]");
    detail::RhsFn rhs = [&](double tau, const SpectralField& s) {
        SpectralField theta_n = u_source.reconstruct(tau);
        auto [v1, v2] = perp_velocity(theta_n);
        SpectralField adv =
            detail::frozen_advection(s, detail::inverse_unchecked(v1), detail::inverse_unchecked(v2));
        adv.scale(-1.0);
        if (forcing) adv = adv + forcing->reconstruct(tau);
        return adv;
    };
    return detail::lawson_rk4_step(state, cfg.params, t, dt, rhs);
}

namespace detail {

struct MarchHooks {
    // returns the advecting velocity for the CFL bound at time t
    std::function<double(double t, const SpectralField& state)> max_speed;
    std::function<SpectralField(double t, const SpectralField& state, double dt)> step;
};

inline RunResult march(const SpectralField& theta0_hat, const SimConfig& cfg,
                       const MarchHooks& hooks) {
    cfg.check_valid();
    Grid grid = theta0_hat.grid();

    std::set<double> snap_set(cfg.snapshot_times.begin(), cfg.snapshot_times.end());
    snap_set.insert(0.0);
    snap_set.insert(cfg.t_end);
    for (double t : snap_set)
        if (t < 0.0 || t > cfg.t_end)
            throw std::invalid_argument("SimConfig: snapshot times must lie in [0, t_end]");
    std::vector<double> snaps(snap_set.begin(), snap_set.end());

    SpectralField state = theta0_hat;
    dealias_inplace(state);
    state.zero_nyquist();

    double s_diag = cfg.diag_regularity();
    double crit0 = direct_sobolev_norm(state, 2.0 - cfg.params.alpha);

    RunResult result{Trajectory(grid, cfg.params), {}, false, 0.0};
    double t = 0.0;
    std::size_t next_snap = 0;

    auto record = [&](double dt_used, double max_u) {
        result.traj.push(t, state);
        DiagnosticsRow row;
        row.t = t;
        row.l2 = l2_norm_spectral(state);
        row.hs = direct_sobolev_norm(state, s_diag);
        row.hs_minus1 = direct_sobolev_norm(state, s_diag - 1.0);
        row.dt = dt_used;
        row.max_u = max_u;
        result.diagnostics.push_back(row);
    };

    record(0.0, hooks.max_speed(0.0, state));
    next_snap = 1;

    const double dx = grid.dx();
    while (t < cfg.t_end * (1.0 - 1e-15)) {
        double max_u = hooks.max_speed(t, state);
        if (!std::isfinite(max_u)) {
            result.blown_up = true;
            result.blowup_time = t;
            break;
        }
        double dt = cfg.dt_fixed > 0.0 ? cfg.dt_fixed : std::numeric_limits<double>::infinity();
        if (max_u > 0.0) dt = std::min(dt, cfg.c_cfl * dx / max_u);
        if (!std::isfinite(dt)) dt = cfg.t_end;  // zero velocity, purely linear motion
        double target = snaps[next_snap];
        bool lands = t + dt >= target * (1.0 - 1e-15);
        if (lands) dt = target - t;

        state = hooks.step(t, state, dt);
        t = lands ? target : t + dt;

        double crit = direct_sobolev_norm(state, 2.0 - cfg.params.alpha);
        if (!std::isfinite(crit) || (crit0 > 0.0 && crit > cfg.blowup_factor * crit0)) {
            result.blown_up = true;
            result.blowup_time = t;
            break;
        }

        if (lands) {
            record(dt, max_u);
            ++next_snap;
            if (next_snap >= snaps.size()) break;
        }
    }

    result.traj.blown_up = result.blown_up;
    result.traj.blowup_time = result.blowup_time;
    return result;
}

inline double speed_of(const SpectralField& state) {
    auto [u1, u2] = perp_velocity(state);
    RealField a = inverse_unchecked(u1);
    RealField b = inverse_unchecked(u2);
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples().size(); ++i) {
        double s = std::hypot(a.samples()[i], b.samples()[i]);
        m = std::max(m, s);
    }
    return m;
}

}  // namespace detail

// full nonlinear run from physical initial data
inline RunResult run(const RealField& theta0, const SimConfig& cfg) {
    theta0.check_valid();
    detail::MarchHooks hooks;
    hooks.max_speed = [&cfg](double, const SpectralField& s) {
        return cfg.nonlinear ? detail::speed_of(s) : 0.0;
    };
    hooks.step = [&cfg](double t, const SpectralField& s, double dt) {
        return step_nonlinear(s, cfg, dt, t);
    };
    return detail::march(forward_transform(theta0), cfg, hooks);
}

// frozen-velocity run: advecting field comes from the given trajectory
inline RunResult run_frozen(const SpectralField& theta0_hat, const Trajectory& u_source,
                            const Trajectory* forcing, const SimConfig& cfg) {
    detail::MarchHooks hooks;
    hooks.max_speed = [&u_source](double t, const SpectralField&) {
        return detail::speed_of(u_source.reconstruct(t));
    };
    hooks.step = [&](double t, const SpectralField& s, double dt) {
        return step_frozen(s, u_source, forcing, cfg, dt, t);
    };
    return detail::march(theta0_hat, cfg, hooks);
}

}  // namespace qglab
