// Littlewood-Paley machinery: partition of unity, block projections, the
// low-pass roll-off, Besov norms, and space-time norms.

#include <catch2/catch_amalgamated.hpp>

#include "qglab/besov.hpp"
#include "qglab/ensemble.hpp"
#include "qglab/propagator.hpp"

using namespace qglab;

namespace {

SpectralField random_band(const Grid& g, std::uint64_t seed, int j_min = 1, int j_max = 3,
                          double slope = -0.8) {
    return gaussian_spectral_member(EnsembleSpec{1, seed, slope, j_min, j_max}, g, 0);
}

RealField cosine(const Grid& g) {
    RealField f(g);
    for (int i1 = 0; i1 < g.n(); ++i1)
        for (int i2 = 0; i2 < g.n(); ++i2) f.at(i1, i2) = std::cos((kTwoPi / g.length()) * i1 * g.dx());
    return f;
}

}  // namespace

TEST_CASE("profile support and range") {
    REQUIRE(DyadicProfile::phi0_hat(0.5) == 0.0);
    REQUIRE(DyadicProfile::phi0_hat(2.0) == 0.0);
    REQUIRE(DyadicProfile::phi0_hat(1.0) == 1.0);
    for (double r = 0.55; r < 2.0; r += 0.05) {
        double v = DyadicProfile::phi0_hat(r);
        REQUIRE(v >= 0.0);
        REQUIRE(v <= 1.0);
    }
}

TEST_CASE("partition of unity over the resolved lattice") {
    for (double L : {kTwoPi, 16.0 * kTwoPi}) {
        DyadicProfile prof(Grid(64, L));
        REQUIRE(prof.partition_defect() <= 1e-10);
    }
}

TEST_CASE("a |xi| = 1 mode lives entirely in shell 0 and reconstructs") {
    Grid g(32, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F(g);
    double n2 = static_cast<double>(g.n()) * g.n();
    F.at(1, 0) = Complex(0.0, -0.5 * n2);
    F.at(g.n() - 1, 0) = Complex(0.0, 0.5 * n2);
    SpectralField b0 = prof.block_project(F, 0);
    REQUIRE(std::abs(b0.at(1, 0) - F.at(1, 0)) < 1e-10 * n2);
    SpectralField sum = prof.block_project(F, -1) + b0 + prof.block_project(F, 1);
    REQUIRE(std::abs(sum.at(1, 0) - F.at(1, 0)) < 1e-10 * n2);
}

TEST_CASE("blocks two shells apart do not interact") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F = random_band(g, 3, 0, 3);
    SpectralField twice = prof.block_project(prof.block_project(F, 1), 3);
    REQUIRE(twice.max_abs() == 0.0);
    REQUIRE(prof.block_project(SpectralField(g), 0).max_abs() == 0.0);
}

TEST_CASE("block of an out-of-range shell is the zero field") {
    Grid g(32, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F = random_band(g, 5, 1, 2);
    REQUIRE(prof.block_project(F, prof.j_hi() + 5).max_abs() == 0.0);
    REQUIRE(prof.block_project(F, prof.j_lo() - 5).max_abs() == 0.0);
}

TEST_CASE("low pass with large j is the identity, with small j zero") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F = random_band(g, 7, 1, 3);
    SpectralField all = prof.low_pass(F, prof.j_hi() + 4);
    double err = 0.0;
    for (std::size_t i = 0; i < F.coeffs().size(); ++i)
        err = std::max(err, std::abs(all.coeffs()[i] - F.coeffs()[i]));
    REQUIRE(err < 1e-10 * F.max_abs());
    REQUIRE(prof.low_pass(F, prof.j_lo() - 1).max_abs() == 0.0);
}

TEST_CASE("the high-pass tail has no energy below the cut") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F = random_band(g, 9, 0, 3);
    int N = 2;
    SpectralField tail = prof.high_pass(F, N + 3);  // 1 - S_(N+3)
    for (int j = prof.j_lo(); j <= N - 1; ++j)
        REQUIRE(prof.block_project(tail, j).max_abs() < 1e-14 * F.max_abs());
}

TEST_CASE("besov(2,2,0) of a cosine matches its L2 norm") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F = forward_transform(cosine(g));
    double b = besov_norm(F, BesovSpec{2, 2, 0}, prof);
    double l2 = lp_norm(cosine(g), 2.0);
    REQUIRE(b > 0.9 * l2);
    REQUIRE(b < 1.1 * l2);
}

TEST_CASE("block Besov norm is equivalent to the direct-weight Sobolev norm") {
    Grid g(128, kTwoPi);
    DyadicProfile prof(g);
    for (double s : {-0.5, 0.0, 1.05, 2.0}) {
        double env = std::pow(2.0, std::abs(s) + 1.0);
        for (std::uint64_t k = 0; k < 10; ++k) {
            SpectralField F = random_band(g, 600 + k, 0, 4);
            double blocks = sobolev_norm(F, s, prof);
            double direct = direct_sobolev_norm(F, s);
            REQUIRE(blocks / direct > 1.0 / env);
            REQUIRE(blocks / direct < env);
        }
    }
}

TEST_CASE("critical Sobolev norm is invariant under the dyadic rescaling") {
    double alpha = 0.7;
    Grid g(128, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F = random_band(g, 33, 1, 4);
    RealField f = detail::inverse_unchecked(F);

    // theta_lambda(x) = lambda^(alpha-1) theta(lambda x) with lambda = 2:
    // same samples on the halved box
    Grid g2(128, kTwoPi / 2.0);
    DyadicProfile prof2(g2);
    RealField f2(g2);
    for (std::size_t i = 0; i < f.samples().size(); ++i)
        f2.samples()[i] = std::pow(2.0, alpha - 1.0) * f.samples()[i];

    double a = sobolev_norm(forward_transform(f), 2.0 - alpha, prof);
    double b = sobolev_norm(forward_transform(f2), 2.0 - alpha, prof2);
    REQUIRE(std::abs(a - b) < 0.02 * a);
}

// With a partition of unity and at most two shells overlapping at any xi,
// the per-mode weight sum phi_j(xi)^2 lies in [1/2, 1].
TEST_CASE("almost orthogonality of the block decomposition") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    for (std::uint64_t k = 0; k < 10; ++k) {
        SpectralField F = random_band(g, 700 + k, 0, 3);
        double total = l2_norm_spectral(F);
        double sq = 0.0;
        for (int j = prof.j_lo(); j <= prof.j_hi(); ++j) {
            double b = block_lp_norm(prof, F, j, 2.0);
            sq += b * b;
        }
        REQUIRE(sq >= 0.5 * total * total * (1.0 - 1e-10));
        REQUIRE(sq <= total * total * (1.0 + 1e-10));
    }
}

TEST_CASE("blocks sum back to the field") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField F = random_band(g, 81, 1, 3);
    SpectralField sum(g);
    for (int j = prof.j_lo(); j <= prof.j_hi(); ++j) sum = sum + prof.block_project(F, j);
    double err = 0.0;
    for (std::size_t i = 0; i < F.coeffs().size(); ++i)
        err = std::max(err, std::abs(sum.coeffs()[i] - F.coeffs()[i]));
    REQUIRE(err <= 1e-10 * F.max_abs());
}

TEST_CASE("space-time norms of a constant-in-time trajectory") {
    Grid g(32, kTwoPi);
    DyadicProfile prof(g);
    PhysParams par{1.0, 1e-12, 0.0};  // essentially static linear motion
    SpectralField F = random_band(g, 55, 1, 2);

    Trajectory traj(g, par);
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) traj.push(t, F);

    double spatial = besov_norm(F, BesovSpec{2, 2, 0.4}, prof);

    TimeBesovSpec plain{3.0, BesovSpec{2, 2, 0.4}, 1.0, TimeMode::Plain};
    double v = time_besov_norm(traj, plain, prof);
    REQUIRE(v == Catch::Approx(std::pow(1.0, 1.0 / 3.0) * spatial).epsilon(1e-10));

    TimeBesovSpec tilde_sup{std::numeric_limits<double>::infinity(), BesovSpec{2, 2, 1.0}, 1.0,
                            TimeMode::Tilde};
    double w = time_besov_norm(traj, tilde_sup, prof);
    REQUIRE(w == Catch::Approx(sobolev_norm(F, 1.0, prof)).epsilon(1e-10));
}

TEST_CASE("single-shell linear decay has the closed-form time integral") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    PhysParams par{0.9, 0.7, 50.0};

    // one exact mode: |xi| fixed, decay rate kappa |xi|^alpha is scalar
    SpectralField F(g);
    double n2 = static_cast<double>(g.n()) * g.n();
    F.at(4, 0) = Complex(0.0, -0.5 * n2);
    F.at(g.n() - 4, 0) = Complex(0.0, 0.5 * n2);
    int j = 2;  // |xi| = 4 = 2^2

    double rate = par.kappa * std::pow(4.0, par.alpha);
    double r = 2.5;
    double t_end = 14.0 / (r * rate);
    Trajectory traj = linear_trajectory(F, par, make_time_grid(1e-5 / rate, t_end, 1.02));

    double block0 = block_lp_norm(prof, F, j, 2.0);
    double expect = block0 * std::pow(r * rate, -1.0 / r);

    TimeBesovSpec tilde{r, BesovSpec{2, 2, 0.0}, t_end, TimeMode::Tilde};
    auto res = time_besov_norm_with_tail(traj, tilde, prof);
    REQUIRE(std::abs(res.value - expect) < 0.01 * expect);
}

TEST_CASE("plain time norm is bounded by the tilde norm on linear trajectories") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    PhysParams par{1.0, 1.0, 30.0};
    SpectralField F = random_band(g, 97, 0, 3);
    Trajectory traj = linear_trajectory(F, par, make_time_grid(1e-4, 6.0, 1.1));
    for (double r : {2.0, 3.0}) {
        TimeBesovSpec plain{r, BesovSpec{3, 2, 0.5}, 6.0, TimeMode::Plain};
        TimeBesovSpec tilde{r, BesovSpec{3, 2, 0.5}, 6.0, TimeMode::Tilde};
        REQUIRE(time_besov_norm(traj, plain, prof) <=
                time_besov_norm(traj, tilde, prof) * (1.0 + 1e-9));
    }
}

TEST_CASE("empty trajectories and oversized horizons are rejected") {
    Grid g(16, kTwoPi);
    DyadicProfile prof(g);
    Trajectory empty(g, PhysParams{1.0, 1.0, 0.0});
    TimeBesovSpec spec{2.0, BesovSpec{2, 2, 0.0}, 1.0, TimeMode::Plain};
    REQUIRE_THROWS_AS(time_besov_norm(empty, spec, prof), std::invalid_argument);

    Trajectory one(g, PhysParams{1.0, 1.0, 0.0});
    one.push(0.0, SpectralField(g));
    one.push(0.5, SpectralField(g));
    REQUIRE_THROWS_AS(time_besov_norm(one, spec, prof), std::invalid_argument);
}
