// Bony decomposition pieces, reconstruction, and the block commutator.

#include <catch2/catch_amalgamated.hpp>

#include "qglab/ensemble.hpp"
#include "qglab/paraproduct.hpp"

using namespace qglab;

namespace {

SpectralField random_band(const Grid& g, std::uint64_t seed, int j_min, int j_max,
                          double slope = -0.8) {
    return gaussian_spectral_member(EnsembleSpec{1, seed, slope, j_min, j_max}, g, 0);
}

double rel_l2(const SpectralField& err, const SpectralField& ref) {
    double scale = l2_norm_spectral(ref);
    return scale > 0.0 ? l2_norm_spectral(err) / scale : l2_norm_spectral(err);
}

RealField wave(const Grid& g, int k1, int k2) {
    RealField f(g);
    for (int i1 = 0; i1 < g.n(); ++i1)
        for (int i2 = 0; i2 < g.n(); ++i2) {
            double x1 = g.dx() * i1, x2 = g.dx() * i2;
            f.at(i1, i2) = std::sin((kTwoPi / g.length()) * (k1 * x1 + k2 * x2));
        }
    return f;
}

// modes with |xi| exactly 2^j sit in block j alone (the neighbors vanish
// at the dyadic endpoints), which gives single-shell test fields
SpectralField pure_shell(const Grid& g, int j, std::uint64_t seed) {
    int k = 1 << j;
    RealField f = wave(g, k, 0);
    RealField h = wave(g, 0, k);
    double c = 0.25 + 0.5 * uniform01(splitmix64(seed));
    for (std::size_t i = 0; i < f.samples().size(); ++i) f.samples()[i] += c * h.samples()[i];
    return forward_transform(f);
}

}  // namespace

TEST_CASE("low-high paraproduct with well-separated shells is the plain product") {
    Grid g(128, kTwoPi);
    DyadicProfile prof(g);
    SpectralField f = pure_shell(g, 0, 1);  // |xi| = 1 modes only
    SpectralField h = pure_shell(g, 4, 2);  // |xi| = 16 modes only
    SpectralField para = para_low_high(f, h, prof);
    SpectralField direct = detail::dealiased_product(f, h);
    REQUIRE(rel_l2(para - direct, direct) < 1e-10);
}

TEST_CASE("paraproduct with zero input vanishes and checks grids") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField f = random_band(g, 3, 1, 3);
    REQUIRE(para_low_high(f, SpectralField(g), prof).max_abs() == 0.0);
    Grid g2(32, kTwoPi);
    REQUIRE_THROWS_AS(para_low_high(f, SpectralField(g2), prof), std::invalid_argument);
    REQUIRE_THROWS_AS(remainder(f, SpectralField(g2), prof), std::invalid_argument);
}

TEST_CASE("paraproduct is bilinear in each slot") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField f = random_band(g, 5, 0, 2);
    SpectralField h = random_band(g, 6, 1, 3);
    SpectralField f2 = f;
    f2.scale(2.5);
    SpectralField a = para_low_high(f2, h, prof);
    SpectralField b = para_low_high(f, h, prof);
    b.scale(2.5);
    REQUIRE(rel_l2(a - b, a) < 1e-12);
    SpectralField h3 = h;
    h3.scale(-3.0);
    SpectralField c = para_low_high(f, h3, prof);
    SpectralField d = para_low_high(f, h, prof);
    d.scale(-3.0);
    REQUIRE(rel_l2(c - d, c) < 1e-12);
}

TEST_CASE("remainder of shells four apart is zero") {
    Grid g(128, kTwoPi);
    DyadicProfile prof(g);
    SpectralField f = pure_shell(g, 1, 7);
    SpectralField h = pure_shell(g, 5, 8);
    REQUIRE(l2_norm_spectral(remainder(f, h, prof)) < 1e-12 * l2_norm_spectral(f));
}

TEST_CASE("remainder is symmetric") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField f = random_band(g, 9, 0, 3);
    SpectralField h = random_band(g, 10, 0, 3);
    SpectralField a = remainder(f, h, prof);
    SpectralField b = remainder(h, f, prof);
    REQUIRE(rel_l2(a - b, a) < 1e-12);
}

TEST_CASE("Bony reconstruction matches the direct product on random pairs") {
    Grid g(128, kTwoPi);
    DyadicProfile prof(g);
    for (std::uint64_t s = 0; s < 10; ++s) {
        SpectralField f = random_band(g, 100 + s, 0, 4);
        SpectralField h = random_band(g, 200 + s, 0, 4);
        REQUIRE(bony_reconstruct(f, h, prof).residual < 1e-8);
    }
}

TEST_CASE("Bony reconstruction of a zero factor is exactly zero") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField h = random_band(g, 11, 1, 3);
    auto rec = bony_reconstruct(SpectralField(g), h, prof);
    REQUIRE(rec.sum.max_abs() == 0.0);
    REQUIRE(rec.residual == 0.0);
}

TEST_CASE("single-mode square reconstructs sin^2 with the mean removed") {
    Grid g(64, kTwoPi);
    DyadicProfile prof(g);
    SpectralField f = forward_transform(wave(g, 1, 0));
    auto rec = bony_reconstruct(f, f, prof);
    RealField got = inverse_transform(rec.sum);
    // sin^2(x1) with the mean removed is -cos(2 x1)/2
    double err = 0.0;
    for (int i1 = 0; i1 < g.n(); ++i1)
        for (int i2 = 0; i2 < g.n(); ++i2) {
            double x1 = g.dx() * i1;
            err = std::max(err, std::abs(got.at(i1, i2) + 0.5 * std::cos(2.0 * x1)));
        }
    REQUIRE(err < 1e-10);
}

TEST_CASE("commutator with a bottom-shell multiplier is small") {
    Grid g(128, kTwoPi);
    DyadicProfile prof(g);
    SpectralField h = random_band(g, 14, 4, 4);
    int j = 4;
    // lowering f's shell shrinks the commutator (it scales with grad f)
    double prev = std::numeric_limits<double>::infinity();
    for (int jf = 2; jf >= 0; --jf) {
        SpectralField f = random_band(g, 13, jf, jf);
        f.scale(1.0 / l2_norm_spectral(f));
        double comm = l2_norm_spectral(commutator(f, j, h, prof));
        REQUIRE(comm < prev);
        prev = comm;
    }
    SpectralField f0 = random_band(g, 13, 0, 0);
    REQUIRE(l2_norm_spectral(commutator(f0, j, SpectralField(g), prof)) == 0.0);
}

TEST_CASE("commutator vanishes when every decomposition piece vanishes") {
    Grid g(256, kTwoPi);
    DyadicProfile prof(g);
    // f two shells below j, g two shells above j: all five pieces die
    SpectralField f = pure_shell(g, 2, 15);
    SpectralField h = pure_shell(g, 6, 16);
    int j = 4;
    double comm = l2_norm_spectral(commutator(f, j, h, prof));
    REQUIRE(comm < 1e-10 * (l2_norm_spectral(f) * l2_norm_spectral(h)));
}

TEST_CASE("five-piece commutator split has roundoff residual") {
    Grid g(128, kTwoPi);
    DyadicProfile prof(g);
    for (std::uint64_t s = 0; s < 5; ++s) {
        SpectralField f = random_band(g, 300 + s, 0, 4);
        SpectralField h = random_band(g, 400 + s, 0, 4);
        int j = 1 + static_cast<int>(s % 4);
        REQUIRE(commutator_decomposition_residual(f, j, h, prof) < 1e-8);
    }
}
