/*
 * paraproduct.hpp — Bony decomposition and the block commutator.
 *
 * With S_l the low-pass below shell l-3 and Delta_l the blocks,
 *
 *   T_f g   = sum_l  S_l f  Delta_l g            (low-high)
 *   R(f, g) = sum_l sum_{|k-l|<=2} Delta_k f Delta_l g   (diagonal)
 *   f g     = T_f g + R(f, g) + T_g f,
 *
 * an exact partition of the shell-pair lattice, so the reconstruction
 * residual on band-limited inputs is pure roundoff.  Products inside the
 * sums reuse the grid's dealiasing rule.
 *
 * The commutator [f, Delta_j] g = f Delta_j g - Delta_j(f g) splits as
 *
 *   [T_f, Delta_j] g + R(f, Delta_j g) + T_{Delta_j g} f
 *       - Delta_j R(f, g) - Delta_j T_g f,
 *
 * which is the identity behind the commutator estimate; the residual of
 * this five-piece split is checked numerically.
 */

#pragma once

#include "qglab/dyadic.hpp"

namespace qglab {
namespace detail {

inline void require_same_grid(const SpectralField& f, const SpectralField& g, const char* who) {
    if (!f.grid().same_as(g.grid()))
        throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

}  // namespace detail

inline SpectralField para_low_high(const SpectralField& f, const SpectralField& g,
                                   const DyadicProfile& prof) {
    detail::require_same_grid(f, g, "para_low_high");
    SpectralField acc(f.grid());
    for (int l = prof.j_lo(); l <= prof.j_hi(); ++l) {
        SpectralField low = prof.low_pass(f, l);
        if (low.max_abs() == 0.0) continue;
        SpectralField blk = prof.block_project(g, l);
        if (blk.max_abs() == 0.0) continue;
        acc = acc + detail::dealiased_product(low, blk);
    }
    return acc;
}

inline SpectralField remainder(const SpectralField& f, const SpectralField& g,
                               const DyadicProfile& prof) {
    detail::require_same_grid(f, g, "remainder");
    int lo = prof.j_lo(), hi = prof.j_hi();
    std::vector<SpectralField> fb, gb;
    fb.reserve(hi - lo + 1);
    gb.reserve(hi - lo + 1);
    for (int j = lo; j <= hi; ++j) {
        fb.push_back(prof.block_project(f, j));
        gb.push_back(prof.block_project(g, j));
    }
    SpectralField acc(f.grid());
    for (int l = lo; l <= hi; ++l) {
        if (gb[l - lo].max_abs() == 0.0) continue;
        for (int k = std::max(lo, l - 2); k <= std::min(hi, l + 2); ++k) {
            if (fb[k - lo].max_abs() == 0.0) continue;
            acc = acc + detail::dealiased_product(fb[k - lo], gb[l - lo]);
        }
    }
    return acc;
}

struct BonyReconstruction {
    SpectralField sum;        // T_f g + R(f,g) + T_g f
    double residual = 0.0;    // relative to the dealiased direct product
};

inline BonyReconstruction bony_reconstruct(const SpectralField& f, const SpectralField& g,
                                           const DyadicProfile& prof) {
    detail::require_same_grid(f, g, "bony_reconstruct");
    SpectralField sum = para_low_high(f, g, prof) + remainder(f, g, prof) + para_low_high(g, f, prof);
    SpectralField direct = detail::dealiased_product(f, g);
    double scale = l2_norm_spectral(direct);
    double err = l2_norm_spectral(sum - direct);
    BonyReconstruction out{std::move(sum), scale > 0.0 ? err / scale : err};
    return out;
}

// [f, Delta_j] g = f Delta_j g - Delta_j (f g), dealiased products
inline SpectralField commutator(const SpectralField& f, int j, const SpectralField& g,
                                const DyadicProfile& prof) {
    detail::require_same_grid(f, g, "commutator");
    SpectralField blk = prof.block_project(g, j);
    SpectralField left = detail::dealiased_product(f, blk);
    SpectralField right = prof.block_project(detail::dealiased_product(f, g), j);
    return left - right;
}

// residual of the five-piece commutator split, relative to the commutator
inline double commutator_decomposition_residual(const SpectralField& f, int j,
                                                const SpectralField& g,
                                                const DyadicProfile& prof) {
    SpectralField direct = commutator(f, j, g, prof);

    SpectralField blk_g = prof.block_project(g, j);
    SpectralField piece1 =
        para_low_high(f, blk_g, prof) - prof.block_project(para_low_high(f, g, prof), j);
    SpectralField piece2 = remainder(f, blk_g, prof);
    SpectralField piece3 = para_low_high(blk_g, f, prof);
    SpectralField piece4 = prof.block_project(remainder(f, g, prof), j);
    SpectralField piece5 = prof.block_project(para_low_high(g, f, prof), j);

    SpectralField sum = piece1 + piece2 + piece3 - piece4 - piece5;
    double scale = l2_norm_spectral(direct);
    double err = l2_norm_spectral(sum - direct);
    return scale > 0.0 ? err / scale : err;
}

}  // namespace qglab
