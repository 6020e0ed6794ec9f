/*
 * indices.hpp — admissible index windows, size conditions, and the
 * dispersion threshold, all in exact rational arithmetic.
 *
 * Subcritical window for (p, s) at dissipation order alpha in (0, 1]:
 *
 *     8/(4-alpha) <= p < 4/(2-alpha),
 *     2-alpha < s < min{ 1 + 2/p - alpha/2,  2 - (3/4 + 1/(2p)) alpha },
 *
 * with the time exponent r = alpha / (s - (1 + 2/p - alpha)), which lands
 * in (2, inf).  The critical line is s = 2 - alpha with strict p bounds
 * and rho = alpha / (1 - 2/p).
 *
 * Size condition for global solvability (constant C0 configurable, the
 * sharp constant is not computable):
 *
 *   ||theta0||_{H^s}    <= C0 kappa^((2-s)/alpha)
 *        [ min{ |A|, kappa^(1/(s+alpha-1)) |A|^((s+alpha-2)/(s+alpha-1)) } ]^((s-(2-alpha))/alpha)
 *   ||theta0||_{H^(s-1)} <= C0 kappa^((2-s)/alpha) |A|^((s-(2-alpha))/alpha)
 *
 * and the induced threshold
 *
 *   A0 = C max{ ||theta0||_{H^s}^((s+alpha-1)/(s+alpha-2)),
 *               ||theta0||_{H^s}, ||theta0||_{H^(s-1)} }^(alpha/(s-(2-alpha))).
 *
 * The vanishing-viscosity scenario couples kappa = A^(-beta) with
 * 0 < beta < (s+alpha-2)^2 / ((2-s)(s+alpha-2) + alpha); its size
 * conditions are exactly the ones above under that substitution.
 */

#pragma once

#include <cmath>
#include <sstream>

#include "qglab/rational.hpp"

namespace qglab {

struct SWindow {
    Rational lo;   // exclusive
    Rational hi;   // exclusive
    bool nonempty = false;
};

namespace detail {

inline void check_alpha_window(const Rational& alpha) {
    if (!(alpha > Rational(0)) || alpha > Rational(1))
        throw std::invalid_argument("indices: alpha must lie in (0, 1], got " + alpha.str());
}

inline Rational p_lower(const Rational& alpha) { return Rational(8) / (Rational(4) - alpha); }
inline Rational p_upper(const Rational& alpha) { return Rational(4) / (Rational(2) - alpha); }

}  // namespace detail

// s-window for given (alpha, p); p bound violations name the bound
inline SWindow admissible_indices(const Rational& alpha, const Rational& p) {
    detail::check_alpha_window(alpha);
    Rational plo = detail::p_lower(alpha);
    Rational phi = detail::p_upper(alpha);
    if (p < plo)
        throw std::invalid_argument("indices: p must satisfy p >= 8/(4-alpha) = " + plo.str() +
                                    ", got " + p.str());
    if (!(p < phi))
        throw std::invalid_argument("indices: p must satisfy p < 4/(2-alpha) = " + phi.str() +
                                    ", got " + p.str());
    SWindow w;
    w.lo = Rational(2) - alpha;
    Rational cap1 = Rational(1) + Rational(2) / p - alpha / Rational(2);
    Rational cap2 = Rational(2) - (Rational(3, 4) + Rational(1) / (Rational(2) * p)) * alpha;
    w.hi = rational_min(cap1, cap2);
    w.nonempty = w.lo < w.hi;
    return w;
}

inline Rational time_exponent_r(const Rational& alpha, const Rational& p, const Rational& s) {
    return alpha / (s - (Rational(1) + Rational(2) / p - alpha));
}

inline Rational critical_exponent_rho(const Rational& alpha, const Rational& p) {
    return alpha / (Rational(1) - Rational(2) / p);
}

struct IndexSet {
    Rational alpha;
    Rational p;
    Rational s;
    bool critical = false;

    Rational r() const {
        return critical ? critical_exponent_rho(alpha, p) : time_exponent_r(alpha, p, s);
    }
    Rational rho() const { return critical_exponent_rho(alpha, p); }

    double alpha_d() const { return alpha.value(); }
    double p_d() const { return p.value(); }
    double s_d() const { return s.value(); }
    double r_d() const { return r().value(); }
};

inline IndexSet subcritical_indices(const Rational& alpha, const Rational& p, const Rational& s) {
    SWindow w = admissible_indices(alpha, p);
    if (!(s > w.lo))
        throw std::invalid_argument("indices: s must satisfy s > 2-alpha = " + w.lo.str() +
                                    ", got " + s.str());
    if (!(s < w.hi))
        throw std::invalid_argument(
            "indices: s must satisfy s < min{1+2/p-alpha/2, 2-(3/4+1/(2p))alpha} = " + w.hi.str() +
            ", got " + s.str());
    return IndexSet{alpha, p, s, false};
}

inline IndexSet critical_indices(const Rational& alpha, const Rational& p) {
    if (!(alpha < Rational(1)))
        throw std::invalid_argument("indices: critical case needs alpha < 1, got " + alpha.str());
    detail::check_alpha_window(alpha);
    Rational plo = detail::p_lower(alpha);
    Rational phi = detail::p_upper(alpha);
    if (!(p > plo))
        throw std::invalid_argument("indices: critical case needs p > 8/(4-alpha) = " + plo.str() +
                                    ", got " + p.str());
    if (!(p < phi))
        throw std::invalid_argument("indices: p must satisfy p < 4/(2-alpha) = " + phi.str() +
                                    ", got " + p.str());
    return IndexSet{alpha, p, Rational(2) - alpha, true};
}

struct SizeCondition {
    bool holds_hs = false;
    bool holds_hs_minus1 = false;
    double rhs_hs = 0.0;
    double rhs_hs_minus1 = 0.0;

    bool holds() const { return holds_hs && holds_hs_minus1; }
};

inline SizeCondition evaluate_size_condition(const IndexSet& idx, double hs_norm,
                                             double hs_minus1_norm, double kappa, double A,
                                             double C0 = 1.0) {
    double alpha = idx.alpha_d();
    double s = idx.s_d();
    double absA = std::abs(A);
    double gap = (s - (2.0 - alpha)) / alpha;  // the exponent on the dispersion factor
    double kpow = std::pow(kappa, (2.0 - s) / alpha);
    double branch =
        std::min(absA, std::pow(kappa, 1.0 / (s + alpha - 1.0)) *
                           std::pow(absA, (s + alpha - 2.0) / (s + alpha - 1.0)));
    SizeCondition c;
    c.rhs_hs = C0 * kpow * std::pow(branch, gap);
    c.rhs_hs_minus1 = C0 * kpow * std::pow(absA, gap);
    c.holds_hs = hs_norm <= c.rhs_hs;
    c.holds_hs_minus1 = hs_minus1_norm <= c.rhs_hs_minus1;
    return c;
}

struct ThresholdPrediction {
    double A0 = 0.0;
    int dominant_branch = 0;  // 0: ||.||_{H^s}^((s+a-1)/(s+a-2)), 1: ||.||_{H^s}, 2: ||.||_{H^(s-1)}
};

inline ThresholdPrediction dispersion_threshold(const IndexSet& idx, double hs_norm,
                                                double hs_minus1_norm, double C = 1.0) {
    double alpha = idx.alpha_d();
    double s = idx.s_d();
    double b0 = std::pow(hs_norm, (s + alpha - 1.0) / (s + alpha - 2.0));
    double b1 = hs_norm;
    double b2 = hs_minus1_norm;
    ThresholdPrediction out;
    double m = b0;
    out.dominant_branch = 0;
    if (b1 > m) {
        m = b1;
        out.dominant_branch = 1;
    }
    if (b2 > m) {
        m = b2;
        out.dominant_branch = 2;
    }
    out.A0 = C * std::pow(m, alpha / (s - (2.0 - alpha)));
    return out;
}

// upper end of the admissible beta interval for kappa = A^(-beta)
inline Rational corollary_beta_max(const IndexSet& idx) {
    Rational d = idx.s + idx.alpha - Rational(2);
    return d * d / ((Rational(2) - idx.s) * d + idx.alpha);
}

inline void check_corollary_beta(const IndexSet& idx, const Rational& beta) {
    Rational bmax = corollary_beta_max(idx);
    if (!(beta > Rational(0)) || !(beta < bmax)) {
        std::ostringstream msg;
        msg << "vanishing-viscosity: beta must satisfy 0 < beta < (s+alpha-2)^2/((2-s)(s+alpha-2)+alpha) = "
            << bmax.str() << ", got " << beta.str();
        throw std::invalid_argument(msg.str());
    }
}

// size condition of the coupled system; identical to the base condition
// under the substitution kappa = A^(-beta)
inline SizeCondition evaluate_corollary_condition(const IndexSet& idx, double beta, double hs_norm,
                                                  double hs_minus1_norm, double A, double C0 = 1.0) {
    if (!(A > 0.0)) throw std::invalid_argument("vanishing-viscosity: A must be > 0");
    return evaluate_size_condition(idx, hs_norm, hs_minus1_norm, std::pow(A, -beta), A, C0);
}

// regularization level: 2^N <= (|A|/kappa)^((1/alpha)(s+alpha-2)/(s+alpha-1)) < 2^(N+1)
inline int regularization_level(const IndexSet& idx, double kappa, double A) {
    double alpha = idx.alpha_d();
    double s = idx.s_d();
    double e = (1.0 / alpha) * (s + alpha - 2.0) / (s + alpha - 1.0);
    double v = std::pow(std::abs(A) / kappa, e);
    return static_cast<int>(std::floor(std::log2(v)));
}

}  // namespace qglab
