/*
 * fft.hpp — transforms between RealField and SpectralField via FFTW.
 *
 * Conventions: the forward transform is the plain unnormalized DFT sum
 * (the discrete analogue of the integral transform), the inverse divides
 * by n^2, so inverse(forward(f)) = f.  With cell weight (L/n)^2 the
 * Plancherel identity reads  integral |f|^2 = (L^2 / n^4) sum |fhat|^2.
 *
 * Plans are cached per grid size and created under a lock (FFTW planning
 * is not thread-safe); execution uses the new-array interface on per-call
 * buffers, which is re-entrant.  Plans are created with FFTW_ESTIMATE so
 * transform results are deterministic run to run.
 */

#pragma once

#include <fftw3.h>

#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "qglab/field.hpp"

namespace qglab {
namespace detail {

struct FftPlans {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

inline FftPlans& plans_for(int n) {
    static std::mutex mu;
    static std::map<int, FftPlans> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Complex> a(static_cast<std::size_t>(n) * n), b(a.size());
    FftPlans p;
    p.fwd = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.inv = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(n, p).first->second;
}

inline void run_fft(fftw_plan plan, std::vector<Complex>& in, std::vector<Complex>& out) {
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

// inverse without the Hermitian-symmetry check, for multiplier pipelines
// that preserve the symmetry by construction
inline RealField inverse_unchecked(const SpectralField& F) {
    int n = F.grid().n();
    std::vector<Complex> in = F.coeffs();
    std::vector<Complex> out(in.size());
    run_fft(plans_for(n).inv, in, out);
    double inv_n2 = 1.0 / (static_cast<double>(n) * n);
    std::vector<double> samples(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) samples[i] = out[i].real() * inv_n2;
    return RealField(F.grid(), std::move(samples));
}

}  // namespace detail

inline SpectralField forward_transform(const RealField& f) {
    if (!f.all_finite()) throw std::invalid_argument("forward_transform: non-finite samples");
    int n = f.grid().n();
    std::vector<Complex> in(f.samples().size());
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = Complex(f.samples()[i], 0.0);
    std::vector<Complex> out(in.size());
    detail::run_fft(detail::plans_for(n).fwd, in, out);
    SpectralField F(f.grid(), std::move(out));
    // the zero mode of mean-zero data is pure roundoff; clamp it
    F.zero_mode_clear();
    return F;
}

inline RealField inverse_transform(const SpectralField& F) {
    double scale = F.max_abs();
    double asym = F.hermitian_asymmetry();
    if (scale > 0.0 && asym > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "inverse_transform: broken Hermitian symmetry, max asymmetry " << asym
            << " exceeds 1e-12 * " << scale;
        throw std::invalid_argument(msg.str());
    }
    return detail::inverse_unchecked(F);
}

// composite-rectangle quadrature of (integral |f|^p)^(1/p); p = inf gives max|f|
inline double lp_norm(const RealField& f, double p) {
    if (std::isinf(p)) return f.max_abs();
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1 or inf");
    double cell = f.grid().dx() * f.grid().dx();
    double acc = 0.0;
    if (p == 2.0) {
        for (double v : f.samples()) acc += v * v;
    } else if (p == 1.0) {
        for (double v : f.samples()) acc += std::abs(v);
    } else {
        for (double v : f.samples()) acc += std::pow(std::abs(v), p);
    }
    return std::pow(cell * acc, 1.0 / p);
}

// L^2 norm evaluated on the spectral side through Plancherel
inline double l2_norm_spectral(const SpectralField& F) {
    const Grid& g = F.grid();
    double n2 = static_cast<double>(g.n()) * g.n();
    return g.length() / n2 * std::sqrt(F.coeff_energy());
}

inline double inner_l2(const RealField& a, const RealField& b) {
    if (!a.grid().same_as(b.grid())) throw std::invalid_argument("inner_l2: grid mismatch");
    double cell = a.grid().dx() * a.grid().dx();
    double acc = 0.0;
    for (std::size_t i = 0; i < a.samples().size(); ++i) acc += a.samples()[i] * b.samples()[i];
    return cell * acc;
}

}  // namespace qglab
