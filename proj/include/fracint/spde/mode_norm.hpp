#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracint/core/quadrature.hpp"
#include "fracint/spde/spectral.hpp"

namespace fracint {

namespace detail {

// ∫_0^t f(x, x, t - x) dx split at x = 2^j / μ so that the e^{-μx} scale and
// every coarser scale get their own double-exponential panel.
template <class F>
double scale_split_integral(F&& f, double t, double mu, double rel_tol) {
    double acc = 0.0;
    double a = 0.0;
    double b = mu > 0.0 ? std::min(t, 1.0 / mu) : t;
    while (true) {
        const double lo = a, hi = b;
        const bool last = hi >= t;
        acc += quad::tanh_sinh(
                   [&](double x, double da, double db) {
                       const double from0 = lo == 0.0 ? da : x;
                       const double to_t = last ? db : t - x;
                       return f(x, from0, to_t);
                   },
                   lo, hi, rel_tol, 10)
                   .value;
        if (last) break;
        a = b;
        b = std::min(t, 2.0 * b);
    }
    return acc;
}

// (1 - e^{-2μx}) / (2μ), with the μ → 0 limit x.
inline double exp_window(double mu, double x) { return mu > 0.0 ? -std::expm1(-2.0 * mu * x) / (2.0 * mu) : x; }

}  // namespace detail

/// ‖e^{-μ(t-·)}‖²_{D^H(0,t)} / σ², reduced to one-dimensional integrals
/// over the lag τ:
///   H > 1/2:  2H(2H-1) ∫_0^t τ^{2H-2} e^{-μτ} W(t-τ) dτ
///   H < 1/2:  H(1-2H) ∫_0^t τ^{2H-2} (1-e^{-μτ})² W(t-τ) dτ
///             + H ∫_0^t e^{-2μw} (w^{2H-1} + (t-w)^{2H-1}) dw
/// with W(x) = (1 - e^{-2μx})/(2μ).
[[nodiscard]] inline double exp_kernel_norm_sq(double mu, double t, double H, double rel_tol = 1e-10) {
    if (!(t > 0.0)) throw std::domain_error("exp_kernel_norm_sq: t must be positive");
    if (!(H > 0.0 && H < 1.0)) throw std::domain_error("exp_kernel_norm_sq: H must lie in (0,1)");
    if (mu < 0.0) throw std::domain_error("exp_kernel_norm_sq: rate must be non-negative");
    if (H == 0.5) return detail::exp_window(mu, t);
    const double e = 2.0 * H - 2.0;
    if (H > 0.5) {
        const double lagged = detail::scale_split_integral(
            [&](double, double tau, double rest) { return std::pow(tau, e) * std::exp(-mu * tau) * detail::exp_window(mu, rest); },
            t, mu, rel_tol);
        return 2.0 * H * (2.0 * H - 1.0) * lagged;
    }
    const double intrinsic = detail::scale_split_integral(
        [&](double, double tau, double rest) {
            // (1 - e^{-μτ})/τ stays bounded as τ → 0.
            const double q = mu > 0.0 ? -std::expm1(-mu * tau) / tau : 0.0;
            return std::pow(tau, e + 2.0) * q * q * detail::exp_window(mu, rest);
        },
        t, mu, rel_tol);
    const double boundary = detail::scale_split_integral(
        [&](double, double w, double rest) {
            return std::exp(-2.0 * mu * w) * (std::pow(w, 2.0 * H - 1.0) + std::pow(rest, 2.0 * H - 1.0));
        },
        t, 2.0 * mu, rel_tol);
    return H * (1.0 - 2.0 * H) * intrinsic + H * boundary;
}

/// ‖(λ + λ_k)^α e^{-λ_k(t-·)}‖_{D^H(0,t)} for mode k (1-based) of the model.
[[nodiscard]] inline double mode_norm(const SpectralModel& model, std::size_t k, double t, double H, double sigma,
                                      double alpha) {
    if (k < 1) throw std::invalid_argument("mode_norm: modes are numbered from 1");
    return sigma * model.power_weight(k, alpha) * std::sqrt(exp_kernel_norm_sq(model.eigenvalue(k), t, H));
}

}  // namespace fracint
