#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fracint/core/quadrature.hpp"

namespace fracint {

namespace detail {
inline void require_hurst(double H, const char* who) {
    if (!(H > 0.0 && H < 1.0)) throw std::domain_error(std::string(who) + ": H must lie in (0,1)");
}
}  // namespace detail

/// c_H = sqrt( ∫_0^∞ [(1+s)^{H-1/2} - s^{H-1/2}]² ds + 1/(2H) ).
[[nodiscard]] inline double c_h_constant(double H) {
    detail::require_hurst(H, "c_h_constant");
    const double a = H - 0.5;
    if (a == 0.0) return 1.0;
    // (1+s)^a - s^a written as s^a expm1(a log1p(1/s)) to avoid cancellation.
    auto diff = [a](double s) { return std::pow(s, a) * std::expm1(a * std::log1p(1.0 / s)); };
    auto near = quad::tanh_sinh([&](double, double s, double) { const double d = diff(s); return d * d; }, 0.0, 1.0, 1e-13);
    auto far = quad::exp_sinh([&](double, double d, double) { const double v = diff(1.0 + d); return v * v; }, 0.0, 1e-13);
    return std::sqrt(near.value + far.value + 0.5 / H);
}

/// Ratio ‖f‖_{D^H} / ‖f‖_{Ẇ^{1/2-H,2}} for the isometry-normalized K*_H,
/// equal to σ Γ(H+1/2) / c_H (and σ at H = 1/2).
[[nodiscard]] inline double c_sigma_h_constant(double sigma, double H) {
    detail::require_hurst(H, "c_sigma_h_constant");
    if (H == 0.5) return sigma;
    return sigma * std::tgamma(H + 0.5) / c_h_constant(H);
}

/// (σ/c_H)|Γ(H-1/2)|, the ratio constant for K*_H without the (H-1/2) factor.
[[nodiscard]] inline double c_sigma_h_constant_unnormalized(double sigma, double H) {
    detail::require_hurst(H, "c_sigma_h_constant_unnormalized");
    if (H == 0.5) return sigma;
    const double z = H - 0.5;
    const double gamma = z < 0.0 ? std::tgamma(z + 1.0) / z : std::tgamma(z);
    return sigma / c_h_constant(H) * std::abs(gamma);
}

/// ∫_ℝ (1 - cos(aω)) |ω|^{-1-ν} dω = kappa(ν)·|a|^ν for 0 < ν < 2.
[[nodiscard]] inline double cosine_power_constant(double nu) {
    if (!(nu > 0.0 && nu < 2.0)) throw std::domain_error("cosine_power_constant: need 0 < nu < 2");
    return std::numbers::pi / (std::tgamma(1.0 + nu) * std::sin(0.5 * std::numbers::pi * nu));
}

/// Gagliardo seminorm² on ℝ = gagliardo_fourier_constant(s) · ‖·‖²_{Ẇ^{s,2}}, 0 < s < 1/2.
[[nodiscard]] inline double gagliardo_fourier_constant(double s) {
    if (!(s > 0.0 && s < 0.5)) throw std::domain_error("gagliardo_fourier_constant: need 0 < s < 1/2");
    return 2.0 * cosine_power_constant(2.0 * s);
}

}  // namespace fracint
