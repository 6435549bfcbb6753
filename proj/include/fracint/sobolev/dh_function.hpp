#pragma once

#include <cmath>
#include <stdexcept>

#include "fracint/core/quadrature.hpp"

namespace fracint {

struct DhQuadrature {
    double rel_tol = 1e-8;
    int max_level = 9;
};

/// ‖φ 1_{(0,t)}‖²_{D^H} for a function given pointwise on (0, t).
///   H > 1/2:  σ² H(2H-1) · 2∫_0^t τ^{2H-2} ∫_0^{t-τ} φ(u)φ(u+τ) du dτ
///   H = 1/2:  σ² ∫_0^t φ²
///   H < 1/2:  σ² [ H(1-2H) ∫_0^t τ^{2H-2} ∫_0^{t-τ} (φ(u+τ)-φ(u))² du dτ
///                 + H ∫_0^t φ(u)² (u^{2H-1} + (t-u)^{2H-1}) du ]
/// The second term of the H < 1/2 form is the interaction with the zero
/// extension outside (0, t). φ may be integrably singular at the endpoints.
template <class F>
[[nodiscard]] double dh_norm_sq_function(F&& phi, double t, double H, double sigma, const DhQuadrature& q = {}) {
    if (!(H > 0.0 && H < 1.0)) throw std::domain_error("dh_norm_sq_function: H must lie in (0,1)");
    if (!(t > 0.0)) throw std::domain_error("dh_norm_sq_function: t must be positive");
    const double s2 = sigma * sigma;
    if (H == 0.5) {
        return s2 * quad::tanh_sinh([&](double u) { const double v = phi(u); return v * v; }, 0.0, t, q.rel_tol, q.max_level).value;
    }
    const double e = 2.0 * H - 2.0;
    if (H > 0.5) {
        auto lagged = [&](double, double tau, double) {
            const double inner = quad::tanh_sinh([&](double u) { return phi(u) * phi(u + tau); }, 0.0, t - tau,
                                                 q.rel_tol, q.max_level).value;
            return inner == 0.0 ? 0.0 : std::pow(tau, e) * inner;
        };
        return s2 * H * (2.0 * H - 1.0) * 2.0 * quad::tanh_sinh(lagged, 0.0, t, q.rel_tol, q.max_level).value;
    }
    auto lagged = [&](double, double tau, double) {
        const double inner = quad::tanh_sinh([&](double u) { const double d = phi(u + tau) - phi(u); return d * d; },
                                             0.0, t - tau, q.rel_tol, q.max_level).value;
        return inner == 0.0 ? 0.0 : std::pow(tau, e) * inner;
    };
    auto edge = [&](double u, double du, double dt) {
        const double v = phi(u);
        return v * v * (std::pow(du, 2.0 * H - 1.0) + std::pow(dt, 2.0 * H - 1.0));
    };
    const double intrinsic = quad::tanh_sinh(lagged, 0.0, t, q.rel_tol, q.max_level).value;
    const double boundary = quad::tanh_sinh(edge, 0.0, t, q.rel_tol, q.max_level).value;
    return s2 * (H * (1.0 - 2.0 * H) * intrinsic + H * boundary);
}

}  // namespace fracint
