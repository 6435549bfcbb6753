#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracint/core/quadrature.hpp"

namespace fracint {

struct DivergenceOptions {
    int levels = 30;          // dyadic cut-offs ε_L = τ 2^{-L}, L = 1..levels
    double ratio_margin = 0.05;  // diverged iff Δ_L/Δ_{L-1} >= 2^{-margin}
    double rel_tol = 1e-9;
};

/// Partial values V_L of a singular integral under dyadic refinement and
/// the verdict drawn from them.
struct RefinementVerdict {
    std::vector<double> trace;
    double value = 0.0;  // tail-extrapolated when finite, last partial value otherwise
    double increment_ratio = 0.0;
    double last_relative_change = 0.0;
    bool diverged = false;
};

/// Classifies a refinement trace by the ratio of its last two increments.
/// Convergent power-type tails give a ratio 2^{-a} with a > 0; logarithmic
/// or power divergence gives a ratio of at least 1.
[[nodiscard]] inline RefinementVerdict classify_refinement(std::vector<double> trace, double ratio_margin) {
    RefinementVerdict v;
    v.trace = std::move(trace);
    const auto n = v.trace.size();
    if (n == 0) return v;
    v.value = v.trace.back();
    if (n < 3) return v;
    const double d1 = v.trace[n - 1] - v.trace[n - 2];
    const double d0 = v.trace[n - 2] - v.trace[n - 3];
    v.last_relative_change = v.value != 0.0 ? std::abs(d1 / v.value) : 0.0;
    if (d1 == 0.0) return v;
    if (d0 == 0.0) {
        v.increment_ratio = std::numeric_limits<double>::infinity();
        v.diverged = true;
        return v;
    }
    v.increment_ratio = std::abs(d1 / d0);
    v.diverged = v.increment_ratio >= std::exp2(-ratio_margin);
    if (!v.diverged) v.value += d1 * v.increment_ratio / (1.0 - v.increment_ratio);
    return v;
}

/// ∫_0^τ G(u)² du + ∫_0^τ∫_0^τ (G(u)-G(v))² |u-v|^{2H-2} du dv for H < 1/2,
/// evaluated on (ε_L, τ) for shrinking ε_L.
template <class G>
[[nodiscard]] RefinementVerdict condition_singular(G&& g, double tau, double H, const DivergenceOptions& opt = {}) {
    if (!(H > 0.0 && H < 0.5)) throw std::domain_error("condition_singular: needs H in (0, 1/2)");
    if (!(tau > 0.0)) throw std::domain_error("condition_singular: tau must be positive");
    const double e = 2.0 * H - 2.0;
    const auto& gl = quad::gauss_legendre(24);
    auto eps = [tau](int L) { return std::ldexp(tau, -L); };
    // ∫_u^τ (G(u)-G(v))² (v-u)^{2H-2} dv with the dyadic cell boundaries above u.
    auto upper = [&](double u, double gu, int cell) {
        auto f = [&](double, double dv, double) {
            const double d = gu - g(u + dv);
            return d == 0.0 ? 0.0 : d * d * std::pow(dv, e);
        };
        double acc = quad::tanh_sinh(f, 0.0, eps(cell - 1) - u, opt.rel_tol, 10).value;
        for (int k = cell - 1; k >= 1; --k) {
            const double lo = eps(k), hi = eps(k - 1);
            auto h = [&](double v) {
                const double d = gu - g(v);
                return d == 0.0 ? 0.0 : d * d * std::pow(v - u, e);
            };
            acc += k == cell - 1 ? quad::tanh_sinh(h, lo, hi, opt.rel_tol, 10).value : gl.integrate(h, lo, hi);
        }
        return acc;
    };
    std::vector<double> trace;
    double acc = 0.0;
    for (int L = 1; L <= opt.levels; ++L) {
        const double lo = eps(L), hi = eps(L - 1);
        acc += quad::tanh_sinh([&](double u) { const double v = g(u); return v * v; }, lo, hi, opt.rel_tol, 10).value;
        acc += 2.0 * quad::tanh_sinh([&](double u) { return upper(u, g(u), L); }, lo, hi, opt.rel_tol, 8).value;
        trace.push_back(acc);
    }
    return classify_refinement(std::move(trace), opt.ratio_margin);
}

/// ∫_0^τ |G(u)|^{1/H} du for H in [1/2, 1).
template <class G>
[[nodiscard]] RefinementVerdict condition_regular(G&& g, double tau, double H, const DivergenceOptions& opt = {}) {
    if (!(H >= 0.5 && H < 1.0)) throw std::domain_error("condition_regular: needs H in [1/2, 1)");
    if (!(tau > 0.0)) throw std::domain_error("condition_regular: tau must be positive");
    std::vector<double> trace;
    double acc = 0.0;
    for (int L = 1; L <= opt.levels; ++L) {
        const double lo = std::ldexp(tau, -L), hi = std::ldexp(tau, -L + 1);
        acc += quad::tanh_sinh([&](double u) { return std::pow(std::abs(g(u)), 1.0 / H); }, lo, hi, opt.rel_tol, 10).value;
        trace.push_back(acc);
    }
    return classify_refinement(std::move(trace), opt.ratio_margin);
}

}  // namespace fracint
