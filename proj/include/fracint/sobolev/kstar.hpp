#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fracint/core/quadrature.hpp"
#include "fracint/process/params.hpp"
#include "fracint/sobolev/constants.hpp"
#include "fracint/sobolev/step_function.hpp"

namespace fracint {

namespace detail {

// x_hi^h - x_lo^h for 0 <= x_lo < x_hi, with gap = x_hi - x_lo supplied
// exactly; uses expm1/log1p when the gap is small relative to x_lo.
inline double power_gap(double x_lo, double gap, double h) {
    if (x_lo <= 0.0) return std::pow(gap, h);
    return std::pow(x_lo, h) * std::expm1(h * std::log1p(gap / x_lo));
}

// Evaluates K*_H f at a point r given by its position relative to the
// breakpoints: d[k] = t_k - r (signed). Piece widths are taken from the
// breakpoints so that far-field increments keep full precision. `own` is the index of the
// piece containing r, or -1 when r lies outside [t_0, t_n).
inline double kstar_at(const StepFunction& f, double h, double inv_c, const std::vector<double>& d, long own) {
    const auto& v = f.values();
    const auto& br = f.breakpoints();
    const std::size_t n = v.size();
    double acc = 0.0;
    if (h > 0.0) {
        for (std::size_t j = 0; j < n; ++j) {
            const double hi = d[j + 1], lo = d[j];
            if (hi <= 0.0) continue;
            acc += v[j] * (lo > 0.0 ? power_gap(lo, br[j + 1] - br[j], h) : std::pow(hi, h));
        }
        return inv_c * acc;
    }
    // h < 0: pieces strictly above r contribute (v_j - f(r)) times the
    // increment of (t - r)^h, and the zero tail beyond t_n adds f(r)(t_n - r)^h.
    const double fr = own >= 0 ? v[static_cast<std::size_t>(own)] : 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (static_cast<long>(j) <= own) continue;
        const double lo = d[j];
        if (lo <= 0.0) continue;
        const double w = v[j] - fr;
        if (w != 0.0) acc += w * power_gap(lo, br[j + 1] - br[j], h);
    }
    if (fr != 0.0) acc += fr * std::pow(d[n], h);
    return inv_c * acc;
}

}  // namespace detail

/// K*_H f(r) = ((H-1/2)/c_H) ∫_r^∞ f(u)(u-r)^{H-3/2} du (H > 1/2), with
/// f(u) replaced by f(u) - f(r) for H < 1/2, and the identity at H = 1/2.
/// The (H-1/2) factor makes ‖K*_H 1_{[0,t)}‖_{L²} = t^H.
[[nodiscard]] inline double kstar_value(const StepFunction& f, double H, double r, double c_H) {
    if (f.empty()) return 0.0;
    if (H == 0.5) return f(r);
    const auto& br = f.breakpoints();
    std::vector<double> d(br.size());
    long own = -1;
    for (std::size_t k = 0; k < br.size(); ++k) d[k] = br[k] - r;
    if (r >= br.front() && r < br.back())
        own = static_cast<long>(std::upper_bound(br.begin(), br.end(), r) - br.begin()) - 1;
    return detail::kstar_at(f, H - 0.5, 1.0 / c_H, d, own);
}

/// K*_H f sampled at the cell midpoints of out_grid.
[[nodiscard]] inline GridFunction kstar_transform(const StepFunction& f, double H, const TimeGrid& out_grid) {
    detail::require_hurst(H, "kstar_transform");
    const double c = c_h_constant(H);
    return GridFunction::sample(out_grid, [&](double r) { return kstar_value(f, H, r, c); });
}

struct KstarOptions {
    double rel_tol = 1e-11;
};

/// σ‖K*_H f‖_{L²(ℝ)}: piecewise double-exponential quadrature between
/// breakpoints (endpoint singularities handled through exact distances)
/// and an exp-sinh rule on (-∞, t_0).
[[nodiscard]] inline double dh_norm_kstar(const StepFunction& f, const FracParams& params, const KstarOptions& opt = {}) {
    if (f.empty() || f.is_zero()) return 0.0;
    const double H = params.H;
    detail::require_hurst(H, "dh_norm_kstar");
    const auto& br = f.breakpoints();
    const std::size_t nb = br.size();
    if (H == 0.5) {
        double s = 0.0;
        for (std::size_t j = 0; j + 1 < nb; ++j) s += f.values()[j] * f.values()[j] * (br[j + 1] - br[j]);
        return params.sigma * std::sqrt(s);
    }
    const double h = H - 0.5, inv_c = 1.0 / c_h_constant(H);
    double total = 0.0;
    std::vector<double> d(nb);
    // Inside piece j: r = t_j + da = t_{j+1} - db.
    for (std::size_t j = 0; j + 1 < nb; ++j) {
        auto integrand = [&](double, double da, double db) {
            for (std::size_t k = 0; k < nb; ++k) {
                if (k <= j) d[k] = -((br[j] - br[k]) + da);
                else d[k] = (br[k] - br[j + 1]) + db;
            }
            const double v = detail::kstar_at(f, h, inv_c, d, static_cast<long>(j));
            return v * v;
        };
        total += quad::tanh_sinh(integrand, br[j], br[j + 1], opt.rel_tol).value;
    }
    // Left of the support: r = t_0 - x, x > 0.
    auto left = [&](double, double x, double) {
        for (std::size_t k = 0; k < nb; ++k) d[k] = (br[k] - br[0]) + x;
        const double v = detail::kstar_at(f, h, inv_c, d, -1);
        return v * v;
    };
    total += quad::exp_sinh(left, 0.0, opt.rel_tol).value;
    // Right of the support K*f vanishes for both signs of h.
    return params.sigma * std::sqrt(total);
}

/// σ² Σ_{j,k} v_j v_k E[(z_{t_j}-z_{t_{j-1}})(z_{t_k}-z_{t_{k-1}})], the
/// closed-form ‖f‖²_{D^H} of a step function.
[[nodiscard]] inline double dh_norm_sq_covariance(const StepFunction& f, const FracParams& params) {
    if (f.empty()) return 0.0;
    const auto& br = f.breakpoints();
    const auto& v = f.values();
    const double H = params.H;
    auto incr_cov = [&](std::size_t j, std::size_t k) {
        const double a = br[j], b = br[j + 1], c = br[k], e = br[k + 1];
        const double h2 = 2.0 * H;
        // E[(z_b - z_a)(z_e - z_c)] = ½(|b-c|^{2H} + |a-e|^{2H} - |b-e|^{2H} - |a-c|^{2H})
        return 0.5 * (std::pow(std::abs(b - c), h2) + std::pow(std::abs(a - e), h2) -
                      std::pow(std::abs(b - e), h2) - std::pow(std::abs(a - c), h2));
    };
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t k = 0; k < v.size(); ++k) s += v[j] * v[k] * incr_cov(j, k);
    return params.sigma * params.sigma * s;
}

/// σ² H(2H-1) ∫∫ f(u) g(v) |u-v|^{2H-2} du dv for H > 1/2, in closed form
/// through the second antiderivative |z|^{2H} / (2H(2H-1)).
[[nodiscard]] inline double dh_inner_singular(const StepFunction& f, const StepFunction& g, double H, double sigma) {
    if (!(H > 0.5 && H < 1.0)) throw std::domain_error("dh_inner_singular: needs H in (1/2, 1)");
    if (f.empty() || g.empty()) return 0.0;
    const double h2 = 2.0 * H;
    auto P = [h2](double z) { return std::pow(std::abs(z), h2); };
    double s = 0.0;
    for (std::size_t i = 0; i < f.pieces(); ++i) {
        const double a = f.left(i), b = f.right(i);
        for (std::size_t j = 0; j < g.pieces(); ++j) {
            const double c = g.left(j), d = g.right(j);
            s += f.values()[i] * g.values()[j] * (P(b - c) - P(a - c) - P(b - d) + P(a - d));
        }
    }
    return sigma * sigma * 0.5 * s;
}

}  // namespace fracint
