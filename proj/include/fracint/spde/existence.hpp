#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracint/core/stats.hpp"
#include "fracint/integral/conditions.hpp"
#include "fracint/integral/gamma_lp.hpp"
#include "fracint/spde/mode_norm.hpp"

namespace fracint {

struct ExistenceOptions {
    int doublings = 2;           // mode counts K, 2K, ..., 2^doublings K
    double ratio_margin = 0.05;  // same detector as the condition evaluators
    std::size_t nodes_per_mode = 4;
};

struct ExistenceReport {
    double gamma_norm_lp_value = 0.0;       // at the largest mode count
    std::vector<std::size_t> mode_counts;
    std::vector<double> gamma_norm_trace;   // γ-norm at each mode count
    std::vector<double> per_mode_tail;      // c_k² (λ+λ_k)^{2α} ‖e^{-λ_k ·}‖²_{D^H}
    double tail_decay_exponent = 0.0;       // fitted slope of log per_mode_tail against log k
    double increment_ratio = 0.0;
    bool finite = true;
};

/// Kernel field a(x)(s) = Σ_k c_k (λ+λ_k)^α e^{-λ_k s} e_k(x) ⊗ e_k on (0, t0),
/// its L^p(D)-γ-norm under mode doubling, and a finite/diverged verdict
/// from the doubling increments of ‖a‖^p.
[[nodiscard]] inline ExistenceReport existence_report(const SpectralModel& model, double H, double sigma, double alpha,
                                                      double t0, const ExistenceOptions& opt = {}) {
    if (!(t0 > 0.0)) throw std::domain_error("existence_report: t0 must be positive");
    if (alpha < 0.0) throw std::domain_error("existence_report: alpha must be non-negative");
    const std::size_t K_max = model.K << opt.doublings;
    ExistenceReport rep;
    rep.per_mode_tail.resize(K_max);
    for (std::size_t k = 1; k <= K_max; ++k) {
        const double c = model.noise_weight(k) * mode_norm(model, k, t0, H, sigma, alpha);
        rep.per_mode_tail[k - 1] = c * c;
    }
    // Midpoint nodes integrate sin² exactly for every retained mode.
    const std::size_t nx = opt.nodes_per_mode * K_max;
    const double w = model.L / static_cast<double>(nx);
    std::vector<double> weights(nx, w), acc(nx, 0.0);
    std::size_t next = 0;
    std::vector<double> powers;
    for (int level = 0; level <= opt.doublings; ++level) {
        const std::size_t K = model.K << level;
        for (std::size_t i = 0; i < nx; ++i) {
            const double x = (static_cast<double>(i) + 0.5) * w;
            for (std::size_t k = next + 1; k <= K; ++k) {
                const double e = model.eigenfunction(k, x);
                acc[i] += e * e * rep.per_mode_tail[k - 1];
            }
        }
        next = K;
        std::vector<double> norms(nx);
        for (std::size_t i = 0; i < nx; ++i) norms[i] = std::sqrt(acc[i]);
        const double g = gamma_norm_lp(weights, norms, model.p);
        rep.mode_counts.push_back(K);
        rep.gamma_norm_trace.push_back(g);
        powers.push_back(std::pow(g, model.p));
    }
    rep.gamma_norm_lp_value = rep.gamma_norm_trace.back();
    const auto verdict = classify_refinement(powers, opt.ratio_margin);
    rep.increment_ratio = verdict.increment_ratio;
    rep.finite = !verdict.diverged;
    std::vector<double> lk, lt;
    for (std::size_t k = K_max / 2; k <= K_max; ++k) {
        if (rep.per_mode_tail[k - 1] <= 0.0) continue;
        lk.push_back(std::log(static_cast<double>(k)));
        lt.push_back(std::log(rep.per_mode_tail[k - 1]));
    }
    if (lk.size() >= 2) rep.tail_decay_exponent = stats::least_squares(lk, lt).slope;
    return rep;
}

/// γ-norm of x ↦ Σ_k (λ+λ_k)^α e^{-λ_k u} e_k(x) ⊗ e_k in L^p(D; ℓ²).
[[nodiscard]] inline double semigroup_gamma_norm(const SpectralModel& model, double alpha, double u) {
    if (model.p == 2.0) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= model.K; ++k) {
            const double v = model.power_weight(k, alpha) * model.noise_weight(k) * std::exp(-model.eigenvalue(k) * u);
            acc += v * v;
        }
        return std::sqrt(acc);
    }
    const std::size_t nx = 4 * model.K;
    const double w = model.L / static_cast<double>(nx);
    std::vector<double> coef(model.K), weights(nx, w), norms(nx);
    for (std::size_t k = 1; k <= model.K; ++k) {
        const double v = model.power_weight(k, alpha) * model.noise_weight(k) * std::exp(-model.eigenvalue(k) * u);
        coef[k - 1] = v * v;
    }
    for (std::size_t i = 0; i < nx; ++i) {
        const double x = (static_cast<double>(i) + 0.5) * w;
        double acc = 0.0;
        for (std::size_t k = 1; k <= model.K; ++k) {
            const double e = model.eigenfunction(k, x);
            acc += coef[k - 1] * e * e;
        }
        norms[i] = std::sqrt(acc);
    }
    return gamma_norm_lp(weights, norms, model.p);
}

struct SmoothingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::vector<double> u;
    std::vector<double> norm;
};

/// Log-log slope of semigroup_gamma_norm over u ∈ [u_lo, u_hi] on n_points
/// geometrically spaced values.
[[nodiscard]] inline SmoothingFit semigroup_smoothing_exponent(const SpectralModel& model, double alpha, double u_lo,
                                                               double u_hi, std::size_t n_points = 21) {
    if (alpha < 0.0) throw std::domain_error("semigroup_smoothing_exponent: alpha must be non-negative");
    if (!(u_lo > 0.0 && u_hi > u_lo) || n_points < 2) throw std::invalid_argument("semigroup_smoothing_exponent: bad u range");
    SmoothingFit fit;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double u = u_lo * std::pow(u_hi / u_lo, static_cast<double>(i) / static_cast<double>(n_points - 1));
        const double g = semigroup_gamma_norm(model, alpha, u);
        fit.u.push_back(u);
        fit.norm.push_back(g);
        lx.push_back(std::log(u));
        ly.push_back(std::log(g));
    }
    const auto line = stats::least_squares(lx, ly);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r2 = line.r2;
    return fit;
}

}  // namespace fracint
