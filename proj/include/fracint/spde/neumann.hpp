#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fracint/core/quadrature.hpp"
#include "fracint/core/stats.hpp"
#include "fracint/integral/conditions.hpp"
#include "fracint/integral/gamma_lp.hpp"
#include "fracint/process/simulate.hpp"
#include "fracint/sobolev/dh_function.hpp"
#include "fracint/sobolev/kstar.hpp"

namespace fracint {

struct NeumannKernelConfig {
    double L = 1.0;
    int image_terms = 20;  // reflections n = -M..M
    double t0 = 1.0;
    double H = 0.75;
    double p = 2.0;
    int levels = 24;  // dyadic refinement levels toward the boundary

    void validate() const {
        if (!(L > 0.0 && t0 > 0.0)) throw std::domain_error("NeumannKernelConfig: need L > 0 and t0 > 0");
        if (!(H >= 0.5 && H < 1.0)) throw std::domain_error("NeumannKernelConfig: need H in [1/2, 1)");
        if (!(p > 1.0 && p <= 2.0)) throw std::domain_error("NeumannKernelConfig: need p in (1, 2]");
        if (image_terms < 0) throw std::domain_error("NeumannKernelConfig: image_terms must be non-negative");
    }
};

/// Heat kernel on (0, L) with Neumann walls, built from 2M+1 pairs of images.
[[nodiscard]] inline double neumann_kernel(double s, double x, double y, double L, int M) {
    if (!(s > 0.0)) return 0.0;
    const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi * s);
    double acc = 0.0;
    for (int n = -M; n <= M; ++n) {
        const double shift = 2.0 * n * L;
        const double a = x - y - shift, b = x + y - shift;
        acc += std::exp(-a * a / (4.0 * s)) + std::exp(-b * b / (4.0 * s));
    }
    return norm * acc;
}

/// Σ_{b ∈ {0, L}} g_N(s, x, b)².
[[nodiscard]] inline double neumann_boundary_energy(double s, double x, const NeumannKernelConfig& cfg) {
    const double g0 = neumann_kernel(s, x, 0.0, cfg.L, cfg.image_terms);
    const double g1 = neumann_kernel(s, x, cfg.L, cfg.L, cfg.image_terms);
    return g0 * g0 + g1 * g1;
}

namespace detail {

// ∫_0^{t0} e(s)^{1/(2H)} ds with panels split geometrically at multiples of
// the diffusive scale ρ², which is where the integrand switches on.
template <class E>
double boundary_time_integral(E&& energy, double rho, double t0, double H) {
    const double q = 1.0 / (2.0 * H);
    auto f = [&](double s) { const double e = energy(s); return e > 0.0 ? std::pow(e, q) : 0.0; };
    double acc = 0.0;
    double lo = 0.0;
    double hi = std::min(t0, std::max(rho * rho / 64.0, 1e-300));
    while (true) {
        acc += quad::tanh_sinh(f, lo, hi, 1e-9, 10).value;
        if (hi >= t0) break;
        lo = hi;
        hi = std::min(t0, 4.0 * hi);
    }
    return acc;
}

// ∫ over (0, half) of F(ρ) on dyadic cells toward ρ = 0; the running sums
// form the refinement trace.
template <class F>
std::vector<double> boundary_layer_trace(F&& outer, double half, int levels) {
    const auto& gl = quad::gauss_legendre(20);
    std::vector<double> trace;
    double acc = 0.0;
    for (int l = 1; l <= levels; ++l) {
        const double lo = std::ldexp(half, -l), hi = std::ldexp(half, -l + 1);
        acc += gl.integrate(outer, lo, hi);
        trace.push_back(acc);
    }
    return trace;
}

}  // namespace detail

/// I(t0) = ∫_0^L [∫_0^{t0} (Σ_b |g_N(s,x,b)|²)^{1/(2H)} ds]^{pH} dx, with the
/// spatial integral refined dyadically toward both walls.
[[nodiscard]] inline RefinementVerdict neumann_boundary_integral(const NeumannKernelConfig& cfg, double ratio_margin = 0.05) {
    cfg.validate();
    const double half = 0.5 * cfg.L;
    auto outer = [&](double x) {
        const double inner = detail::boundary_time_integral([&](double s) { return neumann_boundary_energy(s, x, cfg); }, x,
                                                            cfg.t0, cfg.H);
        return std::pow(inner, cfg.p * cfg.H);
    };
    // The two walls contribute symmetric halves.
    auto trace = detail::boundary_layer_trace(outer, half, cfg.levels);
    for (double& v : trace) v *= 2.0;
    return classify_refinement(std::move(trace), ratio_margin);
}

/// Same functional for the Gaussian upper-bound model of a boundary kernel in
/// formal dimension d: |g|² ≈ s^{-d} exp(-ρ²/(c s)) at distance ρ from the
/// boundary, integrated over ρ ∈ (0, ell).
[[nodiscard]] inline RefinementVerdict neumann_surrogate_integral(double d, double H, double p, double t0, double ell = 1.0,
                                                                  double c = 4.0, int levels = 24, double ratio_margin = 0.05) {
    if (!(d > 0.0 && t0 > 0.0 && ell > 0.0 && c > 0.0)) throw std::domain_error("neumann_surrogate_integral: bad parameters");
    if (!(H > 0.0 && H < 1.0 && p >= 1.0)) throw std::domain_error("neumann_surrogate_integral: bad (H, p)");
    auto outer = [&](double rho) {
        const double inner = detail::boundary_time_integral(
            [&](double s) { return std::pow(s, -d) * std::exp(-rho * rho / (c * s)); }, rho, t0, H);
        return std::pow(inner, p * H);
    };
    auto trace = detail::boundary_layer_trace(outer, ell, levels);
    return classify_refinement(std::move(trace), ratio_margin);
}

struct BoundaryCheckOptions {
    std::size_t time_steps = 256;
    std::uint64_t seed = 1;
    double noise_scale = 1.0;  // 0 switches the boundary noise off
    unsigned threads = 0;
};

struct BoundaryProfile {
    std::vector<double> x;
    std::vector<double> mc_variance;     // E|Y_t(x)|² from simulation
    std::vector<double> mc_se;
    std::vector<double> discrete_norm_sq;  // exact variance of the discretized convolution
    std::vector<double> kernel_norm_sq;    // Σ_b ‖g_N(·, x, b)‖²_{D^H(0,t)}
    double gamma_norm = 0.0;               // gamma_norm_lp over the x nodes
    double boundary_exponent = 0.0;        // slope of log kernel_norm_sq against log x over the nodes
};

/// Y_t(x) = Σ_b ∫_0^t g_N(t-s, x, b) dZ_b(s) with independent fractional
/// noises Z_0, Z_L on the two boundary atoms, evaluated at the given x.
[[nodiscard]] inline BoundaryProfile boundary_solution_check(const NeumannKernelConfig& cfg, const FracParams& params,
                                                             std::size_t n_paths, const std::vector<double>& x_nodes,
                                                             const BoundaryCheckOptions& opt = {}) {
    cfg.validate();
    if (params.H < 0.5) throw std::domain_error("boundary_solution_check: needs H >= 1/2");
    const TimeGrid grid(cfg.t0, opt.time_steps);
    const auto noise = simulate_cylindrical(params, grid, 2, n_paths, opt.seed, SimOptions{opt.threads, 0, FbmMethod::Cholesky, 0.0});
    const auto& gl = quad::gauss_legendre(16);
    const std::array<double, 2> atoms{0.0, cfg.L};
    BoundaryProfile out;
    std::vector<double> node_norms, weights;
    for (double x : x_nodes) {
        std::vector<double> y(n_paths, 0.0);
        double disc = 0.0, cont = 0.0;
        for (std::size_t b = 0; b < 2; ++b) {
            // Cell averages of s ↦ g_N(t0 - s, x, b); the last cell is singular at x = b.
            std::vector<double> w(grid.steps());
            for (std::size_t i = 0; i < grid.steps(); ++i) {
                const double lo = grid.node(i), hi = grid.node(i + 1);
                auto g = [&](double s) { return neumann_kernel(cfg.t0 - s, x, atoms[b], cfg.L, cfg.image_terms); };
                const double integral = i + 1 == grid.steps()
                                            ? quad::tanh_sinh([&](double, double, double db) {
                                                  return neumann_kernel(db, x, atoms[b], cfg.L, cfg.image_terms);
                                              }, lo, hi, 1e-10, 10).value
                                            : gl.integrate(g, lo, hi);
                w[i] = opt.noise_scale * integral / grid.dt();
            }
            const StepFunction f(grid.node_vector(), w);
            disc += dh_norm_sq_covariance(f, params);
            const auto& comp = noise.components[b];
            for (std::size_t p = 0; p < n_paths; ++p) {
                const auto z = comp.path(p);
                double acc = 0.0;
                for (std::size_t i = 0; i < grid.steps(); ++i) acc += w[i] * (z[i + 1] - z[i]);
                y[p] += acc;
            }
            const double scale2 = opt.noise_scale * opt.noise_scale;
            if (scale2 > 0.0)
                cont += scale2 * dh_norm_sq_function([&](double s) { return neumann_kernel(s, x, atoms[b], cfg.L, cfg.image_terms); },
                                                     cfg.t0, params.H, params.sigma, DhQuadrature{1e-7, 8});
        }
        const auto m2 = stats::second_moment(y);
        out.x.push_back(x);
        out.mc_variance.push_back(m2.value);
        out.mc_se.push_back(m2.se);
        out.discrete_norm_sq.push_back(disc);
        out.kernel_norm_sq.push_back(cont);
        node_norms.push_back(std::sqrt(cont));
    }
    // Trapezoid-like weights from the node spacing.
    weights.assign(x_nodes.size(), 0.0);
    for (std::size_t i = 0; i < x_nodes.size(); ++i) {
        const double left = i == 0 ? 0.0 : 0.5 * (x_nodes[i] - x_nodes[i - 1]);
        const double right = i + 1 == x_nodes.size() ? 0.0 : 0.5 * (x_nodes[i + 1] - x_nodes[i]);
        weights[i] = left + right;
    }
    if (x_nodes.size() >= 2) out.gamma_norm = gamma_norm_lp(weights, node_norms, cfg.p);
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x_nodes.size(); ++i)
        if (x_nodes[i] > 0.0 && out.kernel_norm_sq[i] > 0.0) {
            lx.push_back(std::log(x_nodes[i]));
            ly.push_back(std::log(out.kernel_norm_sq[i]));
        }
    if (lx.size() >= 2) out.boundary_exponent = stats::least_squares(lx, ly).slope;
    return out;
}

}  // namespace fracint
