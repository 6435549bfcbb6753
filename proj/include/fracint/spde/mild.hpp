#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracint/core/parallel.hpp"
#include "fracint/core/rng.hpp"
#include "fracint/core/stats.hpp"
#include "fracint/process/fbm.hpp"
#include "fracint/process/hermite_process.hpp"
#include "fracint/spde/existence.hpp"

namespace fracint {

/// Mode coefficients y_k(t) of Y^α_t = Σ_k y_k(t) e_k at selected grid nodes.
class MildSolutionEnsemble {
public:
    MildSolutionEnsemble(SpectralModel model, TimeGrid grid, std::vector<std::size_t> output_nodes, std::size_t n_paths,
                         double alpha)
        : model_(std::move(model)), grid_(grid), out_(std::move(output_nodes)), n_paths_(n_paths), alpha_(alpha),
          data_(n_paths * out_.size() * model_.K, 0.0) {}

    [[nodiscard]] const SpectralModel& model() const noexcept { return model_; }
    [[nodiscard]] const TimeGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<std::size_t>& output_nodes() const noexcept { return out_; }
    [[nodiscard]] std::size_t n_paths() const noexcept { return n_paths_; }
    [[nodiscard]] std::size_t modes() const noexcept { return model_.K; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }

    /// Coefficients (y_1, ..., y_K) of path p at output slot o.
    [[nodiscard]] std::span<double> state(std::size_t p, std::size_t o) {
        return {data_.data() + (p * out_.size() + o) * model_.K, model_.K};
    }
    [[nodiscard]] std::span<const double> state(std::size_t p, std::size_t o) const {
        return {data_.data() + (p * out_.size() + o) * model_.K, model_.K};
    }
    [[nodiscard]] double coeff(std::size_t p, std::size_t o, std::size_t k) const { return state(p, o)[k - 1]; }

    /// Y at spatial point x.
    [[nodiscard]] double value(std::size_t p, std::size_t o, double x) const {
        const auto y = state(p, o);
        double acc = 0.0;
        for (std::size_t k = 1; k <= model_.K; ++k) acc += y[k - 1] * model_.eigenfunction(k, x);
        return acc;
    }

    /// ‖Y‖²_{L²(D)} by Parseval.
    [[nodiscard]] double l2_norm_sq(std::size_t p, std::size_t o) const {
        double acc = 0.0;
        for (double v : state(p, o)) acc += v * v;
        return acc;
    }

    /// Slot of grid node i, or nullopt when it was not stored.
    [[nodiscard]] std::optional<std::size_t> slot(std::size_t node) const {
        for (std::size_t o = 0; o < out_.size(); ++o)
            if (out_[o] == node) return o;
        return std::nullopt;
    }

private:
    SpectralModel model_;
    TimeGrid grid_;
    std::vector<std::size_t> out_;
    std::size_t n_paths_;
    double alpha_;
    std::vector<double> data_;
};

/// Fills the noise path z_k on the grid nodes for (path p, mode k).
using ModeNoise = std::function<void(std::size_t p, std::size_t k, std::span<double> z)>;

struct MildOptions {
    std::vector<std::size_t> output_nodes;  // empty: every grid node
    unsigned threads = 0;
    FbmMethod method = FbmMethod::Circulant;
    bool check_existence = true;
    HermiteOptions hermite{};
};

/// Runs y(t+dt) = e^{-λ_k dt} y(t) + ((1 - e^{-λ_k dt})/(λ_k dt)) Δz_k per mode,
/// i.e. the exact convolution of e^{-λ_k(t-·)} against a noise increment
/// spread uniformly over its cell.
[[nodiscard]] inline MildSolutionEnsemble solve_mild_with_noise(const SpectralModel& model, const TimeGrid& grid,
                                                                std::size_t n_paths, double alpha, const ModeNoise& noise,
                                                                std::vector<std::size_t> output_nodes = {},
                                                                unsigned threads = 0) {
    if (grid.start() != 0.0) throw std::invalid_argument("solve_mild: grid must start at 0");
    if (output_nodes.empty()) {
        output_nodes.resize(grid.nodes());
        for (std::size_t i = 0; i < grid.nodes(); ++i) output_nodes[i] = i;
    }
    for (std::size_t i = 1; i < output_nodes.size(); ++i)
        if (output_nodes[i] <= output_nodes[i - 1]) throw std::invalid_argument("solve_mild: output nodes must increase");
    if (output_nodes.back() >= grid.nodes()) throw std::invalid_argument("solve_mild: output node beyond grid");
    MildSolutionEnsemble ens(model, grid, output_nodes, n_paths, alpha);
    const double dt = grid.dt();
    std::vector<double> decay(model.K), gain(model.K), scale(model.K);
    for (std::size_t k = 1; k <= model.K; ++k) {
        const double x = model.eigenvalue(k) * dt;
        decay[k - 1] = std::exp(-x);
        gain[k - 1] = x > 0.0 ? -std::expm1(-x) / x : 1.0;
        scale[k - 1] = model.noise_weight(k) * model.power_weight(k, alpha);
    }
    parallel_for(n_paths, threads ? threads : default_threads(), [&](std::size_t p) {
        thread_local std::vector<double> z;
        z.resize(grid.nodes());
        for (std::size_t k = 1; k <= model.K; ++k) {
            noise(p, k, z);
            double y = 0.0;
            std::size_t o = 0;
            if (output_nodes[0] == 0) ens.state(p, o++)[k - 1] = 0.0;
            for (std::size_t i = 0; i < grid.steps() && o < output_nodes.size(); ++i) {
                y = decay[k - 1] * y + gain[k - 1] * (z[i + 1] - z[i]);
                if (output_nodes[o] == i + 1) ens.state(p, o++)[k - 1] = scale[k - 1] * y;
            }
        }
    });
    return ens;
}

/// Independent H-fractional noise per mode; mode k of path p draws from the
/// substream (seed, p, k).
[[nodiscard]] inline MildSolutionEnsemble solve_mild(const SpectralModel& model, const FracParams& params,
                                                     const TimeGrid& grid, std::size_t n_paths, double alpha,
                                                     std::uint64_t seed, const MildOptions& opt = {}) {
    if (opt.check_existence) {
        const auto rep = existence_report(model, params.H, params.sigma, alpha, grid.end());
        if (!rep.finite)
            throw std::domain_error("solve_mild: the stochastic convolution does not exist for these parameters "
                                    "(existence_report diverged; alpha must stay below H - 1/(4m))");
    }
    ModeNoise noise;
    if (params.chaos_order == 1) {
        auto sampler = std::make_shared<FbmSampler>(params, grid, opt.method);
        noise = [sampler, seed](std::size_t p, std::size_t k, std::span<double> z) {
            CounterRng rng(seed, p, k);
            sampler->sample(rng, z);
        };
    } else {
        auto sampler = std::make_shared<HermiteK2Sampler>(params, grid, opt.hermite);
        noise = [sampler, seed](std::size_t p, std::size_t k, std::span<double> z) {
            thread_local std::vector<double> xi;
            xi.resize(sampler->normals_needed());
            CounterRng rng(seed, p, k);
            rng.fill_normal(xi);
            sampler->sample(xi, z);
        };
    }
    return solve_mild_with_noise(model, grid, n_paths, alpha, noise, opt.output_nodes, opt.threads);
}

/// Exact variance of the scheme's mode-k coefficient at grid node n when the
/// driver has covariance σ²R_H (fBm or Rosenblatt). The weights are geometric,
/// so Σ_{i,j} w_i w_j γ(|i-j|) collapses to one sum over lags. This is the
/// target of the Monte Carlo; it approaches σ² mode_norm² as dt → 0.
[[nodiscard]] inline double scheme_mode_variance(const SpectralModel& model, std::size_t k, const TimeGrid& grid,
                                                 std::size_t node, double H, double sigma, double alpha) {
    if (k < 1) throw std::invalid_argument("scheme_mode_variance: modes are numbered from 1");
    if (node >= grid.nodes()) throw std::invalid_argument("scheme_mode_variance: node beyond grid");
    const double dt = grid.dt(), x = model.eigenvalue(k) * dt;
    const double gain = x > 0.0 ? -std::expm1(-x) / x : 1.0;
    const double two_h = 2.0 * H;
    double total = 0.0;
    for (std::size_t l = 0; l < node; ++l) {
        const double m = static_cast<double>(node - l);
        const double lag = static_cast<double>(l);
        const double fgn = 0.5 * (std::pow(lag + 1.0, two_h) - 2.0 * std::pow(lag, two_h) + std::pow(std::abs(lag - 1.0), two_h));
        const double pairs = x > 0.0 ? std::exp(-x * lag) * std::expm1(-2.0 * x * m) / std::expm1(-2.0 * x) : m;
        total += (l == 0 ? 1.0 : 2.0) * fgn * pairs;
    }
    const double w = sigma * gain * model.noise_weight(k) * model.power_weight(k, alpha);
    return w * w * std::pow(dt, two_h) * total;
}

/// Nodes t0, t0+1, t0+2, t0+4, ..., t0+2^{n_lags-1} (grid indices).
[[nodiscard]] inline std::vector<std::size_t> holder_output_nodes(const TimeGrid& grid, std::size_t t0_node, int n_lags) {
    std::vector<std::size_t> out{t0_node};
    for (int j = 0; j < n_lags; ++j) {
        const std::size_t node = t0_node + (std::size_t{1} << j);
        if (node >= grid.nodes()) throw std::invalid_argument("holder_output_nodes: lag beyond grid");
        out.push_back(node);
    }
    return out;
}

struct HolderFit {
    double slope = 0.0;
    double r2 = 0.0;
    std::vector<double> lags;
    std::vector<double> moments;  // (E‖Y_{t0+h} - Y_{t0}‖^p_{L^p})^{1/p}
};

/// Log-log regression of the L^p(Ω; L^p(D)) increment norm against the lag,
/// taking the first output node as t0 and every later one as t0 + h.
[[nodiscard]] inline HolderFit holder_exponent_estimate(const MildSolutionEnsemble& ens, double p) {
    if (ens.n_paths() == 0) throw std::invalid_argument("holder_exponent_estimate: empty ensemble");
    if (!(p >= 1.0)) throw std::domain_error("holder_exponent_estimate: need p >= 1");
    const auto& nodes = ens.output_nodes();
    if (nodes.size() < 3) throw std::invalid_argument("holder_exponent_estimate: need at least two lags");
    const auto& model = ens.model();
    const std::size_t K = ens.modes();
    const std::size_t nx = p == 2.0 ? 0 : 4 * K;
    std::vector<double> basis;
    if (nx > 0) {
        basis.resize(nx * K);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t k = 1; k <= K; ++k)
                basis[i * K + k - 1] = model.eigenfunction(k, (static_cast<double>(i) + 0.5) * model.L / static_cast<double>(nx));
    }
    HolderFit fit;
    std::vector<double> lx, ly;
    std::vector<double> diff(K);
    for (std::size_t o = 1; o < nodes.size(); ++o) {
        double acc = 0.0;
        for (std::size_t path = 0; path < ens.n_paths(); ++path) {
            const auto a = ens.state(path, 0), b = ens.state(path, o);
            for (std::size_t k = 0; k < K; ++k) diff[k] = b[k] - a[k];
            if (nx == 0) {
                double s = 0.0;
                for (double d : diff) s += d * d;
                acc += s;
            } else {
                double s = 0.0;
                for (std::size_t i = 0; i < nx; ++i) {
                    double v = 0.0;
                    for (std::size_t k = 0; k < K; ++k) v += diff[k] * basis[i * K + k];
                    s += std::pow(std::abs(v), p);
                }
                acc += s * model.L / static_cast<double>(nx);
            }
        }
        const double moment = std::pow(acc / static_cast<double>(ens.n_paths()), 1.0 / p);
        const double h = ens.grid().node(nodes[o]) - ens.grid().node(nodes[0]);
        fit.lags.push_back(h);
        fit.moments.push_back(moment);
        lx.push_back(std::log(h));
        ly.push_back(std::log(moment));
    }
    const auto line = stats::least_squares(lx, ly);
    fit.slope = line.slope;
    fit.r2 = line.r2;
    return fit;
}

}  // namespace fracint
