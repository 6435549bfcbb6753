#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fracint/chaos/isonormal.hpp"
#include "fracint/core/parallel.hpp"

namespace fracint {

struct ChaosSample {
    std::vector<double> values;
    int order = 0;
    bool symmetrized = false;  // set when a non-symmetric kernel was symmetrized
};

/// Cell values K(y_i, y_j) of a two-variable kernel on the isonormal grid.
using GridKernel = Eigen::MatrixXd;

/// First-order integral W(v) for every path.
[[nodiscard]] inline ChaosSample wiener_integral_1(std::span<const double> v, const DiscreteIsonormal& iso,
                                                   std::size_t n_paths, unsigned threads = 0) {
    if (v.size() != iso.cells()) throw std::invalid_argument("wiener_integral_1: function does not match grid");
    ChaosSample out;
    out.order = 1;
    out.values.resize(n_paths);
    parallel_for(n_paths, threads ? threads : default_threads(), [&](std::size_t p) {
        std::vector<double> dW(iso.cells());
        iso.increments(p, dW);
        out.values[p] = iso.evaluate(v, dW);
    });
    return out;
}

/// Off-diagonal double sum Σ_{i≠j} K_ij ΔW_i ΔW_j per path (second chaos).
[[nodiscard]] inline ChaosSample double_wiener_integral(const GridKernel& kernel, const DiscreteIsonormal& iso,
                                                        std::size_t n_paths, unsigned threads = 0) {
    const auto n = static_cast<Eigen::Index>(iso.cells());
    if (kernel.rows() != n || kernel.cols() != n)
        throw std::invalid_argument("double_wiener_integral: kernel does not match grid");
    ChaosSample out;
    out.order = 2;
    GridKernel K = kernel;
    if (!kernel.isApprox(kernel.transpose(), 1e-12) && kernel.norm() > 0.0) {
        K = 0.5 * (kernel + kernel.transpose());
        out.symmetrized = true;
    }
    K.diagonal().setZero();
    out.values.resize(n_paths);
    parallel_for(n_paths, threads ? threads : default_threads(), [&](std::size_t p) {
        Eigen::VectorXd dW(n);
        iso.increments(p, std::span<double>(dW.data(), static_cast<std::size_t>(n)));
        out.values[p] = dW.dot(K * dW);
    });
    return out;
}

/// Exact variance 2·Σ_{i≠j} K_ij² dt² of the off-diagonal double sum.
[[nodiscard]] inline double double_integral_variance(const GridKernel& kernel, double dt) {
    GridKernel K = 0.5 * (kernel + kernel.transpose());
    K.diagonal().setZero();
    return 2.0 * K.squaredNorm() * dt * dt;
}

/// (E|ξ|^q)^{1/q} / (E|ξ|^p)^{1/p} from the empirical distribution.
[[nodiscard]] inline double moment_ratio(std::span<const double> sample, double q, double p) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("moment_ratio: exponents must be positive");
    if (sample.empty()) throw std::invalid_argument("moment_ratio: empty sample");
    double mq = 0.0, mp = 0.0;
    for (double v : sample) {
        mq += std::pow(std::abs(v), q);
        mp += std::pow(std::abs(v), p);
    }
    const double n = static_cast<double>(sample.size());
    mp /= n;
    mq /= n;
    if (mp == 0.0) throw std::domain_error("moment_ratio: degenerate sample");
    return std::pow(mq, 1.0 / q) / std::pow(mp, 1.0 / p);
}

[[nodiscard]] inline double moment_ratio(const ChaosSample& sample, double q, double p) {
    return moment_ratio(std::span<const double>(sample.values), q, p);
}

}  // namespace fracint
