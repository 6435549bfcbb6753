#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracint/process/params.hpp"
#include "fracint/sobolev/kstar.hpp"

namespace fracint {

/// Pointwise kernel of an operator into L^p(D): at spatial node x_i (with
/// quadrature weight w_i) the kernel is a U-indexed family of D^H integrands.
struct LpKernelField {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<std::vector<StepFunction>> kernels;  // kernels[i][j]: node i, U-component j
    double p = 2.0;
    FracParams params;
};

/// (Σ_i w_i m_i^p)^{1/p} for precomputed per-node norms m_i.
[[nodiscard]] inline double gamma_norm_lp(std::span<const double> weights, std::span<const double> node_norms, double p) {
    if (!(p >= 1.0)) throw std::domain_error("gamma_norm_lp: need p >= 1");
    if (weights.size() != node_norms.size()) throw std::invalid_argument("gamma_norm_lp: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) acc += weights[i] * std::pow(node_norms[i], p);
    return std::pow(acc, 1.0 / p);
}

/// ‖a(x)‖_{D^H(T;U)} = (Σ_j ‖a_j(x)‖²_{D^H})^{1/2} at each node.
[[nodiscard]] inline std::vector<double> node_norms(const LpKernelField& field) {
    std::vector<double> out(field.kernels.size());
    for (std::size_t i = 0; i < field.kernels.size(); ++i) {
        double acc = 0.0;
        for (const auto& a : field.kernels[i]) {
            const double n = a.empty() ? 0.0 : dh_norm_kstar(a, field.params);
            acc += n * n;
        }
        out[i] = std::sqrt(acc);
    }
    return out;
}

[[nodiscard]] inline double gamma_norm_lp(const LpKernelField& field) {
    if (field.nodes.size() != field.weights.size() || field.nodes.size() != field.kernels.size())
        throw std::invalid_argument("gamma_norm_lp: nodes, weights and kernels must have equal length");
    const auto norms = node_norms(field);
    return gamma_norm_lp(field.weights, norms, field.p);
}

}  // namespace fracint
