#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fracint/core/quadrature.hpp"

namespace fracint {

/// Constant-coefficient operator of order 2m on (0, L) realized through the
/// Dirichlet Laplacian: λ_k = (kπ/L)^{2m}, e_k(x) = √(2/L) sin(kπx/L).
/// The noise operator is diagonal in (e_k) with weights c_k (default 1).
struct SpectralModel {
    double L = std::numbers::pi;
    int m = 1;
    std::size_t K = 64;
    double shift = 0.0;  // λ in the fractional powers (λ + λ_k)^α
    double p = 2.0;
    std::vector<double> noise_weights;  // empty means c_k = 1

    [[nodiscard]] double eigenvalue(std::size_t k) const {
        return std::pow(static_cast<double>(k) * std::numbers::pi / L, 2.0 * m);
    }
    [[nodiscard]] double eigenfunction(std::size_t k, double x) const {
        return std::sqrt(2.0 / L) * std::sin(static_cast<double>(k) * std::numbers::pi * x / L);
    }
    [[nodiscard]] double noise_weight(std::size_t k) const {
        return noise_weights.empty() ? 1.0 : (k - 1 < noise_weights.size() ? noise_weights[k - 1] : 0.0);
    }
    [[nodiscard]] double power_weight(std::size_t k, double alpha) const {
        return alpha == 0.0 ? 1.0 : std::pow(shift + eigenvalue(k), alpha);
    }
    [[nodiscard]] SpectralModel with_modes(std::size_t K_new) const {
        SpectralModel out = *this;
        out.K = K_new;
        return out;
    }
};

[[nodiscard]] inline SpectralModel build_spectral_model(double L, int m, std::size_t K, double shift = 0.0, double p = 2.0) {
    if (K < 1) throw std::invalid_argument("build_spectral_model: need K >= 1");
    if (!(L > 0.0)) throw std::invalid_argument("build_spectral_model: need L > 0");
    if (m < 1) throw std::invalid_argument("build_spectral_model: need m >= 1");
    if (!(p >= 1.0)) throw std::invalid_argument("build_spectral_model: need p >= 1");
    if (shift < 0.0) throw std::invalid_argument("build_spectral_model: need shift >= 0");
    SpectralModel s;
    s.L = L;
    s.m = m;
    s.K = K;
    s.shift = shift;
    s.p = p;
    return s;
}

/// ∫_0^L e_j e_k dx by composite Gauss-Legendre (panels per mode).
[[nodiscard]] inline Eigen::MatrixXd gram_matrix(const SpectralModel& model) {
    const std::size_t K = model.K;
    const std::size_t panels = 2 * K + 2;
    const auto& gl = quad::gauss_legendre(16);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(K));
    const double h = model.L / static_cast<double>(panels);
    std::vector<double> e(K);
    for (std::size_t q = 0; q < panels; ++q) {
        const double a = h * static_cast<double>(q);
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double x = a + 0.5 * h * (gl.nodes[i] + 1.0);
            const double w = 0.5 * h * gl.weights[i];
            for (std::size_t k = 0; k < K; ++k) e[k] = model.eigenfunction(k + 1, x);
            for (std::size_t j = 0; j < K; ++j)
                for (std::size_t k = 0; k <= j; ++k) G(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += w * e[j] * e[k];
        }
    }
    return G.selfadjointView<Eigen::Lower>();
}

}  // namespace fracint
