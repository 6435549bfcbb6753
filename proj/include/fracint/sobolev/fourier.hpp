#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "fracint/sobolev/step_function.hpp"

namespace fracint {

// Fourier convention used throughout: f̂(ω) = (2π)^{-1/2} ∫ f(t) e^{-iωt} dt,
// so ‖f̂‖_{L²} = ‖f‖_{L²} and ‖f‖²_{Ẇ^{s,2}} = ∫ |ω|^{2s} |f̂(ω)|² dω.
//
// For f piecewise constant, |f̂|² is a trigonometric polynomial times
// 2(1 - cos ωh)/(2πω²), and every frequency integral reduces to
//     ∫_ℝ (1 - cos cω) |ω|^{-1-ν} dω = κ(ν) |c|^ν,   ν = 1 - 2s ∈ (0, 2).
// The resulting pair kernel is P(z) = -|z|^ν / (2Γ(1+ν) sin(πν/2)).

namespace detail {

inline double sobolev_pair_scale(double s) {
    const double nu = 1.0 - 2.0 * s;
    return 1.0 / (2.0 * std::tgamma(1.0 + nu) * std::sin(0.5 * std::numbers::pi * nu));
}

// Weight of the lag-k autocorrelation of cell values for cells of width h.
inline std::vector<double> lag_weights(std::size_t n, double h, double s) {
    const double nu = 1.0 - 2.0 * s;
    const double c = sobolev_pair_scale(s) * std::pow(h, nu);
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double up = std::pow(kk + 1.0, nu);
        const double down = k == 0 ? 1.0 : std::pow(kk - 1.0, nu);
        const double mid = k == 0 ? 0.0 : std::pow(kk, nu);
        w[k] = c * (up + down - 2.0 * mid);
    }
    return w;
}

// r_k = Σ_j v_j v_{j+k}, k = 0..n-1, by zero-padded FFT.
inline std::vector<double> autocorrelation(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<double> r(n, 0.0);
    if (n <= 128) {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j + k < n; ++j) r[k] += v[j] * v[j + k];
        return r;
    }
    std::size_t m = 1;
    while (m < 2 * n) m <<= 1;
    std::vector<double> padded(m, 0.0);
    std::copy(v.begin(), v.end(), padded.begin());
    std::vector<std::complex<double>> spec;
    Eigen::FFT<double> fft;
    fft.fwd(spec, padded);
    for (auto& z : spec) z = std::norm(z);
    std::vector<double> back;
    fft.inv(back, spec);
    for (std::size_t k = 0; k < n; ++k) r[k] = back[k];
    return r;
}

}  // namespace detail

/// ‖f‖_{Ẇ^{s,2}(ℝ)} of the zero-extended grid function, with f read as
/// constant on each cell. The frequency integral is done exactly; the
/// cell autocorrelation is computed by a zero-padded FFT.
[[nodiscard]] inline double sobolev_norm_fourier(const GridFunction& f, SobolevOrder s) {
    const auto& v = f.values;
    if (v.empty()) return 0.0;
    const auto r = detail::autocorrelation(v);
    const auto w = detail::lag_weights(v.size(), f.grid.dt(), s);
    double acc = r[0] * w[0];
    for (std::size_t k = 1; k < v.size(); ++k) acc += 2.0 * r[k] * w[k];
    return std::sqrt(std::max(acc, 0.0));
}

/// ‖f‖_{Ẇ^{s,2}(ℝ)} of a step function with arbitrary breakpoints, from the
/// closed-form pair kernel (O(pieces²)).
[[nodiscard]] inline double sobolev_norm_step(const StepFunction& f, SobolevOrder s) {
    if (f.empty()) return 0.0;
    const double nu = 1.0 - 2.0 * s.value();
    const auto& br = f.breakpoints();
    const auto& v = f.values();
    auto P = [nu](double z) { return std::pow(std::abs(z), nu); };
    double acc = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0.0) continue;
        const double aj = br[j], bj = br[j + 1];
        acc += v[j] * v[j] * 2.0 * P(bj - aj);
        for (std::size_t k = j + 1; k < v.size(); ++k) {
            if (v[k] == 0.0) continue;
            const double ak = br[k], bk = br[k + 1];
            acc += 2.0 * v[j] * v[k] * (P(aj - bk) + P(bj - ak) - P(aj - ak) - P(bj - bk));
        }
    }
    return std::sqrt(std::max(acc * detail::sobolev_pair_scale(s), 0.0));
}

/// Norm of a general function sampled at cell midpoints on n and 2n cells of
/// [a, b]; `value` is the fine result and `coarse` the previous level.
struct SampledNorm {
    double value = 0.0;
    double coarse = 0.0;
    [[nodiscard]] double relative_change() const { return value == 0.0 ? 0.0 : std::abs(value - coarse) / value; }
};

template <class F>
[[nodiscard]] SampledNorm sobolev_norm_sampled(F&& f, double a, double b, SobolevOrder s, std::size_t n) {
    const TimeGrid g1(a, b, n), g2(a, b, 2 * n);
    return {sobolev_norm_fourier(GridFunction::sample(g2, f), s), sobolev_norm_fourier(GridFunction::sample(g1, f), s)};
}

}  // namespace fracint
