#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracint/sobolev/fourier.hpp"
#include "fracint/sobolev/step_function.hpp"

namespace fracint {

/// Averages of f over the cells a + r(k + [0,1)) that meet its support,
/// returned as a step function on that decomposition.
[[nodiscard]] inline StepFunction averaging_operator(const StepFunction& f, double a, double r) {
    if (!(r > 0.0)) throw std::domain_error("averaging_operator: r must be positive");
    if (f.empty()) return {};
    const auto k_lo = static_cast<long>(std::floor((f.support_start() - a) / r));
    const auto k_hi = static_cast<long>(std::ceil((f.support_end() - a) / r));
    std::vector<double> br, val;
    br.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (long k = k_lo; k <= k_hi; ++k) br.push_back(a + r * static_cast<double>(k));
    val.assign(br.size() - 1, 0.0);
    const auto& fb = f.breakpoints();
    for (std::size_t j = 0; j < f.pieces(); ++j) {
        const double v = f.values()[j];
        if (v == 0.0) continue;
        auto first = static_cast<std::size_t>(std::max(0L, static_cast<long>(std::floor((fb[j] - a) / r)) - k_lo));
        for (std::size_t q = first; q < val.size(); ++q) {
            const double lo = std::max(br[q], fb[j]), hi = std::min(br[q + 1], fb[j + 1]);
            if (br[q] >= fb[j + 1]) break;
            if (hi > lo) val[q] += v * (hi - lo) / r;
        }
    }
    return StepFunction::combine(StepFunction(std::move(br), std::move(val)), StepFunction{},
                                 [](double x, double) { return x; });
}

[[nodiscard]] inline StepFunction averaging_operator(const GridFunction& f, double a, double r) {
    return averaging_operator(f.to_step(), a, r);
}

struct NormPair {
    double transformed = 0.0;
    double predicted = 0.0;
};

/// (‖F(a·+b)‖_{Ẇ^{s,2}}, |a|^{s-1/2}‖F‖_{Ẇ^{s,2}}).
[[nodiscard]] inline NormPair affine_transform_norm_check(const StepFunction& F, double a, double b, SobolevOrder s) {
    if (a == 0.0) throw std::domain_error("affine_transform_norm_check: a must be nonzero");
    return {sobolev_norm_step(F.affine(a, b), s), std::pow(std::abs(a), s.value() - 0.5) * sobolev_norm_step(F, s)};
}

/// ‖1_{[lo,hi)} F‖_{Ẇ^{s,2}}.
[[nodiscard]] inline double restriction_norm(const StepFunction& F, double lo, double hi, SobolevOrder s) {
    if (!(hi > lo)) throw std::invalid_argument("restriction_norm: need lo < hi");
    return sobolev_norm_step(F.restricted(lo, hi), s);
}

/// ‖f‖_{L^p(ℝ)}, p ≥ 1.
[[nodiscard]] inline double lp_norm(const StepFunction& f, double p) {
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: need p >= 1");
    double acc = 0.0;
    for (std::size_t j = 0; j < f.pieces(); ++j) acc += std::pow(std::abs(f.values()[j]), p) * (f.right(j) - f.left(j));
    return std::pow(acc, 1.0 / p);
}

}  // namespace fracint
