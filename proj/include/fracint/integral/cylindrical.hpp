#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracint/integral/elementary.hpp"

namespace fracint {

/// Finite-rank operator A: U → D^H(T) given by its columns A e_k.
struct HSOperator {
    std::vector<StepFunction> columns;

    [[nodiscard]] std::size_t dim_U() const noexcept { return columns.size(); }
};

/// Column norms ‖A e_k‖²_{D^H}, in column order.
[[nodiscard]] inline std::vector<double> column_norms_sq(const HSOperator& A, const FracParams& params) {
    std::vector<double> out;
    out.reserve(A.columns.size());
    for (const auto& c : A.columns) {
        const double n = c.empty() ? 0.0 : dh_norm_kstar(c, params);
        out.push_back(n * n);
    }
    return out;
}

/// Geometric extrapolation of Σ_{k>K} ‖A e_k‖² from the last two retained
/// columns. Infinite when the column norms do not decay.
[[nodiscard]] inline double hs_tail_estimate(const std::vector<double>& norms_sq) {
    if (norms_sq.size() < 2) return norms_sq.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    const double last = norms_sq.back(), prev = norms_sq[norms_sq.size() - 2];
    if (last == 0.0) return 0.0;
    if (!(prev > last)) return std::numeric_limits<double>::infinity();
    const double q = last / prev;
    return last * q / (1.0 - q);
}

struct CylindricalIntegralResult {
    std::vector<double> samples;
    std::vector<double> column_norms_sq;
    std::vector<double> partial_hs_sq;  // Σ_{k<=K'} ‖A e_k‖², K' = 1..dim_U
    double hs_norm_sq = 0.0;
    double tail_estimate = 0.0;
    std::size_t snapped = 0;
};

/// ξ = Σ_k ∫ A e_k dZ(e_k) per path; E ξ² = ‖A‖²_HS.
[[nodiscard]] inline CylindricalIntegralResult cylindrical_integral(const HSOperator& A, const CylindricalEnsemble& ens) {
    if (A.dim_U() != ens.dim_U()) throw std::invalid_argument("cylindrical_integral: operator and ensemble dimensions differ");
    if (A.dim_U() == 0) throw std::invalid_argument("cylindrical_integral: empty operator");
    const auto& params = ens.components.front().params();
    CylindricalIntegralResult out;
    out.samples.assign(ens.components.front().n_paths(), 0.0);
    for (std::size_t k = 0; k < A.dim_U(); ++k) {
        const auto part = elementary_integral(A.columns[k], ens.components[k]);
        if (part.samples.size() != out.samples.size()) throw std::invalid_argument("cylindrical_integral: path counts differ");
        for (std::size_t p = 0; p < out.samples.size(); ++p) out.samples[p] += part.samples[p];
        out.snapped += part.snapped;
    }
    out.column_norms_sq = column_norms_sq(A, params);
    double acc = 0.0;
    for (double c : out.column_norms_sq) out.partial_hs_sq.push_back(acc += c);
    out.hs_norm_sq = acc;
    out.tail_estimate = hs_tail_estimate(out.column_norms_sq);
    return out;
}

}  // namespace fracint
