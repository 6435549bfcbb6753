#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracint/core/grid.hpp"
#include "fracint/process/params.hpp"

namespace fracint {

[[nodiscard]] inline double covariance_rh(double s, double t, double H) {
    if (!(H > 0.0 && H < 1.0)) throw std::domain_error("covariance_rh: H must lie in (0,1)");
    const double h2 = 2.0 * H;
    return 0.5 * (std::pow(std::abs(s), h2) + std::pow(std::abs(t), h2) - std::pow(std::abs(t - s), h2));
}

/// Paths stored row-major: path p occupies values[p*nodes, (p+1)*nodes).
class PathEnsemble {
public:
    PathEnsemble(TimeGrid grid, FracParams params, std::size_t n_paths, std::uint64_t seed)
        : grid_(grid), params_(params), n_paths_(n_paths), seed_(seed), data_(n_paths * grid.nodes(), 0.0) {}

    [[nodiscard]] const TimeGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const FracParams& params() const noexcept { return params_; }
    [[nodiscard]] std::size_t n_paths() const noexcept { return n_paths_; }
    [[nodiscard]] std::size_t n_nodes() const noexcept { return grid_.nodes(); }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    [[nodiscard]] std::span<double> path(std::size_t p) { return {data_.data() + p * n_nodes(), n_nodes()}; }
    [[nodiscard]] std::span<const double> path(std::size_t p) const {
        return {data_.data() + p * n_nodes(), n_nodes()};
    }
    [[nodiscard]] double value(std::size_t p, std::size_t node) const { return data_[p * n_nodes() + node]; }

    /// Values z_{t_node} across all paths.
    [[nodiscard]] std::vector<double> column(std::size_t node) const {
        std::vector<double> out(n_paths_);
        for (std::size_t p = 0; p < n_paths_; ++p) out[p] = value(p, node);
        return out;
    }

    [[nodiscard]] const std::vector<double>& raw() const noexcept { return data_; }

private:
    TimeGrid grid_;
    FracParams params_;
    std::size_t n_paths_;
    std::uint64_t seed_;
    std::vector<double> data_;
};

/// Independent copies Z(e_1), ..., Z(e_K) on a shared grid.
struct CylindricalEnsemble {
    std::vector<PathEnsemble> components;

    [[nodiscard]] std::size_t dim_U() const noexcept { return components.size(); }
};

}  // namespace fracint
