#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracint/core/grid.hpp"
#include "fracint/core/rng.hpp"

namespace fracint {

/// Isonormal Gaussian process over L²([-A, T]) restricted to piecewise
/// constant functions on a uniform inner grid. Path p draws its cell
/// increments ΔW_i ~ N(0, dt) from the counter-based stream (seed, p, lane).
class DiscreteIsonormal {
public:
    DiscreteIsonormal(TimeGrid inner_grid, std::uint64_t seed, std::uint64_t lane = 0)
        : grid_(inner_grid), seed_(seed), lane_(lane) {}

    /// Window [-A, T] with A = window_factor * T.
    static DiscreteIsonormal over_window(double T, double window_factor, std::size_t n_cells,
                                         std::uint64_t seed, std::uint64_t lane = 0) {
        if (!(T > 0.0) || window_factor < 0.0) throw std::invalid_argument("DiscreteIsonormal: bad window");
        return DiscreteIsonormal(TimeGrid(-window_factor * T, T, n_cells), seed, lane);
    }

    [[nodiscard]] const TimeGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t cells() const noexcept { return grid_.steps(); }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t lane() const noexcept { return lane_; }

    /// Standard normals ξ_i (unit variance) for path p; ΔW_i = sqrt(dt)·ξ_i.
    void standard_normals(std::size_t path, std::span<double> out) const {
        if (out.size() != cells()) throw std::invalid_argument("DiscreteIsonormal: buffer size mismatch");
        CounterRng rng(seed_, path, lane_);
        rng.fill_normal(out);
    }

    /// Arbitrary-length block of standard normals from the same stream, for
    /// samplers that realize W through a spectral (circulant) basis.
    void draw(std::size_t path, std::span<double> out) const {
        CounterRng rng(seed_, path, lane_);
        rng.fill_normal(out);
    }

    void increments(std::size_t path, std::span<double> out) const {
        standard_normals(path, out);
        const double s = std::sqrt(grid_.dt());
        for (double& v : out) v *= s;
    }

    [[nodiscard]] std::vector<double> increments(std::size_t path) const {
        std::vector<double> out(cells());
        increments(path, out);
        return out;
    }

    /// W(v) = Σ v_i ΔW_i for a cell-valued function v.
    [[nodiscard]] double evaluate(std::span<const double> v, std::span<const double> dW) const {
        if (v.size() != dW.size()) throw std::invalid_argument("DiscreteIsonormal: function size mismatch");
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * dW[i];
        return s;
    }

    /// L² inner product of two cell-valued functions on the inner grid.
    [[nodiscard]] double inner(std::span<const double> v1, std::span<const double> v2) const {
        double s = 0.0;
        for (std::size_t i = 0; i < v1.size(); ++i) s += v1[i] * v2[i];
        return s * grid_.dt();
    }

private:
    TimeGrid grid_;
    std::uint64_t seed_;
    std::uint64_t lane_;
};

}  // namespace fracint
