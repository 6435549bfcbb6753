#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "fracint/chaos/isonormal.hpp"
#include "fracint/core/circulant.hpp"
#include "fracint/core/parallel.hpp"
#include "fracint/process/ensemble.hpp"

namespace fracint {

struct HermiteOptions {
    std::size_t substeps = 4;       // fine cells per output grid step
    double window_factor = 10.0;    // A = window_factor * T when beta != 0
    std::size_t cholesky_limit = 2048;  // larger inner grids use circulant embedding
    unsigned threads = 0;
};

/// Second-chaos H-sssi process z_t = C ∫ k_t^β(u) :X_u²: du, where X is the
/// moving average ∫ (u - y)_+^{α/2} dW(y).
///
/// Over a fine cell of width δ the Wick square integrates to a(Y_m² - 1)
/// with Y a stationary unit Gaussian sequence, ρ(j) = sqrt(γ_{H0}(j)) and
/// γ_{H0} the fGn correlation at H0 = α + 2. This gives the base increments
/// exactly the covariance δ^{2H0} γ_{H0}; the filter k^β is applied as cell
/// averages on [-A, T].
class HermiteK2Sampler {
public:
    HermiteK2Sampler(const FracParams& params, const TimeGrid& grid, const HermiteOptions& opt = {})
        : params_(params), grid_(grid) {
        params.validate();
        if (params.family == Family::FBM || params.k != 2)
            throw std::invalid_argument("HermiteK2Sampler: needs a k = 2 Hermite-type family");
        if (grid.start() != 0.0) throw std::invalid_argument("HermiteK2Sampler: grid must start at 0");
        if (opt.substeps == 0) throw std::invalid_argument("HermiteK2Sampler: substeps must be positive");
        h0_ = params.base_hurst();
        beta_ = params.beta;
        sub_ = opt.substeps;
        delta_ = grid.dt() / static_cast<double>(sub_);
        const std::size_t inside = grid.steps() * sub_;
        before_ = beta_ == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(opt.window_factor * grid.end() / delta_ - 1e-9));
        cells_ = before_ + inside;

        std::vector<double> rho(cells_ + 1);
        for (std::size_t j = 0; j <= cells_; ++j) rho[j] = std::sqrt(fgn_autocov(h0_, static_cast<double>(j)));
        if (cells_ <= opt.cholesky_limit) {
            Eigen::MatrixXd R(cells_, cells_);
            for (std::size_t i = 0; i < cells_; ++i)
                for (std::size_t j = 0; j < cells_; ++j) R(i, j) = rho[i > j ? i - j : j - i];
            Eigen::LLT<Eigen::MatrixXd> llt(R);
            if (llt.info() != Eigen::Success) throw std::runtime_error("HermiteK2Sampler: base correlation not positive definite");
            chol_ = llt.matrixL();
        } else {
            circ_.emplace(rho);
        }
        wick_scale_ = std::pow(delta_, h0_) / std::sqrt(2.0);

        if (beta_ != 0.0) {
            filter_.resize(static_cast<Eigen::Index>(grid.nodes()), static_cast<Eigen::Index>(cells_));
            for (std::size_t i = 0; i < grid.nodes(); ++i)
                for (std::size_t m = 0; m < cells_; ++m)
                    filter_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m)) = filter_average(grid.node(i), m);
        }
        calibrate();
    }

    [[nodiscard]] const TimeGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t inner_cells() const noexcept { return cells_; }
    [[nodiscard]] TimeGrid inner_grid() const {
        return TimeGrid(-static_cast<double>(before_) * delta_, grid_.end(), cells_);
    }
    [[nodiscard]] std::size_t normals_needed() const noexcept {
        return circ_ ? circ_->normals_needed() : cells_;
    }
    /// Normalizing constant C: fixed from the exact discrete variance so that E z_1² = σ².
    [[nodiscard]] double normalization() const noexcept { return C_; }
    /// Exact discrete covariance E z_{t_i} z_{t_j} implied by the scheme.
    [[nodiscard]] double scheme_covariance(std::size_t i, std::size_t j) const {
        return C_ * C_ * raw_covariance(i, j);
    }

    void sample(std::span<const double> normals, std::span<double> path) const {
        if (path.size() != grid_.nodes()) throw std::invalid_argument("HermiteK2Sampler: path size mismatch");
        thread_local Eigen::VectorXd y, eps;
        y.resize(static_cast<Eigen::Index>(cells_));
        eps.resize(static_cast<Eigen::Index>(cells_));
        if (circ_) {
            circ_->sample(normals, std::span<double>(y.data(), cells_));
        } else {
            Eigen::Map<const Eigen::VectorXd> xi(normals.data(), static_cast<Eigen::Index>(cells_));
            y.noalias() = chol_.triangularView<Eigen::Lower>() * xi;
        }
        eps = wick_scale_ * (y.array().square() - 1.0);
        if (beta_ == 0.0) {
            path[0] = 0.0;
            double acc = 0.0;
            for (std::size_t i = 1; i < grid_.nodes(); ++i) {
                for (std::size_t m = (i - 1) * sub_; m < i * sub_; ++m) acc += eps[static_cast<Eigen::Index>(m)];
                path[i] = C_ * acc;
            }
        } else {
            Eigen::Map<Eigen::VectorXd> out(path.data(), static_cast<Eigen::Index>(path.size()));
            out.noalias() = C_ * (filter_ * eps);
            path[0] = 0.0;
        }
    }

private:
    // Cell average over inner cell m of k_t^β(u) = [(t-u)_+^β - (-u)_+^β]/β.
    [[nodiscard]] double filter_average(double t, std::size_t m) const {
        const double c0 = (static_cast<double>(m) - static_cast<double>(before_)) * delta_;
        const double c1 = c0 + delta_;
        const double b1 = beta_ + 1.0;
        auto piece = [&](double s) {
            const double lo = std::max(s - c0, 0.0), hi = std::max(s - c1, 0.0);
            return (std::pow(lo, b1) - std::pow(hi, b1)) / b1;
        };
        return (piece(t) - piece(0.0)) / (beta_ * delta_);
    }

    [[nodiscard]] double base_cov(std::size_t m, std::size_t l) const {
        const double lag = static_cast<double>(m > l ? m - l : l - m);
        return std::pow(delta_, 2.0 * h0_) * fgn_autocov(h0_, lag);
    }

    [[nodiscard]] double raw_covariance(std::size_t i, std::size_t j) const {
        if (beta_ == 0.0) return covariance_rh(grid_.node(i), grid_.node(j), h0_);
        std::vector<double> gam(cells_);
        for (std::size_t d = 0; d < cells_; ++d) gam[d] = base_cov(d, 0);
        double s = 0.0;
        for (std::size_t m = 0; m < cells_; ++m) {
            const double fm = filter_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m));
            if (fm == 0.0) continue;
            double inner = 0.0;
            for (std::size_t l = 0; l < cells_; ++l)
                inner += gam[m > l ? m - l : l - m] * filter_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l));
            s += fm * inner;
        }
        return s;
    }

    void calibrate() {
        // Normalize at t = 1 when it is a grid node, otherwise at T with the
        // self-similar target σ² T^{2H}.
        std::size_t ref = grid_.nodes() - 1;
        const long one = grid_.snap(1.0, 1e-12);
        if (one > 0) ref = static_cast<std::size_t>(one);
        const double target = params_.sigma * params_.sigma * std::pow(grid_.node(ref), 2.0 * params_.H);
        C_ = 1.0;
        const double v = raw_covariance(ref, ref);
        if (!(v > 0.0)) throw std::runtime_error("HermiteK2Sampler: degenerate calibration variance");
        C_ = std::sqrt(target / v);
    }

    FracParams params_;
    TimeGrid grid_;
    double h0_ = 0.0;
    double beta_ = 0.0;
    std::size_t sub_ = 1;
    double delta_ = 0.0;
    std::size_t before_ = 0;
    std::size_t cells_ = 0;
    double wick_scale_ = 0.0;
    double C_ = 1.0;
    Eigen::MatrixXd chol_;
    std::optional<CirculantGaussian> circ_;
    Eigen::MatrixXd filter_;
};

/// Isonormal process matching a sampler's inner discretization.
[[nodiscard]] inline DiscreteIsonormal hermite_k2_isonormal(const HermiteK2Sampler& sampler, std::uint64_t seed,
                                                            std::uint64_t lane = 0) {
    return DiscreteIsonormal(sampler.inner_grid(), seed, lane);
}

[[nodiscard]] inline PathEnsemble simulate_hermite_k2(const FracParams& params, const TimeGrid& grid,
                                                      const DiscreteIsonormal& iso, std::size_t n_paths,
                                                      const HermiteOptions& opt = {}) {
    const HermiteK2Sampler sampler(params, grid, opt);
    PathEnsemble ens(grid, params, n_paths, iso.seed());
    parallel_for(n_paths, opt.threads ? opt.threads : default_threads(), [&](std::size_t p) {
        thread_local std::vector<double> xi;
        xi.resize(sampler.normals_needed());
        iso.draw(p, xi);
        sampler.sample(xi, ens.path(p));
    });
    return ens;
}

[[nodiscard]] inline PathEnsemble simulate_hermite_k2(const FracParams& params, const TimeGrid& grid,
                                                      std::size_t n_paths, std::uint64_t seed,
                                                      std::uint64_t lane = 0, const HermiteOptions& opt = {}) {
    const HermiteK2Sampler sampler(params, grid, opt);
    return simulate_hermite_k2(params, grid, hermite_k2_isonormal(sampler, seed, lane), n_paths, opt);
}

}  // namespace fracint
