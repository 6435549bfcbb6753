#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "fracint/core/circulant.hpp"
#include "fracint/core/parallel.hpp"
#include "fracint/core/rng.hpp"
#include "fracint/process/ensemble.hpp"

namespace fracint {

enum class FbmMethod { Cholesky, Circulant };

struct SimOptions {
    unsigned threads = 0;
    std::uint64_t lane = 0;  // distinguishes independent copies that share a seed
    FbmMethod method = FbmMethod::Cholesky;
    double jitter = 0.0;     // relative diagonal regularization for Cholesky
};

/// Gaussian sampler for z_{t_1}, ..., z_{t_N} on a grid starting at 0.
class FbmSampler {
public:
    FbmSampler(const FracParams& params, const TimeGrid& grid, FbmMethod method = FbmMethod::Cholesky,
               double jitter = 0.0)
        : H_(params.H), sigma_(params.sigma), n_(grid.steps()), dt_(grid.dt()), method_(method) {
        if (grid.start() != 0.0) throw std::invalid_argument("FbmSampler: grid must start at 0");
        if (params.chaos_order != 1) throw std::invalid_argument("FbmSampler: Gaussian families only");
        if (method == FbmMethod::Cholesky) {
            Eigen::MatrixXd cov(n_, n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j <= i; ++j)
                    cov(i, j) = cov(j, i) = covariance_rh(grid.node(i + 1), grid.node(j + 1), H_);
            if (jitter > 0.0) cov.diagonal().array() += jitter * cov.diagonal().maxCoeff();
            Eigen::LLT<Eigen::MatrixXd> llt(cov);
            const Eigen::MatrixXd L = llt.matrixL();
            const bool bad = llt.info() != Eigen::Success || !L.allFinite() ||
                             L.diagonal().minCoeff() <= 1e-14 * L.diagonal().maxCoeff();
            if (bad) throw std::runtime_error("grid too fine for factorization; use jitter/regularization flag");
            chol_ = sigma_ * L;
        } else {
            std::vector<double> acov(n_ + 1);
            for (std::size_t k = 0; k <= n_; ++k) acov[k] = fgn_autocov(H_, static_cast<double>(k));
            circ_.emplace(acov);
        }
    }

    [[nodiscard]] std::size_t normals_needed() const noexcept {
        return method_ == FbmMethod::Cholesky ? n_ : circ_->normals_needed();
    }

    /// Fills path[0..N] (path[0] = 0) from the given standard normals.
    void sample(std::span<const double> normals, std::span<double> path) const {
        if (path.size() != n_ + 1) throw std::invalid_argument("FbmSampler: path size mismatch");
        path[0] = 0.0;
        if (method_ == FbmMethod::Cholesky) {
            Eigen::Map<const Eigen::VectorXd> xi(normals.data(), static_cast<Eigen::Index>(n_));
            Eigen::Map<Eigen::VectorXd> out(path.data() + 1, static_cast<Eigen::Index>(n_));
            out.noalias() = chol_.triangularView<Eigen::Lower>() * xi;
        } else {
            thread_local std::vector<double> incr;
            incr.resize(n_);
            circ_->sample(normals, incr);
            const double s = sigma_ * std::pow(dt_, H_);
            double acc = 0.0;
            for (std::size_t i = 0; i < n_; ++i) {
                acc += s * incr[i];
                path[i + 1] = acc;
            }
        }
    }

    void sample(CounterRng& rng, std::span<double> path) const {
        thread_local std::vector<double> xi;
        xi.resize(normals_needed());
        rng.fill_normal(xi);
        sample(xi, path);
    }

private:
    double H_;
    double sigma_;
    std::size_t n_;
    double dt_;
    FbmMethod method_;
    Eigen::MatrixXd chol_;
    std::optional<CirculantGaussian> circ_;
};

[[nodiscard]] inline PathEnsemble simulate_fbm(const FracParams& params, const TimeGrid& grid, std::size_t n_paths,
                                               std::uint64_t seed, const SimOptions& opt = {}) {
    if (params.family != Family::FBM && !(params.family == Family::GENERALIZED && params.k == 1))
        throw std::invalid_argument("simulate_fbm: family must be fbm");
    const FbmSampler sampler(params, grid, opt.method, opt.jitter);
    PathEnsemble ens(grid, params, n_paths, seed);
    parallel_for(n_paths, opt.threads ? opt.threads : default_threads(), [&](std::size_t p) {
        CounterRng rng(seed, p, opt.lane);
        sampler.sample(rng, ens.path(p));
    });
    return ens;
}

}  // namespace fracint
