#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace fracint {

/// Exact sampler for a stationary Gaussian sequence X_0..X_{n-1} with
/// autocovariance acov[0..n] by circulant embedding of size 2n.
class CirculantGaussian {
public:
    explicit CirculantGaussian(std::span<const double> acov) : n_(acov.size() - 1), m_(2 * n_) {
        if (acov.size() < 2) throw std::invalid_argument("CirculantGaussian: need lags 0..n with n >= 1");
        std::vector<std::complex<double>> row(m_), eig(m_);
        for (std::size_t j = 0; j < m_; ++j) row[j] = j <= n_ ? acov[j] : acov[m_ - j];
        Eigen::FFT<double> fft;
        fft.fwd(eig, row);
        scale_.resize(m_);
        double top = 0.0;
        for (const auto& e : eig) top = std::max(top, std::abs(e.real()));
        for (std::size_t k = 0; k < m_; ++k) {
            double lam = eig[k].real();
            if (lam < 0.0) {
                if (lam < -1e-10 * top) throw std::runtime_error("CirculantGaussian: embedding is not non-negative definite");
                lam = 0.0;
            }
            scale_[k] = std::sqrt(lam / static_cast<double>(m_));
        }
    }

    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    /// Number of standard normals consumed per sample.
    [[nodiscard]] std::size_t normals_needed() const noexcept { return 2 * m_; }

    /// out[j] = Re Σ_k sqrt(λ_k/m) (ξ_k + iη_k) e^{-2πijk/m}, j < n.
    void sample(std::span<const double> normals, std::span<double> out) const {
        if (normals.size() != normals_needed() || out.size() != n_)
            throw std::invalid_argument("CirculantGaussian: buffer size mismatch");
        thread_local Eigen::FFT<double> fft;
        thread_local std::vector<std::complex<double>> in, res;
        in.resize(m_);
        res.resize(m_);
        for (std::size_t k = 0; k < m_; ++k) in[k] = {scale_[k] * normals[2 * k], scale_[k] * normals[2 * k + 1]};
        fft.fwd(res, in);
        for (std::size_t j = 0; j < n_; ++j) out[j] = res[j].real();
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<double> scale_;
};

/// Autocovariance of unit fractional Gaussian noise at integer lag k.
[[nodiscard]] inline double fgn_autocov(double H, double k) {
    k = std::abs(k);
    const double h2 = 2.0 * H;
    return 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) + std::pow(std::abs(k - 1.0), h2));
}

}  // namespace fracint
