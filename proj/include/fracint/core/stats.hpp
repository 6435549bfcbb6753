#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace fracint::stats {

[[nodiscard]] inline double mean(std::span<const double> x) {
    if (x.empty()) return 0.0;
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

/// Unbiased sample variance.
[[nodiscard]] inline double variance(std::span<const double> x) {
    if (x.size() < 2) return 0.0;
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

/// Second moment about zero together with its Monte Carlo standard error.
struct MomentEstimate {
    double value = 0.0;
    double se = 0.0;
};

[[nodiscard]] inline MomentEstimate second_moment(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 2) return {};
    double s = 0.0;
    for (double v : x) s += v * v;
    const double m = s / static_cast<double>(n);
    double q = 0.0;
    for (double v : x) q += (v * v - m) * (v * v - m);
    return {m, std::sqrt(q / static_cast<double>(n - 1) / static_cast<double>(n))};
}

/// Mean of x*y with its standard error (the zero-mean covariance estimator).
[[nodiscard]] inline MomentEstimate cross_moment(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("cross_moment: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) return {};
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    const double m = s / static_cast<double>(n);
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) q += (x[i] * y[i] - m) * (x[i] * y[i] - m);
    return {m, std::sqrt(q / static_cast<double>(n - 1) / static_cast<double>(n))};
}

[[nodiscard]] inline double skewness(std::span<const double> x) {
    const double m = mean(x);
    double m2 = 0.0, m3 = 0.0;
    for (double v : x) {
        const double d = v - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    const double n = static_cast<double>(x.size());
    m2 /= n;
    m3 /= n;
    return m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
}

[[nodiscard]] inline double excess_kurtosis(std::span<const double> x) {
    const double m = mean(x);
    double m2 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    const double n = static_cast<double>(x.size());
    m2 /= n;
    m4 /= n;
    return m2 > 0.0 ? m4 / (m2 * m2) - 3.0 : 0.0;
}

/// Pearson sample correlation; under independence sqrt(n)·r is roughly N(0,1).
[[nodiscard]] inline double correlation(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return (sxx > 0.0 && syy > 0.0) ? sxy / std::sqrt(sxx * syy) : 0.0;
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

[[nodiscard]] inline LineFit least_squares(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("least_squares: need >= 2 paired points");
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

/// Jarque-Bera statistic and its chi-square(2) p-value exp(-JB/2).
struct NormalityTest {
    double statistic = 0.0;
    double p_value = 1.0;
};

[[nodiscard]] inline NormalityTest jarque_bera(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double s = skewness(x), k = excess_kurtosis(x);
    const double jb = n / 6.0 * (s * s + 0.25 * k * k);
    return {jb, std::exp(-0.5 * jb)};
}

/// Two-sample Kolmogorov-Smirnov statistic with the asymptotic p-value.
[[nodiscard]] inline NormalityTest ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double en = std::sqrt(na * nb / (na + nb));
    const double lambda = (en + 0.12 + 0.11 / en) * d;
    if (lambda < 1e-3) return {d, 1.0};
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
        p += term;
        if (std::abs(term) < 1e-12) break;
    }
    return {d, std::clamp(p, 0.0, 1.0)};
}

}  // namespace fracint::stats
