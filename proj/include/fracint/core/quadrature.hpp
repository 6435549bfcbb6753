#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace fracint::quad {

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    int levels = 0;
};

namespace detail {

// Calls f with (x, x - a, b - x) when it accepts three arguments so that
// integrands singular at an endpoint can use the exact distance.
template <class F>
double call(F& f, double x, double da, double db) {
    if constexpr (std::is_invocable_r_v<double, F&, double, double, double>) {
        return f(x, da, db);
    } else {
        return f(x);
    }
}

inline constexpr double kTiny = 1e-300;

}  // namespace detail

/// Double-exponential (tanh-sinh) rule on a finite interval. Abscissas are
/// generated as distances from the nearer endpoint, so endpoint
/// singularities of integrable power type are resolved.
template <class F>
Estimate tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-10, int max_level = 12) {
    if (!(b > a)) return {};
    const double len = b - a;
    const double half_pi = 0.5 * std::numbers::pi;
    auto node_sum = [&](double t) {
        const double u = half_pi * std::sinh(t);
        const double w = half_pi * std::cosh(t) / (std::cosh(u) * std::cosh(u)) * 0.5 * len;
        if (!(w > 0.0)) return 0.0;
        double x, da, db;
        if (t < 0.0) {
            da = len / (1.0 + std::exp(-2.0 * u));
            db = len - da;
            x = a + da;
        } else {
            db = len / (1.0 + std::exp(2.0 * u));
            da = len - db;
            x = b - db;
        }
        if (da < detail::kTiny * len || db < detail::kTiny * len) return 0.0;
        return w * detail::call(f, x, da, db);
    };
    const double t_max = 6.1;
    double h = 0.5;
    double sum = node_sum(0.0);
    for (int j = 1; j * h <= t_max; ++j) sum += node_sum(j * h) + node_sum(-j * h);
    double estimate = sum * h;
    Estimate out{estimate, std::abs(estimate), 0};
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int j = 1; j * h <= t_max; j += 2) add += node_sum(j * h) + node_sum(-j * h);
        sum += add;
        const double next = sum * h;
        out.error = std::abs(next - estimate);
        out.value = next;
        out.levels = level;
        estimate = next;
        if (level >= 3 && out.error <= rel_tol * std::abs(next)) break;
        if (level >= 3 && next == 0.0 && out.error == 0.0) break;
    }
    return out;
}

/// Double-exponential (exp-sinh) rule on (a, inf).
template <class F>
Estimate exp_sinh(F&& f, double a, double rel_tol = 1e-10, int max_level = 12) {
    const double half_pi = 0.5 * std::numbers::pi;
    auto node_sum = [&](double t) {
        const double e = half_pi * std::sinh(t);
        if (e > 700.0 || e < -700.0) return 0.0;
        const double d = std::exp(e);
        const double w = d * half_pi * std::cosh(t);
        const double x = a + d;
        if (d == 0.0 || !std::isfinite(x)) return 0.0;
        const double v = detail::call(f, x, d, std::numeric_limits<double>::infinity());
        return std::isfinite(v * w) ? v * w : 0.0;
    };
    const double t_lo = -6.0, t_hi = 6.0;
    double h = 0.5;
    double sum = node_sum(0.0);
    for (int j = 1; j * h <= t_hi; ++j) sum += node_sum(j * h);
    for (int j = 1; -j * h >= t_lo; ++j) sum += node_sum(-j * h);
    double estimate = sum * h;
    Estimate out{estimate, std::abs(estimate), 0};
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int j = 1; j * h <= t_hi; j += 2) add += node_sum(j * h);
        for (int j = 1; -j * h >= t_lo; j += 2) add += node_sum(-j * h);
        sum += add;
        const double next = sum * h;
        out.error = std::abs(next - estimate);
        out.value = next;
        out.levels = level;
        estimate = next;
        if (level >= 3 && out.error <= rel_tol * std::abs(next)) break;
    }
    return out;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(std::size_t n) : nodes(n), weights(n) {
        if (n == 0) throw std::invalid_argument("GaussLegendre: n must be positive");
        for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= n; ++k) {
                    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                    p0 = p1;
                    p1 = pk;
                }
                dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = weights[n - 1 - i] = w;
        }
    }

    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(c + h * nodes[i]);
        return s * h;
    }
};

inline const GaussLegendre& gauss_legendre(std::size_t n) {
    static std::mutex m;
    static std::map<std::size_t, GaussLegendre> cache;
    std::lock_guard lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
    return it->second;
}

/// Composite Gauss-Legendre on geometrically graded panels (ratio 2) that
/// accumulate at the left endpoint a. `levels` panels are used; the last one
/// reaches down to a + (b-a)/2^levels and the remainder is dropped.
template <class F>
double graded_left(F&& f, double a, double b, int levels, std::size_t n_gl = 20) {
    const auto& gl = gauss_legendre(n_gl);
    double s = 0.0;
    double hi = b - a;
    for (int l = 0; l < levels; ++l) {
        const double lo = 0.5 * hi;
        s += gl.integrate([&](double d) { return f(a + d); }, lo, hi);
        hi = lo;
    }
    return s;
}

}  // namespace fracint::quad
