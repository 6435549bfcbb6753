#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracint/sobolev/step_function.hpp"

namespace fracint {

/// Interval [lo, hi] with possibly infinite ends.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static Interval real_line() { return {}; }
    [[nodiscard]] bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

namespace detail {

// Second antiderivative of |z|^{-1-2s}, valid for 0 < s < 1/2:
// ∫_a^b ∫_c^d |x-y|^{-1-2s} dy dx = G(b-c) - G(a-c) - G(b-d) + G(a-d), disjoint cells.
inline double gagliardo_g2(double z, double s) {
    return std::pow(std::abs(z), 1.0 - 2.0 * s) / ((1.0 - 2.0 * s) * (-2.0 * s));
}

// ∫_a^b ∫_c^∞ (y-x)^{-1-2s} dy dx for b <= c.
inline double gagliardo_exterior(double a, double b, double c, double s) {
    const double e = 1.0 - 2.0 * s;
    return (std::pow(c - a, e) - std::pow(c - b, e)) / (2.0 * s * e);
}

}  // namespace detail

/// (∫_T∫_T |f(x)-f(y)|² |x-y|^{-1-2s} dx dy)^{1/2} for a step function and
/// 0 < s < 1/2. Cell pairs are integrated in closed form; unbounded ends of
/// T contribute through the exterior term where f vanishes.
[[nodiscard]] inline double gagliardo_seminorm(const StepFunction& f, double s, Interval T = {}) {
    if (!(s > 0.0 && s < 0.5)) throw std::domain_error("gagliardo_seminorm: need 0 < s < 1/2");
    if (!(T.hi > T.lo)) throw std::invalid_argument("gagliardo_seminorm: empty interval");
    // Cells covering the finite part of T, with explicit zero padding out to
    // finite ends of T.
    std::vector<double> br;
    std::vector<double> val;
    if (!f.empty()) {
        const auto& fb = f.breakpoints();
        for (std::size_t j = 0; j < f.pieces(); ++j) {
            const double a = std::max(fb[j], T.lo), b = std::min(fb[j + 1], T.hi);
            if (!(b > a)) continue;
            if (br.empty()) br.push_back(a);
            else if (br.back() < a) {
                val.push_back(0.0);
                br.push_back(a);
            }
            val.push_back(f.values()[j]);
            br.push_back(b);
        }
    }
    if (br.empty()) return 0.0;
    if (std::isfinite(T.lo) && T.lo < br.front()) {
        br.insert(br.begin(), T.lo);
        val.insert(val.begin(), 0.0);
    }
    if (std::isfinite(T.hi) && T.hi > br.back()) {
        br.push_back(T.hi);
        val.push_back(0.0);
    }
    const std::size_t n = val.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = br[i], b = br[i + 1];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dv = val[i] - val[j];
            if (dv == 0.0) continue;
            const double c = br[j], d = br[j + 1];
            using detail::gagliardo_g2;
            acc += 2.0 * dv * dv * (gagliardo_g2(b - c, s) - gagliardo_g2(a - c, s) - gagliardo_g2(b - d, s) + gagliardo_g2(a - d, s));
        }
        if (val[i] == 0.0) continue;
        const double v2 = val[i] * val[i];
        if (!std::isfinite(T.hi)) acc += 2.0 * v2 * detail::gagliardo_exterior(a, b, br.back(), s);
        if (!std::isfinite(T.lo)) acc += 2.0 * v2 * detail::gagliardo_exterior(-b, -a, -br.front(), s);
    }
    return std::sqrt(std::max(acc, 0.0));
}

/// Gagliardo norm on T: the seminorm, plus ‖f‖²_{L²(T)} when T is bounded.
[[nodiscard]] inline double sobolev_norm_gagliardo(const StepFunction& f, double s, Interval T = {}) {
    const double semi = gagliardo_seminorm(f, s, T);
    if (!T.bounded()) return semi;
    double l2 = 0.0;
    const auto g = f.restricted(T.lo, T.hi);
    for (std::size_t j = 0; j < g.pieces(); ++j) l2 += g.values()[j] * g.values()[j] * (g.right(j) - g.left(j));
    return std::sqrt(semi * semi + l2);
}

[[nodiscard]] inline double sobolev_norm_gagliardo(const GridFunction& f, double s, Interval T = {}) {
    return sobolev_norm_gagliardo(f.to_step(), s, T);
}

}  // namespace fracint
