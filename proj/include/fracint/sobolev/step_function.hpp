#pragma once

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracint/core/grid.hpp"

namespace fracint {

/// f = Σ_j v_j 1_{[t_{j-1}, t_j)}, zero outside [t_0, t_n).
class StepFunction {
public:
    StepFunction() = default;
    StepFunction(std::vector<double> breakpoints, std::vector<double> values)
        : breaks_(std::move(breakpoints)), values_(std::move(values)) {
        if (breaks_.empty() && values_.empty()) return;
        if (breaks_.size() != values_.size() + 1)
            throw std::invalid_argument("StepFunction: need one more breakpoint than values");
        for (std::size_t i = 1; i < breaks_.size(); ++i)
            if (!(breaks_[i] > breaks_[i - 1]))
                throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    }

    static StepFunction indicator(double a, double b, double value = 1.0) { return StepFunction({a, b}, {value}); }

    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] std::size_t pieces() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return breaks_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] double left(std::size_t j) const { return breaks_[j]; }
    [[nodiscard]] double right(std::size_t j) const { return breaks_[j + 1]; }
    [[nodiscard]] double support_start() const { return breaks_.front(); }
    [[nodiscard]] double support_end() const { return breaks_.back(); }

    [[nodiscard]] bool is_zero() const noexcept {
        return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
    }

    [[nodiscard]] double operator()(double x) const {
        if (empty() || x < breaks_.front() || x >= breaks_.back()) return 0.0;
        const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
        return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
    }

    [[nodiscard]] StepFunction scaled(double c) const {
        StepFunction out = *this;
        for (double& v : out.values_) v *= c;
        return out;
    }

    /// x ↦ f(a x + b).
    [[nodiscard]] StepFunction affine(double a, double b) const {
        if (a == 0.0) throw std::domain_error("StepFunction::affine: a must be nonzero");
        if (empty()) return {};
        std::vector<double> br(breaks_.size()), val(values_);
        for (std::size_t i = 0; i < breaks_.size(); ++i) br[i] = (breaks_[i] - b) / a;
        if (a < 0.0) {
            std::reverse(br.begin(), br.end());
            std::reverse(val.begin(), val.end());
        }
        return {std::move(br), std::move(val)};
    }

    /// 1_{[lo, hi)} f.
    [[nodiscard]] StepFunction restricted(double lo, double hi) const {
        if (empty() || !(hi > lo)) return {};
        return combine(*this, indicator(lo, hi), [](double x, double y) { return x * y; });
    }

    friend StepFunction operator+(const StepFunction& f, const StepFunction& g) {
        return combine(f, g, [](double x, double y) { return x + y; });
    }
    friend StepFunction operator-(const StepFunction& f, const StepFunction& g) {
        return combine(f, g, [](double x, double y) { return x - y; });
    }

    /// Pointwise op(f, g) on the merged breakpoint set, trimmed of zero ends.
    template <class Op>
    static StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
        std::vector<double> br;
        br.reserve(f.breaks_.size() + g.breaks_.size());
        std::merge(f.breaks_.begin(), f.breaks_.end(), g.breaks_.begin(), g.breaks_.end(), std::back_inserter(br));
        br.erase(std::unique(br.begin(), br.end()), br.end());
        if (br.size() < 2) return {};
        std::vector<double> val(br.size() - 1);
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            const double mid = 0.5 * (br[i] + br[i + 1]);
            val[i] = op(f(mid), g(mid));
        }
        std::size_t lo = 0, hi = val.size();
        while (lo < hi && val[lo] == 0.0) ++lo;
        while (hi > lo && val[hi - 1] == 0.0) --hi;
        if (lo == hi) return {};
        return {std::vector<double>(br.begin() + static_cast<long>(lo), br.begin() + static_cast<long>(hi) + 1),
                std::vector<double>(val.begin() + static_cast<long>(lo), val.begin() + static_cast<long>(hi))};
    }

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

/// Piecewise-constant function on the cells of a uniform grid; values[i]
/// is the value on [node(i), node(i+1)). Zero outside the grid window.
struct GridFunction {
    TimeGrid grid;
    std::vector<double> values;

    GridFunction(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.steps()) throw std::invalid_argument("GridFunction: one value per cell required");
    }
    explicit GridFunction(TimeGrid g) : grid(g), values(g.steps(), 0.0) {}

    /// Cell-midpoint samples of f; exact when f is piecewise constant on the cells.
    template <class F>
    static GridFunction sample(const TimeGrid& g, F&& f) {
        GridFunction out(g);
        for (std::size_t i = 0; i < g.steps(); ++i) out.values[i] = f(g.midpoint(i));
        return out;
    }

    [[nodiscard]] StepFunction to_step() const {
        std::vector<double> br = grid.node_vector();
        return StepFunction(std::move(br), values);
    }
};

/// Order s of a homogeneous Sobolev space, restricted to |s| < 1/2.
class SobolevOrder {
public:
    explicit SobolevOrder(double s) : s_(s) {
        if (!(std::abs(s) < 0.5)) throw std::domain_error("SobolevOrder: |s| must be below 1/2");
    }
    [[nodiscard]] double value() const noexcept { return s_; }
    operator double() const noexcept { return s_; }

private:
    double s_;
};

}  // namespace fracint
