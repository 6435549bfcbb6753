#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracint {

/// Uniform grid over [a, b] with n_steps cells (n_steps + 1 nodes).
class TimeGrid {
public:
    TimeGrid(double a, double b, std::size_t n_steps) : a_(a), b_(b), n_(n_steps) {
        if (!(b > a)) throw std::invalid_argument("TimeGrid: need b > a");
        if (n_steps == 0) throw std::invalid_argument("TimeGrid: need at least one step");
    }
    TimeGrid(double T, std::size_t n_steps) : TimeGrid(0.0, T, n_steps) {}

    [[nodiscard]] double start() const noexcept { return a_; }
    [[nodiscard]] double end() const noexcept { return b_; }
    [[nodiscard]] double length() const noexcept { return b_ - a_; }
    [[nodiscard]] std::size_t steps() const noexcept { return n_; }
    [[nodiscard]] std::size_t nodes() const noexcept { return n_ + 1; }
    [[nodiscard]] double dt() const noexcept { return (b_ - a_) / static_cast<double>(n_); }
    [[nodiscard]] double node(std::size_t i) const noexcept {
        return i == n_ ? b_ : a_ + static_cast<double>(i) * dt();
    }
    [[nodiscard]] double midpoint(std::size_t i) const noexcept { return a_ + (static_cast<double>(i) + 0.5) * dt(); }

    /// Index of the node closest to t, or -1 when |t - node| exceeds tol.
    [[nodiscard]] long snap(double t, double tol) const noexcept {
        const double x = (t - a_) / dt();
        const double r = std::round(x);
        if (r < 0.0 || r > static_cast<double>(n_)) return -1;
        if (std::abs(t - node(static_cast<std::size_t>(r))) > tol) return -1;
        return static_cast<long>(r);
    }

    [[nodiscard]] std::vector<double> node_vector() const {
        std::vector<double> out(nodes());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = node(i);
        return out;
    }

    friend bool operator==(const TimeGrid& x, const TimeGrid& y) noexcept {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.n_ == y.n_;
    }

private:
    double a_;
    double b_;
    std::size_t n_;
};

}  // namespace fracint
