#pragma once

#include <stdexcept>
#include <vector>

namespace fracint {

/// Hermite polynomials normalized so that H_n(x) = x^n/n! + lower order,
/// i.e. the probabilists' polynomials He_n divided by n!.
/// Satisfies (n+1) H_{n+1}(x) = x H_n(x) - H_{n-1}(x).
[[nodiscard]] inline double hermite_poly(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_poly: order must be non-negative");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = (x * cur - prev) / static_cast<double>(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

class HermiteBasis {
public:
    explicit HermiteBasis(int max_order) : max_order_(max_order) {
        if (max_order < 0) throw std::invalid_argument("HermiteBasis: max_order must be non-negative");
    }

    [[nodiscard]] int max_order() const noexcept { return max_order_; }

    /// Values H_0(x), ..., H_max(x) in one sweep of the recurrence.
    [[nodiscard]] std::vector<double> evaluate(double x) const {
        std::vector<double> h(static_cast<std::size_t>(max_order_) + 1);
        h[0] = 1.0;
        if (max_order_ >= 1) h[1] = x;
        for (int k = 1; k < max_order_; ++k)
            h[k + 1] = (x * h[k] - h[k - 1]) / static_cast<double>(k + 1);
        return h;
    }

private:
    int max_order_;
};

}  // namespace fracint
