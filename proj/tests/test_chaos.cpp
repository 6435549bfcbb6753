// Hermite polynomials, the discrete isonormal process and first/second chaos integrals.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fracint/chaos/hermite.hpp"
#include "fracint/chaos/isonormal.hpp"
#include "fracint/chaos/wiener_chaos.hpp"
#include "fracint/core/rng.hpp"
#include "fracint/core/stats.hpp"

using namespace fracint;

// =============================================================================
// Hermite polynomials
// =============================================================================

TEST(Hermite, TabulatedValues) {
    EXPECT_DOUBLE_EQ(hermite_poly(0, 0.37), 1.0);
    EXPECT_DOUBLE_EQ(hermite_poly(1, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(hermite_poly(2, 2.0), 1.5);
    EXPECT_NEAR(hermite_poly(3, 1.0), -1.0 / 3.0, 1e-15);
}

TEST(Hermite, ThreeTermRecurrence) {
    for (double x : {-2.3, -0.4, 0.0, 0.9, 3.1})
        for (int n = 1; n < 10; ++n)
            EXPECT_NEAR((n + 1) * hermite_poly(n + 1, x), x * hermite_poly(n, x) - hermite_poly(n - 1, x), 1e-12);
}

TEST(Hermite, BasisMatchesScalarEvaluation) {
    const HermiteBasis basis(6);
    const auto h = basis.evaluate(0.8);
    ASSERT_EQ(h.size(), 7u);
    for (int n = 0; n <= 6; ++n) EXPECT_NEAR(h[static_cast<std::size_t>(n)], hermite_poly(n, 0.8), 1e-14);
}

TEST(Hermite, NegativeOrderThrows) {
    EXPECT_THROW((void)hermite_poly(-1, 0.0), std::invalid_argument);
    EXPECT_THROW(HermiteBasis(-2), std::invalid_argument);
}

TEST(Hermite, OrthogonalityUnderGaussianMeasure) {
    // E[H_n(ξ) H_m(ξ)] = δ_nm / n!
    std::vector<double> xi(400000);
    CounterRng(21, 0).fill_normal(xi);
    double e22 = 0.0, e23 = 0.0;
    for (double x : xi) {
        e22 += hermite_poly(2, x) * hermite_poly(2, x);
        e23 += hermite_poly(2, x) * hermite_poly(3, x);
    }
    e22 /= static_cast<double>(xi.size());
    e23 /= static_cast<double>(xi.size());
    EXPECT_NEAR(e22, 0.5, 0.01);
    EXPECT_NEAR(e23, 0.0, 0.01);
}

// =============================================================================
// Discrete isonormal process
// =============================================================================

TEST(Isonormal, IncrementsScaleWithCellWidth) {
    const DiscreteIsonormal iso(TimeGrid(2.0, 8), 3);
    std::vector<double> z(8), dW(8);
    iso.standard_normals(5, z);
    iso.increments(5, dW);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(dW[i], z[i] * 0.5);
}

TEST(Isonormal, WindowCoversNegativeTimes) {
    const auto iso = DiscreteIsonormal::over_window(1.0, 3.0, 40, 1);
    EXPECT_DOUBLE_EQ(iso.grid().start(), -3.0);
    EXPECT_DOUBLE_EQ(iso.grid().end(), 1.0);
    EXPECT_THROW((void)DiscreteIsonormal::over_window(0.0, 1.0, 4, 1), std::invalid_argument);
}

// =============================================================================
// First chaos
// =============================================================================

TEST(FirstChaos, VarianceIsSquaredL2Norm) {
    const DiscreteIsonormal iso(TimeGrid(1.0, 32), 4);
    std::vector<double> v(32);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::sin(0.3 * static_cast<double>(i));
    const auto s = wiener_integral_1(v, iso, 40000);
    const auto m = stats::second_moment(s.values);
    EXPECT_LT(std::abs(m.value - iso.inner(v, v)), 4.0 * m.se);
    EXPECT_EQ(s.order, 1);
}

TEST(FirstChaos, MismatchedFunctionThrows) {
    const DiscreteIsonormal iso(TimeGrid(1.0, 8), 4);
    const std::vector<double> v(7, 1.0);
    EXPECT_THROW((void)wiener_integral_1(v, iso, 10), std::invalid_argument);
}

// =============================================================================
// Second chaos
// =============================================================================

TEST(SecondChaos, ZeroKernelGivesZero) {
    const DiscreteIsonormal iso(TimeGrid(1.0, 16), 5);
    const GridKernel K = GridKernel::Zero(16, 16);
    const auto s = double_wiener_integral(K, iso, 100);
    for (double v : s.values) EXPECT_DOUBLE_EQ(v, 0.0);
    EXPECT_DOUBLE_EQ(double_integral_variance(K, iso.grid().dt()), 0.0);
}

TEST(SecondChaos, TensorSquareOfIndicatorMatchesVariance) {
    // K = e ⊗ e with e = 1 on the first half: off-diagonal variance is
    // 2 (|e|^4 - Σ e_i^4 dt^2).
    const std::size_t n = 16;
    const DiscreteIsonormal iso(TimeGrid(1.0, n), 6);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    e.head(8).setOnes();
    const GridKernel K = e * e.transpose();
    const double dt = iso.grid().dt();
    const double exact = 2.0 * (0.25 - 8.0 * dt * dt);
    EXPECT_NEAR(double_integral_variance(K, dt), exact, 1e-14);
    const auto s = double_wiener_integral(K, iso, 60000);
    const auto m = stats::second_moment(s.values);
    EXPECT_LT(std::abs(m.value - exact), 4.0 * m.se);
    EXPECT_NEAR(stats::mean(s.values), 0.0, 4.0 * std::sqrt(exact / 60000.0));
}

TEST(SecondChaos, RandomSymmetricKernelVariance) {
    const std::size_t n = 16;
    const DiscreteIsonormal iso(TimeGrid(1.0, n), 7);
    CounterRng rng(8, 0);
    GridKernel K(n, n);
    for (Eigen::Index i = 0; i < K.rows(); ++i)
        for (Eigen::Index j = 0; j <= i; ++j) K(i, j) = K(j, i) = rng.normal();
    const double dt = iso.grid().dt();
    GridKernel off = K;
    off.diagonal().setZero();
    EXPECT_NEAR(double_integral_variance(K, dt), 2.0 * off.squaredNorm() * dt * dt, 1e-12);
    const auto s = double_wiener_integral(K, iso, 60000);
    EXPECT_FALSE(s.symmetrized);
    const auto m = stats::second_moment(s.values);
    EXPECT_LT(std::abs(m.value - double_integral_variance(K, dt)), 4.0 * m.se);
}

TEST(SecondChaos, NonSymmetricKernelIsSymmetrized) {
    const DiscreteIsonormal iso(TimeGrid(1.0, 4), 9);
    GridKernel K = GridKernel::Zero(4, 4);
    K(0, 1) = 2.0;
    const auto s = double_wiener_integral(K, iso, 5);
    EXPECT_TRUE(s.symmetrized);
    const auto dW = iso.increments(3);
    EXPECT_NEAR(s.values[3], 2.0 * dW[0] * dW[1], 1e-14);
}

TEST(SecondChaos, UncorrelatedWithFirstChaos) {
    const std::size_t n = 16;
    const DiscreteIsonormal iso(TimeGrid(1.0, n), 10);
    GridKernel K = GridKernel::Ones(n, n);
    std::vector<double> v(n, 1.0);
    const auto s2 = double_wiener_integral(K, iso, 40000);
    const auto s1 = wiener_integral_1(v, iso, 40000);
    EXPECT_NEAR(stats::correlation(s1.values, s2.values), 0.0, 0.03);
}

// =============================================================================
// Moment ratios
// =============================================================================

TEST(MomentRatio, ConstantSampleGivesOne) {
    const std::vector<double> c(100, -2.5);
    EXPECT_NEAR(moment_ratio(c, 4.0, 2.0), 1.0, 1e-14);
}

TEST(MomentRatio, GaussianRatio) {
    std::vector<double> x(400000);
    CounterRng(12, 0).fill_normal(x);
    EXPECT_NEAR(moment_ratio(x, 4.0, 2.0) / std::pow(3.0, 0.25) - 1.0, 0.0, 0.01);
}

TEST(MomentRatio, SecondChaosRatio) {
    // 2 H_2(ξ) = ξ² - 1 has E X^2 = 2 and E X^4 = 60.
    std::vector<double> x(400000);
    CounterRng(13, 0).fill_normal(x);
    for (double& v : x) v = 2.0 * hermite_poly(2, v);
    const double exact = std::pow(60.0, 0.25) / std::sqrt(2.0);
    EXPECT_NEAR(moment_ratio(x, 4.0, 2.0) / exact - 1.0, 0.0, 0.02);
}

TEST(MomentRatio, DegenerateOrEmptySampleThrows) {
    const std::vector<double> zeros(10, 0.0), empty;
    EXPECT_THROW((void)moment_ratio(zeros, 4.0, 2.0), std::domain_error);
    EXPECT_THROW((void)moment_ratio(empty, 4.0, 2.0), std::invalid_argument);
    EXPECT_THROW((void)moment_ratio(zeros, 4.0, 0.0), std::invalid_argument);
}
