// Unit tests for the numerical core: grids, random streams, threading, quadrature, statistics.

#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "fracint/core/circulant.hpp"
#include "fracint/core/grid.hpp"
#include "fracint/core/parallel.hpp"
#include "fracint/core/quadrature.hpp"
#include "fracint/core/rng.hpp"
#include "fracint/core/stats.hpp"

using namespace fracint;

// =============================================================================
// TimeGrid
// =============================================================================

TEST(TimeGrid, NodesAndSpacing) {
    const TimeGrid g(0.5, 2.5, 8);
    EXPECT_EQ(g.steps(), 8u);
    EXPECT_EQ(g.nodes(), 9u);
    EXPECT_DOUBLE_EQ(g.dt(), 0.25);
    EXPECT_DOUBLE_EQ(g.node(0), 0.5);
    EXPECT_DOUBLE_EQ(g.node(8), 2.5);
    EXPECT_DOUBLE_EQ(g.midpoint(1), 0.875);
    EXPECT_EQ(g.node_vector().size(), 9u);
}

TEST(TimeGrid, SnapWithinToleranceOnly) {
    const TimeGrid g(1.0, 10);
    EXPECT_EQ(g.snap(0.3, 1e-12), 3);
    EXPECT_EQ(g.snap(0.3 + 1e-9, 1e-12), -1);
    EXPECT_EQ(g.snap(0.3 + 1e-9, 1e-8), 3);
    EXPECT_EQ(g.snap(-0.1, 1e-3), -1);
    EXPECT_EQ(g.snap(1.1, 1e-3), -1);
}

// =============================================================================
// CounterRng
// =============================================================================

TEST(CounterRng, SameKeysSameStream) {
    CounterRng a(42, 7, 3), b(42, 7, 3);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(CounterRng, DifferentKeysDiffer) {
    CounterRng a(42, 7, 3), b(42, 8, 3), c(42, 7, 4), d(43, 7, 3);
    const auto x = a();
    EXPECT_NE(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
}

TEST(CounterRng, NormalMoments) {
    CounterRng rng(1, 0);
    std::vector<double> x(200000);
    rng.fill_normal(x);
    EXPECT_NEAR(stats::mean(x), 0.0, 0.01);
    EXPECT_NEAR(stats::variance(x), 1.0, 0.01);
    EXPECT_NEAR(stats::skewness(x), 0.0, 0.03);
    EXPECT_NEAR(stats::excess_kurtosis(x), 0.0, 0.06);
}

TEST(CounterRng, UniformNeverZero) {
    CounterRng rng(5, 5);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        EXPECT_GT(u, 0.0);
        EXPECT_LE(u, 1.0);
    }
}

// =============================================================================
// parallel_for
// =============================================================================

TEST(ParallelFor, ResultIndependentOfThreadCount) {
    auto fill = [](unsigned threads) {
        std::vector<double> out(1000);
        parallel_for(out.size(), threads, [&](std::size_t i) {
            CounterRng rng(9, i);
            out[i] = rng.normal();
        });
        return out;
    };
    const auto one = fill(1);
    EXPECT_EQ(one, fill(3));
    EXPECT_EQ(one, fill(8));
}

TEST(ParallelFor, PropagatesExceptions) {
    EXPECT_THROW(parallel_for(100, 4,
                              [](std::size_t i) {
                                  if (i == 57) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

// =============================================================================
// Quadrature
// =============================================================================

TEST(Quadrature, TanhSinhMatchesBoostOnSingularIntegrand) {
    auto f = [](double x) { return std::pow(x, -0.7) * std::exp(-x); };
    boost::math::quadrature::tanh_sinh<double> oracle;
    const double ref = oracle.integrate(f, 0.0, 2.0);
    EXPECT_NEAR(quad::tanh_sinh(f, 0.0, 2.0, 1e-12).value, ref, 1e-9 * ref);
}

TEST(Quadrature, TanhSinhThreeArgumentFormUsesEndpointDistance) {
    // ∫_0^1 (1-x)^{-1/2} dx = 2 with the singularity at the right endpoint.
    auto f = [](double, double, double db) { return 1.0 / std::sqrt(db); };
    EXPECT_NEAR(quad::tanh_sinh(f, 0.0, 1.0, 1e-12).value, 2.0, 1e-9);
}

TEST(Quadrature, ExpSinhHalfLine) {
    // ∫_0^∞ e^{-x} x^{-1/2} dx = sqrt(pi)
    auto f = [](double x) { return std::exp(-x) / std::sqrt(x); };
    EXPECT_NEAR(quad::exp_sinh(f, 0.0, 1e-12).value, std::sqrt(std::numbers::pi), 1e-8);
}

TEST(Quadrature, GaussLegendreIsExactForPolynomials) {
    const auto& gl = quad::gauss_legendre(10);
    auto p = [](double x) { return std::pow(x, 19) + 3.0 * x * x; };
    const double exact = (std::pow(2.0, 20) - 1.0) / 20.0 + (8.0 - 1.0);
    EXPECT_NEAR(gl.integrate(p, 1.0, 2.0), exact, 1e-9 * exact);
}

TEST(Quadrature, GradedLeftResolvesEndpointSingularity) {
    auto f = [](double x) { return std::pow(x, -0.5); };
    EXPECT_NEAR(quad::graded_left(f, 0.0, 1.0, 60), 2.0, 1e-8);
}

// =============================================================================
// Statistics
// =============================================================================

TEST(Stats, SecondMomentAndStandardError) {
    const std::vector<double> x{1.0, -1.0, 1.0, -1.0};
    const auto m = stats::second_moment(x);
    EXPECT_DOUBLE_EQ(m.value, 1.0);
    EXPECT_NEAR(m.se, 0.0, 1e-15);
}

TEST(Stats, LeastSquaresRecoversLine) {
    const std::vector<double> x{0, 1, 2, 3, 4};
    std::vector<double> y;
    for (double v : x) y.push_back(2.5 * v - 1.0);
    const auto fit = stats::least_squares(x, y);
    EXPECT_NEAR(fit.slope, 2.5, 1e-12);
    EXPECT_NEAR(fit.intercept, -1.0, 1e-12);
    EXPECT_NEAR(fit.r2, 1.0, 1e-12);
}

TEST(Stats, CorrelationOfIndependentStreamsIsSmall) {
    std::vector<double> a(50000), b(50000);
    CounterRng(1, 0).fill_normal(a);
    CounterRng(1, 1).fill_normal(b);
    EXPECT_NEAR(stats::correlation(a, b), 0.0, 0.02);
    EXPECT_NEAR(stats::correlation(a, a), 1.0, 1e-12);
}

TEST(Stats, KolmogorovSmirnovSeparatesDistributions) {
    std::vector<double> a(5000), b(5000);
    CounterRng(3, 0).fill_normal(a);
    CounterRng(3, 1).fill_normal(b);
    EXPECT_GT(stats::ks_two_sample(a, b).p_value, 0.01);
    for (double& v : b) v += 0.3;
    EXPECT_LT(stats::ks_two_sample(a, b).p_value, 1e-6);
}

TEST(Stats, JarqueBeraFlagsSkewedSample) {
    std::vector<double> x(5000);
    CounterRng(4, 0).fill_normal(x);
    EXPECT_GT(stats::jarque_bera(x).p_value, 0.001);
    for (double& v : x) v = v * v;
    EXPECT_LT(stats::jarque_bera(x).p_value, 1e-10);
}

// =============================================================================
// Circulant embedding
// =============================================================================

TEST(Circulant, FgnAutocovarianceAtHalfIsWhite) {
    EXPECT_DOUBLE_EQ(fgn_autocov(0.5, 0.0), 1.0);
    EXPECT_NEAR(fgn_autocov(0.5, 3.0), 0.0, 1e-15);
    EXPECT_NEAR(fgn_autocov(0.75, 1.0), 0.5 * (std::pow(2.0, 1.5) - 2.0), 1e-15);
}

TEST(Circulant, EmpiricalCovarianceMatchesTarget) {
    const double H = 0.7;
    const std::size_t n = 16, paths = 40000;
    std::vector<double> acov(n + 1);
    for (std::size_t k = 0; k <= n; ++k) acov[k] = fgn_autocov(H, static_cast<double>(k));
    const CirculantGaussian gen(acov);
    std::vector<double> x0(paths), x3(paths), xi(gen.normals_needed()), out(n);
    for (std::size_t p = 0; p < paths; ++p) {
        CounterRng(11, p).fill_normal(xi);
        gen.sample(xi, out);
        x0[p] = out[0];
        x3[p] = out[3];
    }
    EXPECT_NEAR(stats::second_moment(x0).value, acov[0], 0.03);
    EXPECT_NEAR(stats::cross_moment(x0, x3).value, acov[3], 0.03);
}
