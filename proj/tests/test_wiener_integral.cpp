// Wiener integrals of deterministic step functions, cylindrical integrals and existence conditions.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "fracint/core/stats.hpp"
#include "fracint/integral/conditions.hpp"
#include "fracint/integral/cylindrical.hpp"
#include "fracint/integral/elementary.hpp"
#include "fracint/integral/gamma_lp.hpp"
#include "fracint/process/simulate.hpp"

using namespace fracint;

// =============================================================================
// Elementary integrals
// =============================================================================

TEST(Elementary, IndicatorTelescopesToPathValue) {
    const auto ens = simulate(FracParams::fbm(0.6), TimeGrid(1.0, 8), 20, 1);
    const auto r = elementary_integral(StepFunction::indicator(0.25, 0.75), ens);
    for (std::size_t p = 0; p < ens.n_paths(); ++p) EXPECT_DOUBLE_EQ(r.samples[p], ens.value(p, 6) - ens.value(p, 2));
    EXPECT_EQ(r.snapped, 0u);
}

TEST(Elementary, ZeroFunctionGivesZero) {
    const auto ens = simulate(FracParams::fbm(0.6), TimeGrid(1.0, 8), 5, 1);
    const auto r = elementary_integral(StepFunction{}, ens);
    for (double v : r.samples) EXPECT_EQ(v, 0.0);
    const auto rep = isometry_report(r);
    EXPECT_EQ(rep.dh_norm_sq, 0.0);
    EXPECT_EQ(rep.z_score, 0.0);
}

TEST(Elementary, NearbyBreakpointsAreSnappedAndReported) {
    const auto ens = simulate(FracParams::fbm(0.6), TimeGrid(1.0, 4), 3, 1);
    const auto r = elementary_integral(StepFunction({0.0, 0.26, 1.0}, {1.0, 2.0}), ens);
    EXPECT_EQ(r.snapped, 1u);
    ASSERT_EQ(r.notes.size(), 1u);
    EXPECT_DOUBLE_EQ(r.f.breakpoints()[1], 0.25);
}

TEST(Elementary, BreakpointOutsideWindowThrows) {
    const auto ens = simulate(FracParams::fbm(0.6), TimeGrid(1.0, 4), 3, 1);
    EXPECT_THROW((void)elementary_integral(StepFunction::indicator(0.5, 2.0), ens), std::invalid_argument);
}

TEST(Elementary, Linearity) {
    const auto ens = simulate(FracParams::fbm(0.35), TimeGrid(1.0, 16), 50, 2);
    const StepFunction f({0.0, 0.25, 0.5}, {1.0, -2.0}), g({0.125, 0.75, 1.0}, {0.5, 3.0});
    const auto sum = StepFunction::combine(f, g, [](double x, double y) { return 2.0 * x - 3.0 * y; });
    const auto rf = elementary_integral(f, ens), rg = elementary_integral(g, ens), rs = elementary_integral(sum, ens);
    for (std::size_t p = 0; p < ens.n_paths(); ++p) EXPECT_NEAR(rs.samples[p], 2.0 * rf.samples[p] - 3.0 * rg.samples[p], 1e-12);
}

// =============================================================================
// Isometry
// =============================================================================

TEST(Isometry, FbmVarianceMatchesDhNorm) {
    const StepFunction f({0.0, 0.25, 0.5, 1.0}, {1.0, -0.5, 2.0});
    for (double H : {0.3, 0.5, 0.7}) {
        const auto ens = simulate(FracParams::fbm(H, 1.2), TimeGrid(1.0, 16), 30000, 3);
        const auto rep = isometry_report(f, ens);
        EXPECT_LT(std::abs(rep.z_score), 3.5) << "H = " << H;
        EXPECT_LT(std::abs(rep.mean), 4.0 * rep.mean_se);
    }
}

TEST(Isometry, RosenblattVarianceMatchesDhNorm) {
    const StepFunction f({0.0, 0.375, 1.0}, {2.0, -1.0});
    const auto ens = simulate(FracParams::rosenblatt(0.75), TimeGrid(1.0, 8), 30000, 4);
    const auto rep = isometry_report(f, ens);
    EXPECT_LT(std::abs(rep.z_score), 3.5);
    EXPECT_NEAR(rep.dh_norm_sq, dh_norm_sq_covariance(f, FracParams::rosenblatt(0.75)), 1e-6 * rep.dh_norm_sq);
}

// =============================================================================
// Cylindrical integrals
// =============================================================================

TEST(Cylindrical, IndicatorColumnsGiveRankTimesVariance) {
    const double sigma = 1.5;
    const std::size_t K = 4;
    const auto ens = simulate_cylindrical(FracParams::fbm(0.7, sigma), TimeGrid(1.0, 8), K, 20000, 5);
    HSOperator A{std::vector<StepFunction>(K, StepFunction::indicator(0.0, 1.0))};
    const auto r = cylindrical_integral(A, ens);
    EXPECT_NEAR(r.hs_norm_sq, static_cast<double>(K) * sigma * sigma, 1e-6);
    const auto m = stats::second_moment(r.samples);
    EXPECT_LT(std::abs(m.value - r.hs_norm_sq), 4.0 * m.se);
    ASSERT_EQ(r.partial_hs_sq.size(), K);
    EXPECT_NEAR(r.partial_hs_sq[1], 2.0 * sigma * sigma, 1e-6);
    EXPECT_TRUE(std::isinf(r.tail_estimate));
}

TEST(Cylindrical, GeometricTailExtrapolation) {
    const std::vector<double> norms{1.0, 0.25, 0.0625};
    EXPECT_NEAR(hs_tail_estimate(norms), 0.0625 / 3.0, 1e-15);
    EXPECT_EQ(hs_tail_estimate({}), 0.0);
    EXPECT_TRUE(std::isinf(hs_tail_estimate({1.0})));
    EXPECT_EQ(hs_tail_estimate({1.0, 0.0}), 0.0);
}

TEST(Cylindrical, DimensionMismatchThrows) {
    const auto ens = simulate_cylindrical(FracParams::fbm(0.7), TimeGrid(1.0, 8), 2, 10, 6);
    HSOperator A{{StepFunction::indicator(0.0, 1.0)}};
    EXPECT_THROW((void)cylindrical_integral(A, ens), std::invalid_argument);
    EXPECT_THROW((void)cylindrical_integral(HSOperator{}, CylindricalEnsemble{}), std::invalid_argument);
}

// =============================================================================
// Gamma norms into L^p
// =============================================================================

TEST(GammaNorm, WeightedPowerSum) {
    const std::vector<double> w{0.5, 0.5}, m{1.0, 2.0};
    EXPECT_NEAR(gamma_norm_lp(w, m, 2.0), std::sqrt(2.5), 1e-15);
    EXPECT_NEAR(gamma_norm_lp(w, m, 1.0), 1.5, 1e-15);
    EXPECT_THROW((void)gamma_norm_lp(w, m, 0.5), std::domain_error);
    EXPECT_THROW((void)gamma_norm_lp(w, std::vector<double>{1.0}, 2.0), std::invalid_argument);
}

TEST(GammaNorm, IndicatorKernelField) {
    // Node i carries two components 1_{[0,t_i)}; each node norm is sqrt(2) t_i^H.
    const double H = 0.65;
    LpKernelField field;
    field.nodes = {0.25, 0.75};
    field.weights = {0.5, 0.5};
    field.p = 3.0;
    field.params = FracParams::fbm(H);
    for (double t : {0.5, 1.0}) field.kernels.push_back({StepFunction::indicator(0.0, t), StepFunction::indicator(0.0, t)});
    const auto norms = node_norms(field);
    EXPECT_NEAR(norms[0], std::sqrt(2.0) * std::pow(0.5, H), 1e-6);
    EXPECT_NEAR(norms[1], std::sqrt(2.0), 1e-6);
    const double exact = std::pow(0.5 * std::pow(norms[0], 3.0) + 0.5 * std::pow(norms[1], 3.0), 1.0 / 3.0);
    EXPECT_NEAR(gamma_norm_lp(field), exact, 1e-12);
}

// =============================================================================
// Existence conditions
// =============================================================================

TEST(Conditions, RegularPowerClosedForm) {
    // ∫_0^1 u^{-a/H} du = 1 / (1 - a/H) for a < H.
    const double H = 0.7, a = 0.3;
    const auto v = condition_regular([a](double u) { return std::pow(u, -a); }, 1.0, H);
    EXPECT_FALSE(v.diverged);
    EXPECT_NEAR(v.value, 1.0 / (1.0 - a / H), 1e-6);
}

TEST(Conditions, RegularPowerDiverges) {
    const auto v = condition_regular([](double u) { return std::pow(u, -0.7); }, 1.0, 0.7);
    EXPECT_TRUE(v.diverged);
    EXPECT_GE(v.increment_ratio, std::exp2(-0.05));
}

TEST(Conditions, SingularLinearClosedForm) {
    // G(u) = u: τ³/3 + 2 τ^{2H+2} / ((2H+1)(2H+2)).
    const double H = 0.3, tau = 1.0;
    const auto v = condition_singular([](double u) { return u; }, tau, H);
    EXPECT_FALSE(v.diverged);
    EXPECT_NEAR(v.value, 1.0 / 3.0 + 2.0 / ((2.0 * H + 1.0) * (2.0 * H + 2.0)), 1e-6);
}

TEST(Conditions, SingularPowerThreshold) {
    // G(u) = u^{-a}: the double integral behaves like ε^{2H-2a} near zero.
    const double H = 0.3;
    EXPECT_FALSE(condition_singular([](double u) { return std::pow(u, -0.15); }, 1.0, H).diverged);
    EXPECT_TRUE(condition_singular([](double u) { return std::pow(u, -0.4); }, 1.0, H).diverged);
}

TEST(Conditions, ClassifierOnSyntheticTraces) {
    const auto conv = classify_refinement({1.0, 1.5, 1.75}, 0.05);
    EXPECT_FALSE(conv.diverged);
    EXPECT_NEAR(conv.increment_ratio, 0.5, 1e-15);
    EXPECT_NEAR(conv.value, 2.0, 1e-15);
    const auto log_div = classify_refinement({1.0, 2.0, 3.0}, 0.05);
    EXPECT_TRUE(log_div.diverged);
    EXPECT_DOUBLE_EQ(log_div.value, 3.0);
}

TEST(Conditions, RejectOutOfRangeHurst) {
    auto one = [](double) { return 1.0; };
    EXPECT_THROW((void)condition_singular(one, 1.0, 0.6), std::domain_error);
    EXPECT_THROW((void)condition_regular(one, 1.0, 0.4), std::domain_error);
    EXPECT_THROW((void)condition_regular(one, 0.0, 0.6), std::domain_error);
}
