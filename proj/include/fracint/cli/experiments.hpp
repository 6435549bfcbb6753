#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fracint/chaos/hermite.hpp"
#include "fracint/chaos/wiener_chaos.hpp"
#include "fracint/cli/config.hpp"
#include "fracint/cli/csv.hpp"
#include "fracint/core/rng.hpp"
#include "fracint/integral/elementary.hpp"
#include "fracint/process/simulate.hpp"
#include "fracint/sobolev/constants.hpp"
#include "fracint/sobolev/fourier.hpp"
#include "fracint/spde/existence.hpp"
#include "fracint/spde/mild.hpp"
#include "fracint/spde/neumann.hpp"

namespace fracint::cli {

struct CaseVerdict {
    std::string id;
    bool pass = true;
    std::string detail;
};

struct NamedTable {
    std::string stem;  // file name without ".csv"
    CsvTable table;
};

struct ExperimentOutput {
    std::vector<NamedTable> tables;
    std::vector<CaseVerdict> cases;
    std::vector<std::string> warnings;
    nlohmann::json extra = nlohmann::json::object();

    [[nodiscard]] bool all_passed() const {
        return std::all_of(cases.begin(), cases.end(), [](const CaseVerdict& c) { return c.pass; });
    }
};

/// Random step function on [0, T] whose breakpoints are distinct nodes of a
/// grid with `cells` cells and whose values are standard normal.
[[nodiscard]] inline StepFunction random_step_function(CounterRng& rng, std::size_t pieces, double T, std::size_t cells) {
    pieces = std::clamp<std::size_t>(pieces, 1, cells);
    std::set<std::size_t> nodes;
    while (nodes.size() < pieces + 1) nodes.insert(static_cast<std::size_t>(rng() % (cells + 1)));
    std::vector<double> br, val;
    for (auto n : nodes) br.push_back(T * static_cast<double>(n) / static_cast<double>(cells));
    for (std::size_t j = 0; j < pieces; ++j) val.push_back(rng.normal());
    return {std::move(br), std::move(val)};
}

namespace detail {

inline std::string fmt(double v) { return format_double(v); }

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError({message});
}

template <class T>
void require_paired(const std::vector<T>& a, std::size_t b, const std::string& what) {
    require(a.size() == b, what + " lists must have equal length");
}

}  // namespace detail

[[nodiscard]] inline ExperimentOutput run_norm_identity(const ExperimentConfig& cfg) {
    const auto Hs = cfg.reals("H");
    const auto n_f = cfg.integer("n_functions");
    const auto pieces = cfg.integer("pieces");
    const double sigma = cfg.real("sigma"), tol = cfg.real("rel_tol");
    detail::require(n_f >= 1 && pieces >= 1, "n_functions and pieces must be at least 1");
    for (double H : Hs) detail::require(H > 0.0 && H < 1.0, "H must lie in (0,1)");

    constexpr std::size_t cells = 64;
    const TimeGrid grid(1.0, cells);
    ExperimentOutput out;
    CsvTable t({"H", "f_id", "dh_norm", "fourier_norm", "ratio", "expected_ratio", "rel_err", "pass"});
    for (std::size_t h = 0; h < Hs.size(); ++h) {
        const double H = Hs[h];
        const auto params = FracParams::fbm(H, sigma);
        const double expected = c_sigma_h_constant(sigma, H);
        bool ok = true;
        double worst = 0.0;
        for (long long f_id = 0; f_id < n_f; ++f_id) {
            CounterRng rng(cfg.seed(), static_cast<std::uint64_t>(f_id), h + 1);
            const auto f = random_step_function(rng, static_cast<std::size_t>(pieces), 1.0, cells);
            const double dh = dh_norm_kstar(f, params);
            const auto g = GridFunction::sample(grid, [&](double x) { return f(x); });
            const double fourier = sobolev_norm_fourier(g, SobolevOrder(0.5 - H));
            const double ratio = dh / fourier;
            const double err = std::abs(ratio / expected - 1.0);
            worst = std::max(worst, err);
            ok = ok && err <= tol;
            t.add_row({H, f_id, dh, fourier, ratio, expected, err, err <= tol});
        }
        out.cases.push_back({"H=" + detail::fmt(H), ok, "worst rel_err " + detail::fmt(worst)});
    }
    out.tables.push_back({"norm-identity", std::move(t)});
    return out;
}

[[nodiscard]] inline ExperimentOutput run_isometry(const ExperimentConfig& cfg) {
    const auto fam = cfg.text("family");
    detail::require(fam == "fbm" || fam == "rosenblatt", "family must be fbm or rosenblatt");
    const auto Hs = cfg.reals("H");
    const auto n_paths = cfg.integer("n_paths"), n_f = cfg.integer("n_functions"), steps = cfg.integer("steps");
    const double T = cfg.real("T"), sigma = cfg.real("sigma");
    const double z_max = cfg.real("z_max"), frac = cfg.real("pass_fraction");
    detail::require(n_paths >= 2 && n_f >= 1 && steps >= 1 && T > 0.0, "n_paths >= 2, n_functions >= 1, steps >= 1, T > 0 required");
    for (double H : Hs) {
        detail::require(H > 0.0 && H < 1.0, "H must lie in (0,1)");
        if (fam == "rosenblatt") detail::require(H > 0.5, "rosenblatt needs H in (1/2,1)");
    }
    ExperimentOutput out;
    if (n_paths < 1000) out.warnings.push_back("n_paths below 1000; z-scores are unreliable");
    CsvTable t({"family", "H", "f_id", "mc_var", "mc_se", "dh_norm_sq", "z_score", "pass"});
    const TimeGrid grid(T, static_cast<std::size_t>(steps));
    std::size_t good = 0, total = 0;
    nlohmann::json zs = nlohmann::json::array();
    for (std::size_t h = 0; h < Hs.size(); ++h) {
        const auto params = fam == "fbm" ? FracParams::fbm(Hs[h], sigma) : FracParams::rosenblatt(Hs[h], sigma);
        SimOptions so;
        so.lane = h + 1;
        const auto ens = simulate(params, grid, static_cast<std::size_t>(n_paths), cfg.seed(), so);
        for (long long f_id = 0; f_id < n_f; ++f_id) {
            CounterRng rng(cfg.seed(), static_cast<std::uint64_t>(f_id), 1000 + h);
            const auto f = random_step_function(rng, 6, T, static_cast<std::size_t>(steps));
            const auto rep = isometry_report(f, ens);
            const bool ok = std::abs(rep.z_score) <= z_max;
            good += ok;
            ++total;
            zs.push_back(rep.z_score);
            t.add_row({fam, Hs[h], f_id, rep.mc_var, rep.mc_se, rep.dh_norm_sq, rep.z_score, ok});
        }
    }
    const double achieved = static_cast<double>(good) / static_cast<double>(total);
    out.cases.push_back({"fraction |z|<=" + detail::fmt(z_max), achieved >= frac,
                         detail::fmt(achieved) + " of " + std::to_string(total) + " cells (need " + detail::fmt(frac) + ")"});
    out.extra["z_scores"] = std::move(zs);
    out.extra["pass_fraction_achieved"] = achieved;
    out.tables.push_back({"isometry", std::move(t)});
    return out;
}

[[nodiscard]] inline ExperimentOutput run_moments(const ExperimentConfig& cfg) {
    const auto n = cfg.integer("n_samples"), draws = cfg.integer("draws"), dim = cfg.integer("dim"), terms = cfg.integer("terms");
    detail::require(n >= 2 && draws >= 1 && dim >= 1 && terms >= 1, "n_samples >= 2, draws, dim, terms >= 1 required");
    const auto N = static_cast<std::size_t>(n);
    const double tol_g = cfg.real("rel_tol_gaussian"), tol_2 = cfg.real("rel_tol_chaos2");
    ExperimentOutput out;
    CsvTable t({"case", "draw", "ratio", "reference", "rel_err", "pass"});

    std::vector<double> gauss(N), chaos2(N);
    for (std::size_t i = 0; i < N; ++i) {
        CounterRng rng(cfg.seed(), i, 1);
        gauss[i] = rng.normal();
        chaos2[i] = 2.0 * hermite_poly(2, rng.normal());
    }
    const double g_ref = std::pow(3.0, 0.25), c_ref = std::pow(60.0, 0.25) / std::sqrt(2.0);
    const double g = moment_ratio(gauss, 4.0, 2.0), c = moment_ratio(chaos2, 4.0, 2.0);
    const double g_err = std::abs(g / g_ref - 1.0), c_err = std::abs(c / c_ref - 1.0);
    t.add_row({"gaussian", 0, g, g_ref, g_err, g_err <= tol_g});
    t.add_row({"chaos2", 0, c, c_ref, c_err, c_err <= tol_2});
    out.cases.push_back({"gaussian", g_err <= tol_g, "ratio " + detail::fmt(g)});
    out.cases.push_back({"chaos2", c_err <= tol_2, "ratio " + detail::fmt(c)});

    // Vector-valued chaos elements X = Σ_j v_j Φ_j(ξ) in ℝ^dim; the ratio of
    // the Euclidean norms stays below 3^{1/4} for order 1 and below 3 for
    // order 2 (Gaussian hypercontractivity).
    const auto D = static_cast<std::size_t>(dim), J = static_cast<std::size_t>(terms);
    for (int order = 1; order <= 2; ++order) {
        const double bound = order == 1 ? g_ref * (1.0 + tol_g) : 3.0;
        double worst = 0.0;
        for (long long d = 0; d < draws; ++d) {
            CounterRng coef(cfg.seed(), static_cast<std::uint64_t>(d), 100 + order);
            // v[j][i]: first-order coefficients; w[j][i]: second-order ones.
            std::vector<double> v(J * D), w(J * D), cross(D);
            for (auto& x : v) x = coef.normal();
            if (order == 2) {
                for (auto& x : w) x = coef.normal();
                for (auto& x : cross) x = coef.normal();
            }
            std::vector<double> norms(N);
            std::vector<double> xi(J), X(D);
            for (std::size_t i = 0; i < N; ++i) {
                CounterRng rng(cfg.seed(), i, 1000 + static_cast<std::uint64_t>(d) * 3 + static_cast<std::uint64_t>(order));
                rng.fill_normal(xi);
                std::fill(X.begin(), X.end(), 0.0);
                for (std::size_t j = 0; j < J; ++j)
                    for (std::size_t k = 0; k < D; ++k) {
                        X[k] += v[j * D + k] * xi[j];
                        if (order == 2) X[k] += w[j * D + k] * 2.0 * hermite_poly(2, xi[j]);
                    }
                if (order == 2 && J >= 2)
                    for (std::size_t k = 0; k < D; ++k) X[k] += cross[k] * xi[0] * xi[1];
                double s = 0.0;
                for (double x : X) s += x * x;
                norms[i] = std::sqrt(s);
            }
            const double r = moment_ratio(norms, 4.0, 2.0);
            worst = std::max(worst, r);
            t.add_row({order == 1 ? "vector1" : "vector2", d, r, bound, r / bound - 1.0, r <= bound});
        }
        out.cases.push_back({order == 1 ? "vector1" : "vector2", worst <= bound,
                             "max ratio " + detail::fmt(worst) + " bound " + detail::fmt(bound)});
    }
    out.tables.push_back({"moments", std::move(t)});
    return out;
}

/// Two decades of u ending at 10^{-(m+2)}, where the mode sum is in its
/// power-law regime for the default 2048 modes.
[[nodiscard]] inline std::pair<double, double> smoothing_window(int m) {
    const double hi = std::pow(10.0, -(m + 2));
    return {hi / 100.0, hi};
}

[[nodiscard]] inline ExperimentOutput run_spde_distributed(const ExperimentConfig& cfg) {
    const auto ms = cfg.integers("m");
    const auto Hs = cfg.reals("H");
    detail::require_paired(ms, Hs.size(), "m and H");
    const auto n_paths = cfg.integer("n_paths"), K = cfg.integer("K"), steps = cfg.integer("steps"), lags = cfg.integer("lags");
    const double alpha = cfg.real("alpha"), T = cfg.real("T"), p = cfg.real("p"), sigma = cfg.real("sigma");
    const double margin = cfg.real("holder_margin"), z_max = cfg.real("z_max");
    detail::require(n_paths >= 2 && K >= 1 && steps >= 4 && lags >= 2 && T > 0.0 && p >= 1.0 && alpha >= 0.0,
                    "n_paths >= 2, K >= 1, steps >= 4, lags >= 2, T > 0, p >= 1, alpha >= 0 required");
    detail::require((std::size_t{1} << (lags - 1)) <= static_cast<std::size_t>(steps / 2), "lags exceed half the grid");
    for (std::size_t i = 0; i < ms.size(); ++i)
        detail::require(ms[i] >= 1 && Hs[i] > 0.0 && Hs[i] < 1.0, "need m >= 1 and H in (0,1)");

    ExperimentOutput out;
    CsvTable t({"m", "H", "alpha", "finite", "gamma_norm", "holder_slope", "holder_threshold", "l2_mc", "l2_se", "l2_exact",
                "l2_scheme", "z_score", "pass"});
    const TimeGrid grid(T, static_cast<std::size_t>(steps));
    const std::size_t t0_node = static_cast<std::size_t>(steps) / 2;
    const double t0 = grid.node(t0_node);
    for (std::size_t c = 0; c < ms.size(); ++c) {
        const int m = static_cast<int>(ms[c]);
        const double H = Hs[c];
        const auto model = build_spectral_model(std::numbers::pi, m, static_cast<std::size_t>(K), 0.0, p);
        const auto params = FracParams::fbm(H, sigma);
        const double thr = H - 1.0 / (4.0 * m) - alpha;
        const auto rep = existence_report(model, H, sigma, alpha, T);
        const std::string id = "m=" + std::to_string(m) + ",H=" + detail::fmt(H);
        if (!rep.finite) {
            t.add_row({m, H, alpha, false, rep.gamma_norm_lp_value, detail::kNaN, thr, detail::kNaN, detail::kNaN, detail::kNaN, detail::kNaN, detail::kNaN, false});
            out.cases.push_back({id, false, "existence report diverged; no solution to simulate"});
            continue;
        }
        MildOptions mo;
        mo.output_nodes = holder_output_nodes(grid, t0_node, static_cast<int>(lags));
        mo.check_existence = false;
        const auto ens = solve_mild(model, params, grid, static_cast<std::size_t>(n_paths), alpha, cfg.seed() + 7919 * (c + 1), mo);
        const auto fit = holder_exponent_estimate(ens, p);
        std::vector<double> l2(ens.n_paths());
        for (std::size_t q = 0; q < l2.size(); ++q) l2[q] = ens.l2_norm_sq(q, 0);
        double exact = 0.0, scheme = 0.0;
        for (std::size_t k = 1; k <= model.K; ++k) {
            const double v = model.noise_weight(k) * mode_norm(model, k, t0, H, sigma, alpha);
            exact += v * v;
            scheme += scheme_mode_variance(model, k, grid, t0_node, H, sigma, alpha);
        }
        const double mc = stats::mean(l2);
        const double se = std::sqrt(stats::variance(l2) / static_cast<double>(l2.size()));
        const double z = se > 0.0 ? (mc - scheme) / se : 0.0;
        const bool ok = fit.slope >= thr - margin && std::abs(z) <= z_max;
        t.add_row({m, H, alpha, true, rep.gamma_norm_lp_value, fit.slope, thr, mc, se, exact, scheme, z, ok});
        if (std::abs(scheme / exact - 1.0) > 0.02)
            out.warnings.push_back(id + ": time step moves E||Y||^2 by " + detail::fmt(scheme / exact - 1.0) + "; refine steps");
        out.cases.push_back({id, ok, "slope " + detail::fmt(fit.slope) + " vs " + detail::fmt(thr - margin) + ", z " + detail::fmt(z)});
        if (fit.r2 < 0.9) out.warnings.push_back(id + ": Hoelder regression r2 " + detail::fmt(fit.r2));
    }
    out.tables.push_back({"spde-distributed", std::move(t)});

    CsvTable s({"m", "alpha", "u_lo", "u_hi", "slope", "expected", "pass"});
    const auto s_alpha = cfg.reals("smoothing_alpha");
    const auto s_K = static_cast<std::size_t>(cfg.integer("smoothing_K"));
    const double s_tol = cfg.real("smoothing_tol");
    detail::require(s_K >= 1, "smoothing_K must be positive");
    std::set<long long> unique_m(ms.begin(), ms.end());
    for (long long mm : unique_m) {
        const int m = static_cast<int>(mm);
        const auto model = build_spectral_model(std::numbers::pi, m, s_K, 0.0, p);
        const auto [lo, hi] = smoothing_window(m);
        for (double a : s_alpha) {
            detail::require(a >= 0.0, "smoothing_alpha entries must be non-negative");
            const auto fit = semigroup_smoothing_exponent(model, a, lo, hi);
            const double expected = -1.0 / (4.0 * m) - a;
            const bool ok = std::abs(fit.slope - expected) <= s_tol;
            s.add_row({m, a, lo, hi, fit.slope, expected, ok});
            out.cases.push_back({"smoothing m=" + std::to_string(m) + ",alpha=" + detail::fmt(a), ok,
                                 "slope " + detail::fmt(fit.slope) + " vs " + detail::fmt(expected)});
        }
    }
    out.tables.push_back({"spde-distributed_smoothing", std::move(s)});
    return out;
}

[[nodiscard]] inline ExperimentOutput run_spde_boundary(const ExperimentConfig& cfg) {
    const auto Hs = cfg.reals("H");
    const auto ps = cfg.reals("p");
    detail::require_paired(Hs, ps.size(), "H and p");
    NeumannKernelConfig base;
    base.t0 = cfg.real("t0");
    base.L = cfg.real("L");
    base.image_terms = static_cast<int>(cfg.integer("image_terms"));
    const double stable_tol = cfg.real("stable_tol"), image_tol = cfg.real("image_tol");

    ExperimentOutput out;
    CsvTable t({"H", "p", "value", "last_rel_change", "increment_ratio", "diverged", "value_double_images", "image_rel_change",
                "pass"});
    for (std::size_t i = 0; i < Hs.size(); ++i) {
        NeumannKernelConfig c = base;
        c.H = Hs[i];
        c.p = ps[i];
        try {
            c.validate();
        } catch (const std::domain_error& e) {
            throw ConfigError({e.what()});
        }
        const auto v = neumann_boundary_integral(c);
        NeumannKernelConfig c2 = c;
        c2.image_terms = 2 * c.image_terms;
        const auto v2 = neumann_boundary_integral(c2);
        const double image_change = v.value != 0.0 ? std::abs(v2.value / v.value - 1.0) : 0.0;
        const bool ok = !v.diverged && v.last_relative_change <= stable_tol && image_change <= image_tol;
        t.add_row({c.H, c.p, v.value, v.last_relative_change, v.increment_ratio, v.diverged, v2.value, image_change, ok});
        out.cases.push_back({"H=" + detail::fmt(c.H) + ",p=" + detail::fmt(c.p), ok,
                             "value " + detail::fmt(v.value) + ", last change " + detail::fmt(v.last_relative_change)});
    }
    out.tables.push_back({"spde-boundary", std::move(t)});

    CsvTable s({"d", "H", "p", "threshold", "value", "increment_ratio", "diverged", "expected_diverged", "pass"});
    const double d = cfg.real("surrogate_d"), sp = cfg.real("surrogate_p");
    detail::require(d > 0.0 && sp >= 1.0, "surrogate_d > 0 and surrogate_p >= 1 required");
    for (double H : cfg.reals("surrogate_H")) {
        detail::require(H > 0.0 && H < 1.0, "surrogate_H entries must lie in (0,1)");
        const double thr = d / 2.0 - 1.0 / (2.0 * sp);
        const auto v = neumann_surrogate_integral(d, H, sp, base.t0);
        const bool expected = H <= thr;
        s.add_row({d, H, sp, thr, v.value, v.increment_ratio, v.diverged, expected, v.diverged == expected});
        out.cases.push_back({"surrogate d=" + detail::fmt(d) + ",H=" + detail::fmt(H), v.diverged == expected,
                             std::string(v.diverged ? "diverged" : "finite") + ", expected " + (expected ? "diverged" : "finite")});
    }
    out.tables.push_back({"spde-boundary_surrogate", std::move(s)});

    const auto n_paths = cfg.integer("n_paths");
    if (n_paths > 0) {
        NeumannKernelConfig c = base;
        c.H = cfg.real("profile_H");
        c.p = 2.0;
        BoundaryCheckOptions bo;
        bo.time_steps = static_cast<std::size_t>(cfg.integer("steps"));
        bo.seed = cfg.seed();
        detail::require(c.H >= 0.5 && c.H < 1.0 && bo.time_steps >= 1, "profile_H must lie in [1/2,1) and steps >= 1");
        const auto prof = boundary_solution_check(c, FracParams::fbm(c.H, cfg.real("sigma")), static_cast<std::size_t>(n_paths),
                                                  cfg.reals("profile_x"), bo);
        const double z_max = cfg.real("z_max");
        nlohmann::json rows = nlohmann::json::array();
        bool ok = true;
        for (std::size_t i = 0; i < prof.x.size(); ++i) {
            const double z = prof.mc_se[i] > 0.0 ? (prof.mc_variance[i] - prof.discrete_norm_sq[i]) / prof.mc_se[i] : 0.0;
            ok = ok && std::abs(z) <= z_max;
            rows.push_back({{"x", prof.x[i]},
                            {"mc_variance", prof.mc_variance[i]},
                            {"mc_se", prof.mc_se[i]},
                            {"discrete_norm_sq", prof.discrete_norm_sq[i]},
                            {"kernel_norm_sq", prof.kernel_norm_sq[i]},
                            {"z_score", z}});
        }
        out.extra["profile"] = {{"H", c.H}, {"rows", rows}, {"gamma_norm", prof.gamma_norm}, {"boundary_exponent", prof.boundary_exponent}};
        out.cases.push_back({"profile", ok, "variance profile against the discrete D^H norm"});
    }
    return out;
}

[[nodiscard]] inline ExperimentOutput run_threshold_sweep(const ExperimentConfig& cfg) {
    auto Hs = cfg.reals("H");
    auto alphas = cfg.reals("alpha");
    std::sort(Hs.begin(), Hs.end());
    std::sort(alphas.begin(), alphas.end());
    const int m = static_cast<int>(cfg.integer("m"));
    const auto K = cfg.integer("K"), doublings = cfg.integer("doublings");
    const double t0 = cfg.real("t0"), sigma = cfg.real("sigma");
    detail::require(m >= 1 && K >= 1 && doublings >= 2 && t0 > 0.0, "need m >= 1, K >= 1, doublings >= 2, t0 > 0");
    for (double H : Hs) detail::require(H > 0.0 && H < 1.0, "H must lie in (0,1)");
    for (double a : alphas) detail::require(a >= 0.0, "alpha must be non-negative");

    ExperimentOutput out;
    CsvTable t({"m", "H", "alpha", "threshold", "finite", "expected_finite", "increment_ratio", "gamma_norm", "pass"});
    const auto model = build_spectral_model(std::numbers::pi, m, static_cast<std::size_t>(K));
    ExistenceOptions eo;
    eo.doublings = static_cast<int>(doublings);
    std::vector<std::vector<bool>> finite(Hs.size(), std::vector<bool>(alphas.size()));
    bool all_match = true;
    for (std::size_t i = 0; i < Hs.size(); ++i)
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            const double thr = Hs[i] - 1.0 / (4.0 * m);
            const auto rep = existence_report(model, Hs[i], sigma, alphas[j], t0, eo);
            const bool expected = alphas[j] < thr;
            finite[i][j] = rep.finite;
            all_match = all_match && rep.finite == expected;
            t.add_row({m, Hs[i], alphas[j], thr, rep.finite, expected, rep.increment_ratio, rep.gamma_norm_lp_value,
                       rep.finite == expected});
        }
    out.cases.push_back({"verdicts match threshold", all_match, ""});
    // Finite at (H, α) must imply finite at every smaller α and larger H.
    bool monotone = true;
    for (std::size_t i = 0; i < Hs.size(); ++i)
        for (std::size_t j = 0; j < alphas.size(); ++j)
            if (finite[i][j]) {
                for (std::size_t jj = 0; jj < j; ++jj) monotone = monotone && finite[i][jj];
                for (std::size_t ii = i + 1; ii < Hs.size(); ++ii) monotone = monotone && finite[ii][j];
            }
    out.cases.push_back({"monotone verdicts", monotone, ""});
    out.tables.push_back({"threshold-sweep", std::move(t)});
    return out;
}

using ExperimentFn = std::function<ExperimentOutput(const ExperimentConfig&)>;

[[nodiscard]] inline ExperimentFn experiment_function(const std::string& kind) {
    if (kind == "norm-identity") return run_norm_identity;
    if (kind == "isometry") return run_isometry;
    if (kind == "moments") return run_moments;
    if (kind == "spde-distributed") return run_spde_distributed;
    if (kind == "spde-boundary") return run_spde_boundary;
    if (kind == "threshold-sweep") return run_threshold_sweep;
    throw ConfigError({"unknown experiment '" + kind + "'"});
}

}  // namespace fracint::cli
