#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace fracint::cli {

inline constexpr int kConfigFormat = 1;
inline constexpr int kSummarySchema = 1;
inline constexpr std::string_view kCodeVersion = "0.1.0";

enum class ValueKind { Real, Integer, Text, RealList, IntegerList };

struct KeySpec {
    std::string name;
    ValueKind kind;
    bool required;
    std::string fallback;  // default when optional; empty means "no default"
    std::string help;
};

struct ColumnSpec {
    std::string name;
    std::string help;
};

struct ExperimentSpec {
    std::string kind;
    std::string summary;
    std::vector<KeySpec> keys;
    std::vector<ColumnSpec> columns;  // main CSV table
    std::string extra_table;          // suffix of a second CSV, empty if none
    std::vector<ColumnSpec> extra_columns;
};

namespace detail {

inline std::vector<KeySpec> with_common(std::vector<KeySpec> keys) {
    keys.insert(keys.begin(), {
                                  {"format", ValueKind::Integer, true, "", "config format version, must be 1"},
                                  {"experiment", ValueKind::Text, true, "", "experiment kind"},
                                  {"seed", ValueKind::Integer, false, "1", "single top-level seed for all randomness"},
                                  {"sigma", ValueKind::Real, false, "1", "scale of the driving process"},
                              });
    return keys;
}

}  // namespace detail

/// The six experiment kinds, their keys and their CSV columns.
[[nodiscard]] inline const std::vector<ExperimentSpec>& experiment_specs() {
    using V = ValueKind;
    static const std::vector<ExperimentSpec> specs{
        {"norm-identity",
         "K* norm against the exact Fourier norm of order 1/2-H on random step functions",
         detail::with_common({
             {"H", V::RealList, true, "", "Hurst indices"},
             {"n_functions", V::Integer, true, "", "random step functions per H"},
             {"pieces", V::Integer, false, "6", "pieces per random step function"},
             {"rel_tol", V::Real, false, "0.01", "allowed relative deviation of the ratio"},
         }),
         {{"H", "Hurst index"},
          {"f_id", "index of the random step function"},
          {"dh_norm", "sigma times the L2 norm of the K* transform"},
          {"fourier_norm", "homogeneous Sobolev norm of order 1/2-H"},
          {"ratio", "dh_norm / fourier_norm"},
          {"expected_ratio", "closed-form norm-equivalence constant"},
          {"rel_err", "|ratio / expected_ratio - 1|"},
          {"pass", "1 when rel_err <= rel_tol"}},
         "",
         {}},
        {"isometry",
         "Monte Carlo variance of elementary integrals against the D^H norm",
         detail::with_common({
             {"family", V::Text, true, "", "fbm or rosenblatt"},
             {"H", V::RealList, true, "", "Hurst indices"},
             {"n_paths", V::Integer, true, "", "Monte Carlo paths per H"},
             {"n_functions", V::Integer, false, "10", "random step functions per H"},
             {"steps", V::Integer, false, "64", "grid steps on [0, T]"},
             {"T", V::Real, false, "1", "time horizon"},
             {"z_max", V::Real, false, "3", "largest accepted |z|"},
             {"pass_fraction", V::Real, false, "0.95", "required fraction of cells with |z| <= z_max"},
         }),
         {{"family", "driver family"},
          {"H", "Hurst index"},
          {"f_id", "index of the random step function"},
          {"mc_var", "empirical second moment of the integral"},
          {"mc_se", "standard error of mc_var"},
          {"dh_norm_sq", "squared D^H norm of the integrand"},
          {"z_score", "(mc_var - dh_norm_sq) / mc_se"},
          {"pass", "1 when |z_score| <= z_max"}},
         "",
         {}},
        {"moments",
         "moment ratios (E|X|^4)^(1/4) / (E|X|^2)^(1/2) of chaos samples",
         detail::with_common({
             {"n_samples", V::Integer, true, "", "samples per case"},
             {"draws", V::Integer, false, "100", "random vector-coefficient draws per chaos order"},
             {"dim", V::Integer, false, "3", "dimension of the vector coefficients"},
             {"terms", V::Integer, false, "4", "chaos elements combined per draw"},
             {"rel_tol_gaussian", V::Real, false, "0.01", "tolerance of the Gaussian ratio"},
             {"rel_tol_chaos2", V::Real, false, "0.02", "tolerance of the second-chaos ratio"},
         }),
         {{"case", "gaussian, chaos2, vector1 or vector2"},
          {"draw", "draw index (0 for the scalar cases)"},
          {"ratio", "empirical moment ratio"},
          {"reference", "exact ratio (scalar cases) or admissible bound (vector cases)"},
          {"rel_err", "relative deviation from the exact ratio, or ratio/bound - 1"},
          {"pass", "1 when the case meets its tolerance or bound"}},
         "",
         {}},
        {"spde-distributed",
         "mild solution with distributed fractional noise: existence, Hoelder fit, L2 isometry, smoothing",
         detail::with_common({
             {"m", V::IntegerList, true, "", "half orders of the operator, paired with H"},
             {"H", V::RealList, true, "", "Hurst indices, paired with m"},
             {"n_paths", V::Integer, true, "", "Monte Carlo paths per case"},
             {"alpha", V::Real, false, "0", "fractional power applied to the solution"},
             {"K", V::Integer, false, "64", "retained eigenmodes"},
             {"steps", V::Integer, false, "1024", "time steps on [0, T]"},
             {"T", V::Real, false, "1", "time horizon"},
             {"p", V::Real, false, "2", "integrability exponent of the state space"},
             {"lags", V::Integer, false, "9", "dyadic lags in the Hoelder regression"},
             {"holder_margin", V::Real, false, "0.05", "allowed shortfall of the Hoelder slope"},
             {"z_max", V::Real, false, "3", "largest accepted |z| of the L2 check"},
             {"smoothing_alpha", V::RealList, false, "0,0.5", "fractional powers in the smoothing fits"},
             {"smoothing_K", V::Integer, false, "2048", "modes in the smoothing fits"},
             {"smoothing_tol", V::Real, false, "0.05", "allowed slope deviation in the smoothing fits"},
         }),
         {{"m", "half order of the operator"},
          {"H", "Hurst index"},
          {"alpha", "fractional power"},
          {"finite", "1 when the existence report is finite"},
          {"gamma_norm", "gamma norm of the truncated kernel field"},
          {"holder_slope", "fitted temporal exponent"},
          {"holder_threshold", "H - 1/(4m) - alpha"},
          {"l2_mc", "empirical E||Y_t||^2 at t = T/2"},
          {"l2_se", "standard error of l2_mc"},
          {"l2_exact", "sum of squared mode norms at t = T/2"},
          {"l2_scheme", "exact E||Y_t||^2 of the time-stepping scheme at t = T/2"},
          {"z_score", "(l2_mc - l2_scheme) / l2_se"},
          {"pass", "1 when the slope and the L2 check pass"}},
         "smoothing",
         {{"m", "half order of the operator"},
          {"alpha", "fractional power"},
          {"u_lo", "smallest time in the fit"},
          {"u_hi", "largest time in the fit"},
          {"slope", "fitted log-log slope"},
          {"expected", "-1/(4m) - alpha"},
          {"pass", "1 when |slope - expected| <= smoothing_tol"}}},
        {"spde-boundary",
         "boundary-noise integral for the Neumann heat kernel and the formal-dimension surrogate",
         detail::with_common({
             {"H", V::RealList, true, "", "Hurst indices, paired with p"},
             {"p", V::RealList, true, "", "integrability exponents, paired with H"},
             {"t0", V::Real, false, "1", "time horizon"},
             {"L", V::Real, false, "1", "interval length"},
             {"image_terms", V::Integer, false, "20", "image pairs on each side"},
             {"stable_tol", V::Real, false, "0.01", "allowed relative change of the last refinement"},
             {"image_tol", V::Real, false, "0.005", "allowed change when image_terms doubles"},
             {"surrogate_d", V::Real, false, "2", "formal dimension of the surrogate"},
             {"surrogate_H", V::RealList, false, "0.6,0.9", "Hurst indices of the surrogate cases"},
             {"surrogate_p", V::Real, false, "2", "exponent p of the surrogate cases"},
             {"n_paths", V::Integer, false, "0", "paths of the boundary-noise profile (0 skips it)"},
             {"steps", V::Integer, false, "256", "time steps of the profile simulation"},
             {"profile_x", V::RealList, false, "0.05,0.1,0.2,0.3,0.5", "spatial points of the profile"},
             {"profile_H", V::Real, false, "0.75", "Hurst index of the profile simulation"},
             {"z_max", V::Real, false, "3", "largest accepted |z| of the profile check"},
         }),
         {{"H", "Hurst index"},
          {"p", "integrability exponent"},
          {"value", "boundary integral (tail-extrapolated)"},
          {"last_rel_change", "relative change of the last dyadic refinement"},
          {"increment_ratio", "ratio of the last two refinement increments"},
          {"diverged", "1 when the detector flags divergence"},
          {"value_double_images", "value with twice the image terms"},
          {"image_rel_change", "relative change under image doubling"},
          {"pass", "1 when finite, refinement-stable and image-stable"}},
         "surrogate",
         {{"d", "formal dimension"},
          {"H", "Hurst index"},
          {"p", "integrability exponent"},
          {"threshold", "d/2 - 1/(2p)"},
          {"value", "surrogate integral (last partial value when diverged)"},
          {"increment_ratio", "ratio of the last two refinement increments"},
          {"diverged", "1 when the detector flags divergence"},
          {"expected_diverged", "1 when H <= threshold"},
          {"pass", "1 when diverged equals expected_diverged"}}},
        {"threshold-sweep",
         "existence verdict over a grid of (H, alpha) against the threshold H - 1/(4m)",
         detail::with_common({
             {"H", V::RealList, true, "", "Hurst indices"},
             {"alpha", V::RealList, true, "", "fractional powers"},
             {"m", V::Integer, false, "1", "half order of the operator"},
             {"K", V::Integer, false, "64", "base mode count before doubling"},
             {"doublings", V::Integer, false, "2", "mode-count doublings"},
             {"t0", V::Real, false, "1", "time horizon"},
         }),
         {{"m", "half order of the operator"},
          {"H", "Hurst index"},
          {"alpha", "fractional power"},
          {"threshold", "H - 1/(4m)"},
          {"finite", "1 when the existence report is finite"},
          {"expected_finite", "1 when alpha < threshold"},
          {"increment_ratio", "ratio of the last two doubling increments"},
          {"gamma_norm", "gamma norm at the largest mode count"},
          {"pass", "1 when finite equals expected_finite"}},
         "",
         {}},
    };
    return specs;
}

[[nodiscard]] inline const ExperimentSpec* find_experiment(std::string_view kind) {
    const auto& s = experiment_specs();
    const auto it = std::find_if(s.begin(), s.end(), [&](const ExperimentSpec& e) { return e.kind == kind; });
    return it == s.end() ? nullptr : &*it;
}

/// Text table of kinds and required keys, three lines per kind.
[[nodiscard]] inline std::string list_experiments_text() {
    std::string out;
    for (const auto& e : experiment_specs()) {
        out += e.kind + "\n";
        out += "  " + e.summary + "\n";
        out += "  required:";
        for (const auto& k : e.keys)
            if (k.required) out += " " + k.name;
        out += "\n";
    }
    return out;
}

/// Column documentation for --help.
[[nodiscard]] inline std::string csv_columns_text() {
    std::string out;
    auto table = [&](const std::string& file, const std::vector<ColumnSpec>& cols) {
        out += file + "\n";
        for (const auto& c : cols) out += "  " + c.name + ": " + c.help + "\n";
    };
    for (const auto& e : experiment_specs()) {
        table(e.kind + ".csv", e.columns);
        if (!e.extra_table.empty()) table(e.kind + "_" + e.extra_table + ".csv", e.extra_columns);
    }
    return out;
}

}  // namespace fracint::cli
