#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracint/core/stats.hpp"
#include "fracint/process/ensemble.hpp"
#include "fracint/sobolev/kstar.hpp"
#include "fracint/sobolev/step_function.hpp"

namespace fracint {

struct ElementaryIntegralResult {
    std::vector<double> samples;
    StepFunction f;  // integrand after snapping to the ensemble grid
    FracParams params;
    std::size_t snapped = 0;  // breakpoints moved onto a grid node
    std::vector<std::string> notes;
};

namespace detail {

struct SnappedSteps {
    std::vector<std::size_t> nodes;
    std::vector<double> values;
    StepFunction f;
    std::size_t moved = 0;
    std::vector<std::string> notes;
};

inline SnappedSteps snap_to_grid(const StepFunction& f, const TimeGrid& grid) {
    SnappedSteps out;
    if (f.empty()) return out;
    const double tol = 0.5 * grid.dt() * (1.0 + 1e-9);
    const double exact = 1e-12 * grid.length();
    std::vector<std::size_t> idx(f.breakpoints().size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const double t = f.breakpoints()[k];
        const long i = grid.snap(t, tol);
        if (i < 0) throw std::invalid_argument("elementary_integral: breakpoint " + std::to_string(t) + " lies off the ensemble grid");
        idx[k] = static_cast<std::size_t>(i);
        if (std::abs(grid.node(idx[k]) - t) > exact) {
            ++out.moved;
            out.notes.push_back("snapped breakpoint " + std::to_string(t) + " to " + std::to_string(grid.node(idx[k])));
        }
    }
    // Pieces that collapse onto a single node carry no increment.
    out.nodes.push_back(idx.front());
    for (std::size_t j = 0; j < f.pieces(); ++j) {
        if (idx[j + 1] == idx[j]) continue;
        out.values.push_back(f.values()[j]);
        out.nodes.push_back(idx[j + 1]);
    }
    if (out.values.empty()) {
        out.nodes.clear();
        return out;
    }
    std::vector<double> br(out.nodes.size());
    for (std::size_t k = 0; k < br.size(); ++k) br[k] = grid.node(out.nodes[k]);
    out.f = StepFunction(std::move(br), out.values);
    return out;
}

}  // namespace detail

/// i_T(f) = Σ_j f_j (z_{t_j} - z_{t_{j-1}}) per path. Breakpoints within half
/// a grid step of a node are moved onto it and reported.
[[nodiscard]] inline ElementaryIntegralResult elementary_integral(const StepFunction& f, const PathEnsemble& ens) {
    ElementaryIntegralResult res;
    res.params = ens.params();
    res.samples.assign(ens.n_paths(), 0.0);
    auto snapped = detail::snap_to_grid(f, ens.grid());
    res.f = snapped.f;
    res.snapped = snapped.moved;
    res.notes = std::move(snapped.notes);
    if (snapped.nodes.empty()) return res;
    for (std::size_t p = 0; p < ens.n_paths(); ++p) {
        const auto z = ens.path(p);
        double acc = 0.0;
        for (std::size_t j = 0; j < snapped.values.size(); ++j)
            acc += snapped.values[j] * (z[snapped.nodes[j + 1]] - z[snapped.nodes[j]]);
        res.samples[p] = acc;
    }
    return res;
}

struct IsometryReport {
    double mc_var = 0.0;     // empirical E i_T(f)²
    double mc_se = 0.0;      // its standard error
    double dh_norm_sq = 0.0; // σ²‖K*_H f‖²_{L²}
    double z_score = 0.0;    // (mc_var - dh_norm_sq) / mc_se, 0 when mc_se = 0
    double mean = 0.0;
    double mean_se = 0.0;
};

[[nodiscard]] inline IsometryReport isometry_report(const ElementaryIntegralResult& r) {
    IsometryReport rep;
    const auto m2 = stats::second_moment(r.samples);
    rep.mc_var = m2.value;
    rep.mc_se = m2.se;
    const double dh = r.f.empty() ? 0.0 : dh_norm_kstar(r.f, r.params);
    rep.dh_norm_sq = dh * dh;
    rep.z_score = rep.mc_se > 0.0 ? (rep.mc_var - rep.dh_norm_sq) / rep.mc_se : 0.0;
    rep.mean = stats::mean(r.samples);
    const double n = static_cast<double>(r.samples.size());
    rep.mean_se = n > 1 ? std::sqrt(stats::variance(r.samples) / n) : 0.0;
    return rep;
}

[[nodiscard]] inline IsometryReport isometry_report(const StepFunction& f, const PathEnsemble& ens) {
    return isometry_report(elementary_integral(f, ens));
}

}  // namespace fracint
