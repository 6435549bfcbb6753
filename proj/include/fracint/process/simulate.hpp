#pragma once

#include <cstdint>
#include <stdexcept>

#include "fracint/process/fbm.hpp"
#include "fracint/process/hermite_process.hpp"

namespace fracint {

/// Simulates any supported family. Gaussian families (chaos order 1) go
/// through FbmSampler, second-chaos families through HermiteK2Sampler.
[[nodiscard]] inline PathEnsemble simulate(const FracParams& params, const TimeGrid& grid, std::size_t n_paths,
                                           std::uint64_t seed, const SimOptions& opt = {},
                                           const HermiteOptions& hopt = {}) {
    if (params.chaos_order == 1) return simulate_fbm(params, grid, n_paths, seed, opt);
    HermiteOptions h = hopt;
    if (h.threads == 0) h.threads = opt.threads;
    return simulate_hermite_k2(params, grid, n_paths, seed, opt.lane, h);
}

/// dim_U independent copies; component j uses substream lane j + 1.
[[nodiscard]] inline CylindricalEnsemble simulate_cylindrical(const FracParams& params, const TimeGrid& grid,
                                                              std::size_t dim_U, std::size_t n_paths,
                                                              std::uint64_t seed, const SimOptions& opt = {}) {
    if (dim_U == 0) throw std::invalid_argument("simulate_cylindrical: dim_U must be at least 1");
    CylindricalEnsemble out;
    out.components.reserve(dim_U);
    for (std::size_t j = 0; j < dim_U; ++j) {
        SimOptions o = opt;
        o.lane = opt.lane * 1000003ULL + j + 1;
        out.components.push_back(simulate(params, grid, n_paths, seed, o));
    }
    return out;
}

}  // namespace fracint
