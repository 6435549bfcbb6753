#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracint {

enum class Family { FBM, ROSENBLATT, GENERALIZED };

[[nodiscard]] inline std::string to_string(Family f) {
    switch (f) {
        case Family::FBM: return "fbm";
        case Family::ROSENBLATT: return "rosenblatt";
        case Family::GENERALIZED: return "generalized";
    }
    return "unknown";
}

[[nodiscard]] inline Family family_from_string(const std::string& s) {
    if (s == "fbm") return Family::FBM;
    if (s == "rosenblatt") return Family::ROSENBLATT;
    if (s == "generalized") return Family::GENERALIZED;
    throw std::invalid_argument("unknown process family '" + s + "'");
}

/// Parameters of an H-fractional process. For the Hermite-type families the
/// moving-average exponent alpha, the filter exponent beta and the chaos
/// order k determine H = alpha + beta + k/2 + 1.
struct FracParams {
    double H = 0.5;
    double sigma = 1.0;
    Family family = Family::FBM;
    double alpha = 0.0;
    double beta = 0.0;
    int k = 1;
    int chaos_order = 1;

    static FracParams fbm(double H, double sigma = 1.0) {
        FracParams p;
        p.H = H;
        p.sigma = sigma;
        p.family = Family::FBM;
        p.k = 1;
        p.chaos_order = 1;
        p.validate();
        return p;
    }

    static FracParams rosenblatt(double H, double sigma = 1.0) {
        FracParams p;
        p.H = H;
        p.sigma = sigma;
        p.family = Family::ROSENBLATT;
        p.k = 2;
        p.beta = 0.0;
        p.alpha = H - 2.0;
        p.chaos_order = 2;
        p.validate();
        return p;
    }

    static FracParams generalized(double alpha, double beta, int k, double sigma = 1.0) {
        FracParams p;
        p.family = Family::GENERALIZED;
        p.alpha = alpha;
        p.beta = beta;
        p.k = k;
        p.sigma = sigma;
        p.H = alpha + beta + 0.5 * k + 1.0;
        p.chaos_order = k;
        p.validate();
        return p;
    }

    /// Hurst index of the unfiltered (beta = 0) moving-average process.
    [[nodiscard]] double base_hurst() const noexcept { return alpha + 0.5 * k + 1.0; }

    void validate() const {
        if (!(sigma > 0.0)) throw std::invalid_argument("FracParams: sigma must be positive");
        if (!(H > 0.0 && H < 1.0)) throw std::invalid_argument("FracParams: H must lie in (0,1)");
        switch (family) {
            case Family::FBM:
                if (chaos_order != 1) throw std::invalid_argument("FracParams: fBm has chaos order 1");
                break;
            case Family::ROSENBLATT:
                if (!(H > 0.5) || beta != 0.0 || k != 2)
                    throw std::invalid_argument("FracParams: Rosenblatt needs beta = 0, k = 2, H in (1/2,1)");
                [[fallthrough]];
            case Family::GENERALIZED: {
                if (k < 1 || k > 2) throw std::invalid_argument("parameters outside (alpha,beta,k) region");
                const double lo = -alpha - 0.5 * k - 1.0;
                const double hi = -alpha - 0.5 * k;
                const bool ok = -1.0 < lo && lo < beta && beta < hi && hi < 0.5;
                if (!ok) throw std::invalid_argument("parameters outside (alpha,beta,k) region");
                if (std::abs(H - (alpha + beta + 0.5 * k + 1.0)) > 1e-12)
                    throw std::invalid_argument("parameters outside (alpha,beta,k) region");
                break;
            }
        }
    }
};

}  // namespace fracint
