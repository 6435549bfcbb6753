#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>

namespace fracint {

namespace detail {
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace detail

/// Counter-based generator: output k of stream (seed, lane, path) is a pure
/// function of those three keys and k, so any path can be regenerated
/// independently of the order in which paths are visited.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t path, std::uint64_t lane = 0) noexcept
        : key_(derive_key(seed, path, lane)) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        ++counter_;
        return detail::mix64(key_ + counter_ * detail::kGolden);
    }

    /// Uniform on (0, 1]; never returns 0 so that log() is safe.
    double uniform() noexcept { return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the sine branch is cached.
    double normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double phi = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(phi);
        has_spare_ = true;
        return r * std::cos(phi);
    }

    void fill_normal(std::span<double> out) noexcept {
        for (double& v : out) v = normal();
    }

    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t path, std::uint64_t lane) noexcept {
        std::uint64_t k = detail::mix64(seed + detail::kGolden);
        k = detail::mix64(k ^ (path * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
        k = detail::mix64(k ^ (lane * 0xAEF17502108EF2D9ULL + 0x5851F42D4C957F2DULL));
        return k;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace fracint
