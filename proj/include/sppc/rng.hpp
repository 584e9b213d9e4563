#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "sppc/errors.hpp"

namespace sppc::rng {

// Counter-based generation: every draw is a pure function of
// (seed, stream, item, draw index), so results do not depend on thread count
// or on the order in which paths are processed. Streams separate independent
// uses of the same seed (path simulation, direct sampling, estimation trials).
enum : std::uint32_t {
    kStreamPathSim = 0,
    kStreamDirectSampling = 1,
    kStreamEstimation = 2,
};

namespace detail {

inline void philox_round(std::array<std::uint32_t, 4>& ctr, std::array<std::uint32_t, 2>& key) {
    constexpr std::uint64_t kMul0 = 0xD2511F53ull;
    constexpr std::uint64_t kMul1 = 0xCD9E8D57ull;
    const std::uint64_t p0 = kMul0 * ctr[0];
    const std::uint64_t p1 = kMul1 * ctr[2];
    const std::array<std::uint32_t, 4> next = {
        static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
        static_cast<std::uint32_t>(p1),
        static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
        static_cast<std::uint32_t>(p0),
    };
    ctr = next;
    key[0] += 0x9E3779B9u;
    key[1] += 0xBB67AE85u;
}

inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) philox_round(ctr, key);
    return ctr;
}

inline double to_unit_interval(std::uint64_t bits) {
    // 53 significant bits, offset by half an ulp so the result is in (0,1).
    return (static_cast<double>(bits >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

}  // namespace detail

/// Two independent U(0,1) variates for the given counter coordinates.
inline std::array<double, 2> uniform_pair(std::uint64_t seed, std::uint32_t stream,
                                          std::uint64_t item, std::uint32_t pair_index) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(item),
        static_cast<std::uint32_t>(item >> 32),
        pair_index,
        stream,
    };
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    const auto words = detail::philox4x32(ctr, key);
    const std::uint64_t lo = (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
    const std::uint64_t hi = (static_cast<std::uint64_t>(words[3]) << 32) | words[2];
    return {detail::to_unit_interval(lo), detail::to_unit_interval(hi)};
}

/// Inverse standard normal CDF (Wichura's AS 241, double precision).
inline double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw NumericalError("inverse_normal_cdf: p outside (0,1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        const double num =
            (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                  6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
              1.3314166789178437745e2) * r + 3.3871328727963666080e0);
        const double den =
            (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                  3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
              4.2313330701600911252e1) * r + 1.0);
        return q * num / den;
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        const double num =
            (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0);
        const double den =
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
        x = num / den;
    } else {
        r -= 5.0;
        const double num =
            (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0);
        const double den =
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
        x = num / den;
    }
    return (q < 0.0) ? -x : x;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / 1.4142135623730950488); }

/// Two independent N(0,1) variates.
inline std::array<double, 2> normal_pair(std::uint64_t seed, std::uint32_t stream,
                                         std::uint64_t item, std::uint32_t pair_index) {
    const auto u = uniform_pair(seed, stream, item, pair_index);
    return {inverse_normal_cdf(u[0]), inverse_normal_cdf(u[1])};
}

/// Sequential access to the normals of one (seed, stream, item) key.
/// Draw k is a pure function of the key and k; the buffer only avoids
/// recomputing the second lane of each Philox block.
class NormalSequence {
public:
    NormalSequence(std::uint64_t seed, std::uint32_t stream, std::uint64_t item)
        : seed_(seed), stream_(stream), item_(item) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const auto z = normal_pair(seed_, stream_, item_, pair_index_++);
        spare_ = z[1];
        have_spare_ = true;
        return z[0];
    }

private:
    std::uint64_t seed_;
    std::uint32_t stream_;
    std::uint64_t item_;
    std::uint32_t pair_index_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sppc::rng
