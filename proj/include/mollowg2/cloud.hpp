#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "mollowg2/vec3.hpp"

namespace mollowg2 {

/// A single realization of a disordered cloud: atom positions drawn uniformly
/// in the cube [-box_half, +box_half]^3, lengths in laser wavelengths.
struct AtomCloud {
    std::vector<Vec3> positions;
    std::uint64_t seed = 0;
    double box_half = 0.0;
};

namespace detail {

// 53-bit mantissa mapping to [0, 1); distribution code is spelled out so the
// stream is identical on every platform (std distributions are not portable).
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace detail

/// Draws n_atoms positions from mt19937_64 seeded with `seed`; coordinates
/// are generated atom by atom in x, y, z order. Same seed, same cloud,
/// bit for bit.
inline AtomCloud sample_cloud(int n_atoms, double box_half, std::uint64_t seed) {
    if (n_atoms < 2)
        throw std::invalid_argument("sample_cloud: need at least 2 atoms");
    if (!(box_half > 0.0))
        throw std::invalid_argument("sample_cloud: box half-length must be positive");
    AtomCloud cloud;
    cloud.seed = seed;
    cloud.box_half = box_half;
    cloud.positions.reserve(static_cast<std::size_t>(n_atoms));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_atoms; ++i) {
        const double x = box_half * (2.0 * detail::uniform_unit(rng) - 1.0);
        const double y = box_half * (2.0 * detail::uniform_unit(rng) - 1.0);
        const double z = box_half * (2.0 * detail::uniform_unit(rng) - 1.0);
        cloud.positions.push_back({x, y, z});
    }
    return cloud;
}

/// All unordered pair separations r_j - r_i for i < j.
inline std::vector<Vec3> pair_separations(const AtomCloud& cloud) {
    const std::size_t n = cloud.positions.size();
    std::vector<Vec3> seps;
    seps.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            seps.push_back(cloud.positions[j] - cloud.positions[i]);
    return seps;
}

/// Mean of cos(q . r_ji) over all unordered atom pairs of one cloud.
inline double sampled_average(const AtomCloud& cloud, const Vec3& q) {
    const std::size_t n = cloud.positions.size();
    if (n < 2)
        throw std::invalid_argument("sampled_average: need at least 2 atoms");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sum += std::cos(q.dot(cloud.positions[j] - cloud.positions[i]));
    return sum / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

} // namespace mollowg2
