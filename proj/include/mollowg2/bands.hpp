#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mollowg2 {

/// Spectral component of the strong-drive fluorescence triplet:
/// central line (C), left sideband (L, lower frequency), right sideband (R).
enum class Band { C, L, R };

inline char band_letter(Band b) {
    switch (b) {
    case Band::C: return 'C';
    case Band::L: return 'L';
    case Band::R: return 'R';
    }
    throw std::invalid_argument("band_letter: invalid band");
}

/// Which two spectral components the detected photon pair belongs to.
struct BandPair {
    Band first = Band::C;
    Band second = Band::C;

    bool operator==(const BandPair&) const = default;
};

namespace pairs {
inline constexpr BandPair CC{Band::C, Band::C};
inline constexpr BandPair CL{Band::C, Band::L};
inline constexpr BandPair CR{Band::C, Band::R};
inline constexpr BandPair LC{Band::L, Band::C};
inline constexpr BandPair LL{Band::L, Band::L};
inline constexpr BandPair LR{Band::L, Band::R};
inline constexpr BandPair RC{Band::R, Band::C};
inline constexpr BandPair RL{Band::R, Band::L};
inline constexpr BandPair RR{Band::R, Band::R};
} // namespace pairs

inline constexpr std::array<BandPair, 9> all_band_pairs{
    pairs::CC, pairs::CL, pairs::CR, pairs::LC, pairs::LL,
    pairs::LR, pairs::RC, pairs::RL, pairs::RR};

inline std::string to_string(BandPair p) {
    return {band_letter(p.first), band_letter(p.second)};
}

inline Band parse_band(char c) {
    switch (c) {
    case 'C': case 'c': return Band::C;
    case 'L': case 'l': return Band::L;
    case 'R': case 'r': return Band::R;
    default:
        throw std::invalid_argument(std::string("unknown spectral band '") + c +
                                    "' (expected C, L or R)");
    }
}

inline BandPair parse_band_pair(std::string_view s) {
    if (s.size() != 2)
        throw std::invalid_argument("band pair must be two letters out of {C,L,R}, got '" +
                                    std::string(s) + "'");
    return {parse_band(s[0]), parse_band(s[1])};
}

} // namespace mollowg2
