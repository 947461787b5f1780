#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "slt/instance.hpp"

namespace slt {

/// 64-bit linear congruential generator (Knuth's MMIX multiplier and increment).
using Rng = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

/// Uniform double in [0,1) from the top 53 bits of one draw.
double uniform01(Rng& rng);

enum class InstanceKind { circle, comb, cnet_comb, sector_lb, uniform };

const char* kind_name(InstanceKind kind);
InstanceKind parse_kind(const std::string& name);

struct GenParams {
    std::optional<std::size_t> n;  ///< uniform: point count; circle: m
    std::optional<int> k;          ///< comb: number of vertical lines
    std::optional<double> delta;   ///< comb and sector-lb: sampling step
};

/// circle:    m = ceil(1/eps) points on the unit circle, source at angle 0.
/// comb:      bottom edge of [0,1]^2 and k vertical unit lines at x = (j+1/2)/k, step delta
///            (default min(1/(2k), eps/4)); source (2,0).
/// cnet-comb: bottom edge of [0,1]x[0,sqrt(eps)] and vertical lines at x = 2j sqrt(eps),
///            step 2.5 eps; checked to be a centered eps-net; source (2,0).
/// sector-lb: bottom edge of [0,1]x[0,sqrt(eps)] and vertical lines at x = j sqrt(eps),
///            step delta (default eps); source (2,0).
/// uniform:   n points uniform in [0,1]^2 (default 1000); source (2,0).
/// The source is point 0 for every kind.
Instance generate(InstanceKind kind, double eps, const GenParams& params, std::uint64_t seed);

}  // namespace slt
