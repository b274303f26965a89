#include "bargain/threat.hpp"

#include <cmath>

namespace bargain {

Point threat_point(const CornerPair& corners) {
    return midpoint(corners.right, corners.top);
}

Point sample_threat(SplitMix64& rng, const CornerPair& corners) {
    return (rng.next() & 1u) == 0 ? corners.right : corners.top;
}

ThreatSampleStats simulate_threat_mean(const CornerPair& corners, std::uint64_t n,
                                       std::uint64_t seed) {
    if (n == 0) throw Error(Errc::zero_samples, "sample count must be at least 1");

    SplitMix64 rng(seed);
    std::uint64_t top_count = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if ((rng.next() & 1u) != 0) ++top_count;

    // The draw is two-valued, so the per-coordinate sample moments follow
    // from the top-count alone; this keeps the stats bit-identical regardless
    // of summation order and exact when the corners coincide.
    const double nd = static_cast<double>(n);
    const double k = static_cast<double>(top_count);
    const double frac_top = k / nd;
    const double dx = corners.top.x - corners.right.x;
    const double dy = corners.top.y - corners.right.y;

    ThreatSampleStats stats;
    stats.n = n;
    stats.mean = {corners.right.x + frac_top * dx, corners.right.y + frac_top * dy};

    if (n >= 2) {
        // Deviations are -frac_top*d for the right draws and (1-frac_top)*d
        // for the top draws; sample variance uses the n-1 denominator.
        const double spread = ((nd - k) * frac_top * frac_top +
                               k * (1.0 - frac_top) * (1.0 - frac_top)) /
                              (nd - 1.0);
        stats.standard_error = {std::sqrt(spread * dx * dx / nd),
                                std::sqrt(spread * dy * dy / nd)};
    }
    return stats;
}

} // namespace bargain
