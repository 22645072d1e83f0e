#pragma once

#include <vector>

#include "boxball/config.hpp"
#include "boxball/path.hpp"
#include "boxball/rng.hpp"

namespace boxball::testing {

inline BoxBallConfig random_config(RngStream& rng, std::int64_t max_n, double p) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_n)));
    BoxBallConfig cfg;
    for (std::int64_t k = 1; k <= n; ++k)
        if (rng.bernoulli(p)) cfg.set(k);
    return cfg;
}

// Random Motzkin path: the path of a random configuration, flattened a random
// number of times so plateaus at positive heights also show up.
inline LatticePath random_motzkin(RngStream& rng, std::int64_t max_n, double p) {
    LatticePath path = path_of_config(random_config(rng, max_n, p));
    const std::uint64_t flattenings = rng.below(3);
    for (std::uint64_t i = 0; i < flattenings && path.max_height() > 0; ++i)
        path = hill_flatten(path);
    return path;
}

inline LatticePath collapse_zero_runs(const LatticePath& path) {
    const LatticePath canon = path.canonical();
    std::vector<std::int32_t> h;
    for (const std::int32_t v : canon.heights()) {
        if (!h.empty() && h.back() == 0 && v == 0) continue;
        h.push_back(v);
    }
    return LatticePath(std::move(h));
}

}  // namespace boxball::testing
