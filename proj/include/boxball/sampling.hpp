#pragma once

#include <cstdint>
#include <vector>

#include "boxball/config.hpp"
#include "boxball/forest.hpp"
#include "boxball/path.hpp"
#include "boxball/perm.hpp"
#include "boxball/rng.hpp"

namespace boxball {

struct RandomParams {
    std::int64_t n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;

    void validate() const;  // throws unless n >= 1 and 0 < p < 1
};

// i.i.d. Bernoulli(p) occupancy on boxes 1..n, read from stream `stream` of
// the seed (trial t of an experiment uses stream t).
BoxBallConfig sample_config(const RandomParams& params, std::uint64_t stream = 0);

struct WalkTrace {
    std::vector<std::int8_t> xi;   // increments, +1 per ball
    std::vector<std::int32_t> s;   // partial sums, s[0] = 0
    std::vector<std::int32_t> h;   // Harris walk: down-steps at 0 censored
};

WalkTrace harris_walk(const BoxBallConfig& cfg, std::int64_t n);

// Galton-Watson forest with Geometric(1-p) offspring, revealed by running the
// depth-first contour for n steps; no infinite object is ever materialized.
// Childless roots are kept (they are genuine single-node trees here).
RootedForest sample_gw_forest(const RandomParams& params, std::uint64_t stream = 0);

// Leaf count of sample_gw_forest without building the forest.
std::int64_t sample_gw_leaf_count(const RandomParams& params, std::uint64_t stream);

// Complemented and reversed on [1, n]; involution, thrown off [1, n].
BoxBallConfig dual_config(const BoxBallConfig& cfg, std::int64_t n);

// Number of start indices of completed subexcursions of exact height `height`
// in the partial-sum walk of the trace.
std::int64_t subexcursion_count(const WalkTrace& trace, std::int32_t height);

// Exact uniform sampling over the Catalan(n) Dyck paths of length 2n via the
// cycle lemma: one rotation of a shuffled (n up, n+1 down) word dominates.
LatticePath uniform_dyck_path(std::int64_t n, std::uint64_t seed, std::uint64_t stream = 0);
std::vector<std::int32_t> uniform_dyck_heights(std::int64_t n, RngStream& rng);

// Uniform 231-avoiding permutation of length n, as sigma of a uniform Dyck path.
Permutation uniform_stack_sortable(std::int64_t n, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace boxball
