#include "boxball/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxball {

void RandomParams::validate() const {
    if (n < 1) throw std::invalid_argument("box horizon n must be at least 1");
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("ball probability p must lie in (0,1)");
}

BoxBallConfig sample_config(const RandomParams& params, std::uint64_t stream) {
    params.validate();
    RngStream rng(params.seed, stream);
    const std::uint32_t thr = RngStream::threshold(params.p);
    std::vector<std::uint64_t> words(static_cast<std::size_t>((params.n + 63) / 64), 0);
    for (std::int64_t k = 0; k < params.n; ++k)
        if (rng.next_u32() < thr)
            words[static_cast<std::size_t>(k / 64)] |= std::uint64_t{1} << (k % 64);
    return BoxBallConfig::from_words(std::move(words));
}

WalkTrace harris_walk(const BoxBallConfig& cfg, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("walk horizon must be nonnegative");
    if (cfg.last_ball() > n)
        throw std::invalid_argument("configuration has support beyond the walk horizon");
    WalkTrace t;
    t.xi.resize(static_cast<std::size_t>(n));
    t.s.resize(static_cast<std::size_t>(n) + 1);
    t.h.resize(static_cast<std::size_t>(n) + 1);
    t.s[0] = 0;
    t.h[0] = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const std::int8_t xi = cfg.occupied(k) ? std::int8_t{1} : std::int8_t{-1};
        t.xi[static_cast<std::size_t>(k - 1)] = xi;
        t.s[static_cast<std::size_t>(k)] = t.s[static_cast<std::size_t>(k - 1)] + xi;
        const std::int32_t up = t.h[static_cast<std::size_t>(k - 1)] + xi;
        t.h[static_cast<std::size_t>(k)] = up > 0 ? up : 0;
    }
    return t;
}

RootedForest sample_gw_forest(const RandomParams& params, std::uint64_t stream) {
    params.validate();
    RngStream rng(params.seed, stream);
    const std::uint32_t thr = RngStream::threshold(params.p);
    RootedForest f;
    std::vector<std::int32_t> stack;
    std::int32_t open_root = -1;
    std::int32_t h = 0;
    for (std::int64_t step = 0; step < params.n; ++step) {
        if (h == 0 && open_root == -1) {
            open_root = static_cast<std::int32_t>(f.nodes.size());
            f.nodes.push_back({-1, -1, -1, 0, 1});
            f.roots.push_back(open_root);
        }
        if (rng.next_u32() < thr) {
            const std::int32_t parent = h == 0 ? open_root : stack.back();
            stack.push_back(static_cast<std::int32_t>(f.nodes.size()));
            f.nodes.push_back({parent, -1, -1, h + 1, 1});
            ++h;
        } else if (h > 0) {
            stack.pop_back();
            --h;
        } else {
            open_root = -1;  // the current root is done having children
        }
    }
    f.finalize();
    return f;
}

std::int64_t sample_gw_leaf_count(const RandomParams& params, std::uint64_t stream) {
    params.validate();
    RngStream rng(params.seed, stream);
    const std::uint32_t thr = RngStream::threshold(params.p);
    std::vector<char> childless;
    std::int64_t leaves = 0;
    std::int32_t h = 0;
    for (std::int64_t step = 0; step < params.n; ++step) {
        if (rng.next_u32() < thr) {
            if (h > 0) childless[static_cast<std::size_t>(h - 1)] = 0;
            childless.push_back(1);
            ++h;
        } else if (h > 0) {
            if (childless.back()) ++leaves;
            childless.pop_back();
            --h;
        }
    }
    for (const char c : childless) leaves += c;
    return leaves;
}

BoxBallConfig dual_config(const BoxBallConfig& cfg, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("dual horizon must be at least 1");
    if (cfg.last_ball() > n)
        throw std::domain_error("configuration has support beyond the dual horizon");
    std::vector<std::int64_t> boxes;
    for (std::int64_t k = 1; k <= n; ++k)
        if (!cfg.occupied(n - k + 1)) boxes.push_back(k);
    return BoxBallConfig::from_boxes(boxes);
}

std::int64_t subexcursion_count(const WalkTrace& trace, std::int32_t height) {
    if (height < 1) throw std::domain_error("subexcursion height must be at least 1");
    // Every up-step opens a candidate; the matching down-step closes it with
    // its interior maximum known. Down-steps to a fresh running minimum close
    // nothing.
    std::vector<std::int32_t> sub_max;
    std::int64_t count = 0;
    std::int32_t s = 0;
    for (const std::int8_t xi : trace.xi) {
        if (xi > 0) {
            ++s;
            sub_max.push_back(s);
        } else {
            --s;
            if (!sub_max.empty()) {
                const std::int32_t m = sub_max.back();
                sub_max.pop_back();
                if (m - s == height) ++count;
                if (!sub_max.empty()) sub_max.back() = std::max(sub_max.back(), m);
            }
        }
    }
    return count;
}

std::vector<std::int32_t> uniform_dyck_heights(std::int64_t n, RngStream& rng) {
    // Cycle lemma: shuffle n up-steps and n+1 down-steps; rotating to just
    // after the first prefix minimum and dropping the final step leaves the
    // unique dominating arrangement, uniform over Dyck paths of length 2n.
    std::vector<std::int8_t> w(static_cast<std::size_t>(2 * n + 1), -1);
    for (std::int64_t i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = 1;
    rng.shuffle(w);
    std::int64_t prefix = 0, min_val = 0, min_at = 0;
    for (std::int64_t k = 0; k < 2 * n + 1; ++k) {
        prefix += w[static_cast<std::size_t>(k)];
        if (prefix < min_val) {
            min_val = prefix;
            min_at = k + 1;
        }
    }
    std::vector<std::int32_t> h(static_cast<std::size_t>(2 * n + 1), 0);
    std::int32_t cur = 0;
    for (std::int64_t j = 0; j < 2 * n; ++j) {
        cur += w[static_cast<std::size_t>((min_at + j) % (2 * n + 1))];
        h[static_cast<std::size_t>(j + 1)] = cur;
    }
    return h;
}

LatticePath uniform_dyck_path(std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw std::invalid_argument("dyck half-length must be at least 1");
    RngStream rng(seed, stream);
    return LatticePath(uniform_dyck_heights(n, rng));
}

Permutation uniform_stack_sortable(std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
    return sigma_of_path(uniform_dyck_path(n, seed, stream));
}

}  // namespace boxball
