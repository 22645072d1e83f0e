#include "boxball/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace boxball {

Permutation::Permutation(std::vector<std::int32_t> values) : v_(std::move(values)) {
    std::vector<char> seen(v_.size(), 0);
    for (const std::int32_t x : v_) {
        if (x < 1 || x > static_cast<std::int32_t>(v_.size()) || seen[static_cast<std::size_t>(x - 1)])
            throw std::invalid_argument("not a permutation of 1..m in one-line notation");
        seen[static_cast<std::size_t>(x - 1)] = 1;
    }
}

Permutation Permutation::inverse() const {
    std::vector<std::int32_t> inv(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i)
        inv[static_cast<std::size_t>(v_[i] - 1)] = static_cast<std::int32_t>(i + 1);
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v_[i]);
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<std::int32_t> v;
    std::istringstream in{std::string(text)};
    std::int32_t x;
    while (in >> x) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation Permutation::identity(std::int64_t m) {
    std::vector<std::int32_t> v(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i + 1);
    return Permutation(std::move(v));
}

Permutation sigma_of_config(const BoxBallConfig& cfg) {
    const std::int64_t last = cfg.last_ball();
    std::vector<std::int32_t> stack;
    std::vector<std::int32_t> out;
    std::int32_t label = 0;
    for (std::int64_t k = 1; k <= last; ++k) {
        if (cfg.occupied(k)) {
            stack.push_back(++label);
        } else if (!stack.empty()) {
            out.push_back(stack.back());
            stack.pop_back();
        }
    }
    while (!stack.empty()) {
        out.push_back(stack.back());
        stack.pop_back();
    }
    return Permutation(std::move(out));
}

Permutation sigma_of_path(const LatticePath& path) {
    if (!path.is_h_restricted())
        throw std::domain_error("sigma_of_path requires an h-restricted Motzkin path");
    // Pair each upstroke with the step at which the path first drops back
    // below the height it reached.
    std::vector<std::pair<std::int64_t, std::int64_t>> open;  // (upstroke number, end index)
    std::vector<std::int32_t> sigma;
    std::int64_t ups = 0;
    for (std::int64_t k = 0; k + 1 < path.length(); ++k) {
        const std::int32_t d = path.at(k + 1) - path.at(k);
        if (d == 1) {
            open.push_back({++ups, k + 1});
            sigma.push_back(0);
        } else if (d == -1) {
            const auto [number, v] = open.back();
            open.pop_back();
            const std::int64_t r = k - v;  // path stays >= height(v) on [v, v+r]
            sigma[static_cast<std::size_t>(number - 1)] =
                static_cast<std::int32_t>(number + r / 2 + 1 - path.at(v));
        }
    }
    return Permutation(std::move(sigma));
}

Permutation sigma_of_forest(const RootedForest& forest) {
    std::vector<std::int32_t> sigma;
    std::int32_t k = 0;
    for (const RootedForest::Node& node : forest.nodes) {
        if (node.parent == -1) continue;
        ++k;
        sigma.push_back(k + node.subtree_size - node.level);
    }
    return Permutation(std::move(sigma));
}

YoungDiagram rs_shape(const Permutation& perm) {
    std::vector<std::vector<std::int32_t>> tab;
    for (std::int32_t x : perm.values()) {
        for (std::size_t r = 0;; ++r) {
            if (r == tab.size()) {
                tab.push_back({x});
                break;
            }
            auto it = std::upper_bound(tab[r].begin(), tab[r].end(), x);
            if (it == tab[r].end()) {
                tab[r].push_back(x);
                break;
            }
            std::swap(*it, x);
        }
    }
    std::vector<std::int64_t> rows;
    for (const auto& row : tab) rows.push_back(static_cast<std::int64_t>(row.size()));
    return YoungDiagram::from_rows(std::move(rows));
}

namespace {

bool contains_pattern(const std::vector<std::int32_t>& v, const std::vector<std::int32_t>& pat,
                      std::vector<std::int32_t>& picked, std::size_t from) {
    const std::size_t k = picked.size();
    if (k == pat.size()) return true;
    for (std::size_t i = from; i + (pat.size() - k) <= v.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) {
            // Chosen values must relate to v[i] the way pat[j] relates to pat[k].
            if ((picked[j] < v[i]) != (pat[j] < pat[k])) ok = false;
        }
        if (!ok) continue;
        picked.push_back(v[i]);
        if (contains_pattern(v, pat, picked, i + 1)) return true;
        picked.pop_back();
    }
    return false;
}

// Longest monotone subsequence, lexicographically first position set; returns
// the chosen positions. `decreasing` selects the direction.
std::vector<std::size_t> longest_monotone_positions(const std::vector<std::int32_t>& v,
                                                    bool decreasing) {
    const std::size_t n = v.size();
    std::vector<std::int32_t> len(n, 1);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool ok = decreasing ? v[j] < v[i] : v[j] > v[i];
            if (ok) len[i] = std::max(len[i], 1 + len[j]);
        }
    std::int32_t best = 0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, len[i]);
    std::vector<std::size_t> positions;
    std::int32_t need = best;
    std::size_t from = 0;
    std::int32_t prev = 0;
    while (need > 0) {
        for (std::size_t i = from; i < n; ++i) {
            const bool ok = positions.empty() || (decreasing ? v[i] < prev : v[i] > prev);
            if (ok && len[i] == need) {
                positions.push_back(i);
                prev = v[i];
                from = i + 1;
                break;
            }
        }
        --need;
    }
    return positions;
}

std::vector<std::int64_t> greedy_profile(std::vector<std::int32_t> v, bool decreasing) {
    std::vector<std::int64_t> profile;
    while (!v.empty()) {
        const std::vector<std::size_t> pos = longest_monotone_positions(v, decreasing);
        profile.push_back(static_cast<std::int64_t>(pos.size()));
        std::vector<std::int32_t> next;
        std::size_t pi = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (pi < pos.size() && pos[pi] == i)
                ++pi;
            else
                next.push_back(v[i]);
        }
        v = std::move(next);
    }
    return profile;
}

}  // namespace

bool avoids(const Permutation& perm, const Permutation& pattern) {
    if (pattern.size() < 2)
        throw std::invalid_argument("avoidance patterns must have length at least 2");
    std::vector<std::int32_t> picked;
    return !contains_pattern(perm.values(), pattern.values(), picked, 0);
}

GreedyShape greedy_lambda_rho(const Permutation& perm) {
    GreedyShape out;
    out.lambda = greedy_profile(perm.values(), true);
    out.rho = greedy_profile(perm.values(), false);
    const YoungDiagram rs = rs_shape(perm);
    out.matches_rs = out.lambda == rs.lambda && out.rho == rs.rho;
    return out;
}

}  // namespace boxball
