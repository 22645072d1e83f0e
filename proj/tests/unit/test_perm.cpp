#include <algorithm>
#include <functional>

#include "doctest.h"

#include "boxball/perm.hpp"
#include "helpers.hpp"

using namespace boxball;
using boxball::testing::random_config;

namespace {

BoxBallConfig figure() { return BoxBallConfig::parse("101110110000"); }

// Greene-style oracle: lambda_1 + ... + lambda_k equals the size of the
// largest subset whose induced subsequence has no increasing run longer
// than k; evaluated by exhausting all subsets (m <= ~14).
std::vector<std::int64_t> greene_columns(const std::vector<std::int32_t>& v) {
    const std::size_t m = v.size();
    std::vector<std::int64_t> best(m + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::int32_t> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) sub.push_back(v[i]);
        // Longest increasing subsequence of the subset.
        std::vector<std::int32_t> tails;
        for (const std::int32_t x : sub) {
            auto it = std::lower_bound(tails.begin(), tails.end(), x);
            if (it == tails.end())
                tails.push_back(x);
            else
                *it = x;
        }
        const std::size_t lis = tails.size();
        for (std::size_t k = lis; k <= m; ++k)
            best[k] = std::max(best[k], static_cast<std::int64_t>(sub.size()));
    }
    std::vector<std::int64_t> cols;
    for (std::size_t k = 1; k <= m; ++k) {
        const std::int64_t len = best[k] - best[k - 1];
        if (len == 0) break;
        cols.push_back(len);
    }
    return cols;
}

void enumerate_dyck(std::int64_t n, std::vector<std::int32_t>& h,
                    const std::function<void(const LatticePath&)>& visit) {
    if (static_cast<std::int64_t>(h.size()) == 2 * n + 1) {
        if (h.back() == 0) visit(LatticePath(h));
        return;
    }
    const std::int32_t cur = h.back();
    const std::int64_t remaining = 2 * n + 1 - static_cast<std::int64_t>(h.size());
    if (cur + 1 <= remaining - 1) {
        h.push_back(cur + 1);
        enumerate_dyck(n, h, visit);
        h.pop_back();
    }
    if (cur > 0) {
        h.push_back(cur - 1);
        enumerate_dyck(n, h, visit);
        h.pop_back();
    }
}

}  // namespace

TEST_CASE("permutation basics") {
    const Permutation p = Permutation::parse("1 4 6 5 3 2");
    CHECK(p.size() == 6);
    CHECK(p(2) == 4);
    CHECK(p.inverse().to_string() == "1 6 5 2 4 3");
    CHECK(p.inverse().inverse() == p);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("sigma_of_config") {
    CHECK(sigma_of_config(figure()).to_string() == "1 4 6 5 3 2");
    CHECK(sigma_of_config(BoxBallConfig::from_boxes({1})).to_string() == "1");
    CHECK(sigma_of_config(BoxBallConfig()).size() == 0);
    // Two adjacent balls pop in LIFO order across the gap.
    CHECK(sigma_of_config(BoxBallConfig::from_boxes({1, 2})).to_string() == "2 1");
}

TEST_CASE("sigma_of_path") {
    const LatticePath gamma = path_of_config(figure());
    const Permutation s = sigma_of_path(gamma);
    CHECK(s.to_string() == "1 6 5 2 4 3");
    CHECK(s(3) == 5);
    CHECK(sigma_of_path(LatticePath({0, 1, 0})).to_string() == "1");
}

TEST_CASE("sigma_of_forest") {
    CHECK(sigma_of_forest(forest_of_path(path_of_config(figure()))).to_string() == "1 6 5 2 4 3");
    CHECK(sigma_of_forest(forest_of_path(LatticePath({0, 1, 0}))).to_string() == "1");

    RngStream rng(41, 0);
    for (int it = 0; it < 1000; ++it) {
        BoxBallConfig cfg = random_config(rng, 120, 0.5);
        if (cfg.empty()) cfg.set(1);
        const LatticePath gamma = path_of_config(cfg);
        REQUIRE(sigma_of_forest(forest_of_path(gamma)) == sigma_of_path(gamma));
    }
}

TEST_CASE("the three constructions invert each other") {
    RngStream rng(42, 0);
    for (int it = 0; it < 500; ++it) {
        BoxBallConfig cfg = random_config(rng, 120, 0.5);
        if (cfg.empty()) cfg.set(1);
        REQUIRE(sigma_of_path(path_of_config(cfg)) == sigma_of_config(cfg).inverse());
    }
}

TEST_CASE("rs_shape") {
    const YoungDiagram d = rs_shape(Permutation::parse("1 4 6 5 3 2"));
    CHECK(d.lambda == std::vector<std::int64_t>{4, 1, 1});
    CHECK(d.rho == std::vector<std::int64_t>{3, 1, 1, 1});
    CHECK(rs_shape(Permutation::identity(5)).rho == std::vector<std::int64_t>{5});
    CHECK(rs_shape(Permutation({5, 4, 3, 2, 1})).lambda == std::vector<std::int64_t>{5});
}

TEST_CASE("rs_shape agrees with the Greene oracle") {
    // Exhaustive for length 6, random up to length 10.
    std::vector<std::int32_t> v{1, 2, 3, 4, 5, 6};
    do {
        const YoungDiagram d = rs_shape(Permutation(v));
        REQUIRE(d.lambda == greene_columns(v));
    } while (std::next_permutation(v.begin(), v.end()));

    RngStream rng(43, 0);
    for (int it = 0; it < 200; ++it) {
        std::vector<std::int32_t> w(7 + rng.below(4));
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::int32_t>(i + 1);
        rng.shuffle(w);
        REQUIRE(rs_shape(Permutation(w)).lambda == greene_columns(w));
    }
}

TEST_CASE("the RS shape of sigma equals the path diagram") {
    RngStream rng(44, 0);
    for (int it = 0; it < 500; ++it) {
        BoxBallConfig cfg = random_config(rng, 100, 0.5);
        if (cfg.empty()) cfg.set(1);
        REQUIRE(rs_shape(sigma_of_config(cfg)) == young_diagram_scan(path_of_config(cfg)));
    }
}

TEST_CASE("avoids") {
    CHECK(avoids(Permutation::parse("1 4 6 5 3 2"), Permutation::parse("3 1 2")));
    CHECK(avoids(Permutation::parse("1 6 5 2 4 3"), Permutation::parse("2 3 1")));
    CHECK_FALSE(avoids(Permutation::parse("2 3 1"), Permutation::parse("2 3 1")));
    CHECK_THROWS_AS(avoids(Permutation::identity(3), Permutation::identity(1)),
                    std::invalid_argument);

    RngStream rng(45, 0);
    for (int it = 0; it < 100; ++it) {
        BoxBallConfig cfg = random_config(rng, 60, 0.5);
        if (cfg.empty()) cfg.set(1);
        const Permutation s = sigma_of_config(cfg);
        REQUIRE(avoids(s, Permutation::parse("3 1 2")));
        REQUIRE(avoids(s.inverse(), Permutation::parse("2 3 1")));
    }
}

TEST_CASE("sigma_of_path is a bijection onto 231-avoiders") {
    const std::vector<std::int64_t> catalan{1, 2, 5, 14, 42, 132};
    for (std::int64_t n = 1; n <= 6; ++n) {
        std::vector<std::string> images;
        std::vector<std::int32_t> h{0};
        enumerate_dyck(n, h, [&](const LatticePath& path) {
            const Permutation s = sigma_of_path(path);
            REQUIRE(s.size() == n);
            REQUIRE(avoids(s, Permutation::parse("2 3 1")));
            images.push_back(s.to_string());
        });
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        REQUIRE(static_cast<std::int64_t>(images.size()) ==
                catalan[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("greedy deletion profiles") {
    const GreedyShape g = greedy_lambda_rho(Permutation::parse("1 4 6 5 3 2"));
    CHECK(g.lambda == std::vector<std::int64_t>{4, 1, 1});
    CHECK(g.matches_rs);
    CHECK(greedy_lambda_rho(Permutation::identity(4)).lambda ==
          std::vector<std::int64_t>{1, 1, 1, 1});

    // On stack-sortable permutations the greedy profile matches the RS shape
    // exhaustively through length 7; the flag reports what actually happened.
    std::vector<std::int32_t> h{0};
    std::vector<std::int32_t> start{0};
    enumerate_dyck(7, start, [&](const LatticePath& path) {
        const Permutation s = sigma_of_path(path);
        const GreedyShape gs = greedy_lambda_rho(s);
        const YoungDiagram rs = rs_shape(s);
        REQUIRE(gs.matches_rs == (gs.lambda == rs.lambda && gs.rho == rs.rho));
        REQUIRE(gs.matches_rs);
    });
}
