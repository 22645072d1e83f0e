#include <algorithm>

#include "doctest.h"

#include "boxball/config.hpp"
#include "boxball/path.hpp"
#include "helpers.hpp"

using namespace boxball;
using boxball::testing::random_config;

namespace {
const std::vector<std::int64_t> kIntro{2, 3, 5, 6, 7, 11};
}

TEST_CASE("parse_config") {
    CHECK(BoxBallConfig::parse("0110111000100").occupied_boxes() == kIntro);
    CHECK(BoxBallConfig::parse("").occupied_boxes().empty());
    CHECK(BoxBallConfig::parse("101110110000").occupied_boxes() ==
          std::vector<std::int64_t>{1, 3, 4, 5, 7, 8});
    CHECK_THROWS_WITH_AS(BoxBallConfig::parse("0110x1"), doctest::Contains("position 5"),
                         std::invalid_argument);
}

TEST_CASE("serialization round trip drops trailing zeros") {
    const BoxBallConfig cfg = BoxBallConfig::parse("0110111000100");
    CHECK(cfg.to_string() == "01101110001");
    CHECK(BoxBallConfig::parse(cfg.to_string()) == cfg);
    CHECK(cfg.to_string(13) == "0110111000100");
    CHECK(BoxBallConfig().to_string() == "");
}

TEST_CASE("carrier_update golden rows") {
    const BoxBallConfig s0 = BoxBallConfig::from_boxes(kIntro);
    const BoxBallConfig s1 = carrier_update(s0);
    CHECK(s1.occupied_boxes() == std::vector<std::int64_t>{4, 8, 9, 10, 12, 13});
    CHECK(carrier_update(s1).occupied_boxes() ==
          std::vector<std::int64_t>{5, 11, 14, 15, 16, 17});
    CHECK(carrier_update(BoxBallConfig()).empty());
}

TEST_CASE("evolve") {
    const BoxBallConfig s0 = BoxBallConfig::from_boxes(kIntro);
    CHECK(evolve(s0, 3).occupied_boxes() == std::vector<std::int64_t>{6, 12, 18, 19, 20, 21});
    CHECK(evolve(s0, 0) == s0);
    CHECK(evolve(BoxBallConfig::from_boxes({1}), 5).occupied_boxes() ==
          std::vector<std::int64_t>{6});
}

TEST_CASE("is_stable") {
    CHECK(is_stable(BoxBallConfig::from_boxes({6, 12, 18, 19, 20, 21})));
    CHECK_FALSE(is_stable(BoxBallConfig::from_boxes(kIntro)));
    CHECK(is_stable(BoxBallConfig()));
    // Nondecreasing lengths but the gap is too small to stop interaction.
    CHECK_FALSE(is_stable(BoxBallConfig::parse("110110")));
}

TEST_CASE("stabilize") {
    // The sweep s=2 configuration already consists of non-interacting
    // solitons (lengths 1,1,4 with gaps 5,2), so stabilization ends there;
    // one more free sweep reaches the s=3 row.
    const StabilizeResult r = stabilize(BoxBallConfig::from_boxes(kIntro));
    CHECK(r.sweeps == 2);
    CHECK(r.config.occupied_boxes() == std::vector<std::int64_t>{5, 11, 14, 15, 16, 17});
    CHECK(carrier_update(r.config).occupied_boxes() ==
          std::vector<std::int64_t>{6, 12, 18, 19, 20, 21});

    const StabilizeResult empty = stabilize(BoxBallConfig());
    CHECK(empty.sweeps == 0);

    const StabilizeResult small = stabilize(BoxBallConfig::from_boxes({1, 2, 4}));
    std::vector<std::int64_t> lengths = soliton_lengths(small.config);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    CHECK(lengths == young_columns(path_of_config(BoxBallConfig::from_boxes({1, 2, 4}))));

    CHECK_THROWS_AS(stabilize(BoxBallConfig::from_boxes(kIntro), 1), std::runtime_error);
}

TEST_CASE("soliton_lengths") {
    CHECK(soliton_lengths(BoxBallConfig::from_boxes({6, 12, 18, 19, 20, 21})) ==
          std::vector<std::int64_t>{1, 1, 4});
    CHECK(soliton_lengths(BoxBallConfig()).empty());
    CHECK_THROWS_AS(soliton_lengths(BoxBallConfig::from_boxes(kIntro)), std::invalid_argument);

    const BoxBallConfig cfg = BoxBallConfig::parse("101110110000");
    std::vector<std::int64_t> lengths = soliton_lengths(stabilize(cfg).config);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    CHECK(lengths == std::vector<std::int64_t>{4, 1, 1});
    CHECK(lengths == young_columns(path_of_config(cfg)));
}

TEST_CASE("sweep kernel word paths match the reference") {
    // Long solid runs exercise the all-ones-word and deep-carrier paths.
    std::vector<std::string> cases;
    cases.push_back(std::string(200, '1'));
    cases.push_back(std::string(64, '1'));
    cases.push_back(std::string(63, '1') + "0" + std::string(65, '1'));
    cases.push_back("01" + std::string(128, '1') + std::string(10, '0') + "111");
    cases.push_back(std::string(64, '0') + std::string(64, '1'));
    std::string fence;
    for (int i = 0; i < 100; ++i) fence += "10";
    cases.push_back(fence);
    for (const std::string& text : cases) {
        const BoxBallConfig cfg = BoxBallConfig::parse(text);
        const BoxBallConfig fast = carrier_update(cfg);
        REQUIRE(fast == carrier_update_reference(cfg));
        REQUIRE(fast == next_config_of_path(path_of_config(cfg)));
        REQUIRE(fast.ball_count() == cfg.ball_count());
    }
}

TEST_CASE("ball count is conserved and kernels agree") {
    RngStream rng(101, 0);
    for (int it = 0; it < 500; ++it) {
        const double p = 0.2 + 0.6 * rng.next_double();
        const BoxBallConfig cfg = random_config(rng, 300, p);
        const BoxBallConfig fast = carrier_update(cfg);
        CHECK(fast.ball_count() == cfg.ball_count());
        REQUIRE(fast == carrier_update_reference(cfg));
    }
}

TEST_CASE("stability is absorbing and runs shift by their own length") {
    RngStream rng(202, 0);
    for (int it = 0; it < 200; ++it) {
        const BoxBallConfig cfg = random_config(rng, 120, 0.45);
        const BoxBallConfig stable = stabilize(cfg).config;
        const BoxBallConfig next = carrier_update(stable);
        REQUIRE(is_stable(next));
        const std::vector<Soliton> before = run_list(stable);
        const std::vector<Soliton> after = run_list(next);
        REQUIRE(before.size() == after.size());
        for (std::size_t i = 0; i < before.size(); ++i) {
            CHECK(after[i].length == before[i].length);
            CHECK(after[i].start == before[i].start + before[i].length);
        }
    }
}

TEST_CASE("diagram is invariant under the update until stabilization") {
    RngStream rng(303, 0);
    for (int it = 0; it < 60; ++it) {
        BoxBallConfig cfg = random_config(rng, 200, 0.5);
        const YoungDiagram d0 = young_diagram_scan(path_of_config(cfg));
        int guard = 0;
        while (!is_stable(cfg)) {
            cfg = carrier_update(cfg);
            REQUIRE(young_diagram_scan(path_of_config(cfg)) == d0);
            REQUIRE(++guard < 100000);
        }
    }
}

TEST_CASE("sorted soliton lengths equal the path columns") {
    RngStream rng(404, 0);
    for (int it = 0; it < 100; ++it) {
        const BoxBallConfig cfg = random_config(rng, 150, 0.5);
        std::vector<std::int64_t> lengths = soliton_lengths(stabilize(cfg).config);
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        REQUIRE(lengths == young_columns(path_of_config(cfg)));
    }
}
