#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

// Finite-support occupancy sequence on the positive integers. Box k is
// occupied iff bit k-1 of the packed word array is set. All public interfaces
// speak 1-based box indices.
class BoxBallConfig {
  public:
    BoxBallConfig() = default;

    static BoxBallConfig parse(std::string_view text);
    static BoxBallConfig from_boxes(const std::vector<std::int64_t>& boxes);

    bool occupied(std::int64_t box) const;
    void set(std::int64_t box);

    std::int64_t ball_count() const;
    std::int64_t last_ball() const;  // 0 when empty
    bool empty() const { return ball_count() == 0; }

    std::vector<std::int64_t> occupied_boxes() const;

    // '0'/'1' string up to the last ball; empty configuration serializes to "".
    std::string to_string() const;
    std::string to_string(std::int64_t width) const;

    bool operator==(const BoxBallConfig& other) const;
    bool operator!=(const BoxBallConfig& other) const { return !(*this == other); }

    const std::vector<std::uint64_t>& words() const { return words_; }
    static BoxBallConfig from_words(std::vector<std::uint64_t> words);
    void shrink();  // drop trailing zero words

  private:
    std::vector<std::uint64_t> words_;
};

// One carrier sweep over the packed words (the hot kernel).
BoxBallConfig carrier_update(const BoxBallConfig& cfg);

// Same sweep computed by moving each ball, left to right, to the first empty
// box on its right. Slow; kept as an independent route for differential tests.
BoxBallConfig carrier_update_reference(const BoxBallConfig& cfg);

BoxBallConfig evolve(BoxBallConfig cfg, std::int64_t sweeps);

bool is_stable(const BoxBallConfig& cfg);

struct StabilizeResult {
    BoxBallConfig config;
    std::int64_t sweeps = 0;
};

std::int64_t default_sweep_budget(std::int64_t ball_count);

// Runs carrier sweeps until is_stable holds. Exceeding the budget throws
// (budget <= 0 selects the default m^2 + m + 1).
StabilizeResult stabilize(const BoxBallConfig& cfg, std::int64_t max_sweeps = 0);

struct Soliton {
    std::int64_t start = 0;
    std::int64_t length = 0;
    bool operator==(const Soliton&) const = default;
};

// Maximal runs of occupied boxes, left to right (no stability requirement).
std::vector<Soliton> run_list(const BoxBallConfig& cfg);

// Run lengths of a stable configuration; throws on unstable input.
std::vector<std::int64_t> soliton_lengths(const BoxBallConfig& cfg);

}  // namespace boxball
