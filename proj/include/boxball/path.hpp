#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boxball/config.hpp"
#include "boxball/young.hpp"

namespace boxball {

// Nearest-neighbor lattice path sampled at integer times. Only the explicit
// prefix is stored; every index past the end reads as the final value, so a
// Motzkin path carries its infinite tail of h-strokes implicitly.
class LatticePath {
  public:
    LatticePath() : h_{0} {}
    explicit LatticePath(std::vector<std::int32_t> heights);

    std::int64_t length() const { return static_cast<std::int64_t>(h_.size()); }
    std::int32_t at(std::int64_t k) const {
        if (k < 0) return 0;
        return k < length() ? h_[static_cast<std::size_t>(k)] : h_.back();
    }
    const std::vector<std::int32_t>& heights() const { return h_; }

    std::int32_t max_height() const;
    std::int64_t rightmost_argmax() const;  // largest explicit index attaining the max

    LatticePath canonical() const;  // trailing constant run collapsed to one sample
    bool operator==(const LatticePath& other) const;
    bool operator!=(const LatticePath& other) const { return !(*this == other); }

    bool starts_at_zero() const { return h_.front() == 0; }
    bool is_motzkin() const;       // starts and ends at 0, never negative
    bool is_h_restricted() const;  // Motzkin with flat steps only at height 0

    std::string serialize() const;  // comma-separated heights
    static LatticePath parse(std::string_view text);

  private:
    std::vector<std::int32_t> h_;
};

struct HillInterval {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool operator==(const HillInterval&) const = default;
};

LatticePath path_of_config(const BoxBallConfig& cfg);
BoxBallConfig config_of_path(const LatticePath& path);  // throws unless h-restricted
BoxBallConfig next_config_of_path(const LatticePath& path);

// Right-to-left reading of a configuration; recovers the previous sweep's
// path whenever the input has a predecessor (and then starts at 0).
LatticePath backward_path(const BoxBallConfig& cfg);

std::vector<HillInterval> hill_intervals(const LatticePath& path);
LatticePath hill_flatten(const LatticePath& path);

LatticePath pivot_excursion(const LatticePath& path, std::int64_t pivot);
LatticePath excursion(const LatticePath& path);

// Sampled real-path variants used by the scaling-limit property tests.
std::vector<double> pivot_excursion(const std::vector<double>& f, std::size_t pivot);
std::vector<double> excursion(const std::vector<double>& f);
std::size_t rightmost_argmax(const std::vector<double>& f);

std::vector<std::int64_t> young_rows(const LatticePath& path);
std::vector<std::int64_t> young_columns(const LatticePath& path);
YoungDiagram young_diagram(const LatticePath& path);

// Single-pass construction of the full diagram: one carrier of state per open
// subexcursion, each closed subexcursion of exact height i adding to row i.
class DiagramScanner {
  public:
    void up() {
        if (depth_ == static_cast<std::int64_t>(stack_.size()))
            stack_.push_back(0);
        ++depth_;
        stack_[static_cast<std::size_t>(depth_ - 1)] = static_cast<std::int32_t>(depth_);
    }
    void down();
    void flat() {}
    std::int64_t height() const { return depth_; }
    void close_all() {
        while (depth_ > 0) down();
    }
    // Row profile so far; index i-1 holds the count for row i.
    const std::vector<std::int64_t>& rows() const { return rows_; }
    YoungDiagram diagram() const;

  private:
    std::vector<std::int32_t> stack_;
    std::vector<std::int64_t> rows_;
    std::int64_t depth_ = 0;
};

YoungDiagram young_diagram_scan(const LatticePath& path);

}  // namespace boxball
