#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boxball/config.hpp"
#include "boxball/forest.hpp"
#include "boxball/path.hpp"
#include "boxball/young.hpp"

namespace boxball {

// Permutation of {1, ..., m} in one-line notation.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<std::int32_t> values);  // validates bijectivity

    std::int64_t size() const { return static_cast<std::int64_t>(v_.size()); }
    std::int32_t operator()(std::int64_t k) const { return v_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<std::int32_t>& values() const { return v_; }

    Permutation inverse() const;

    std::string to_string() const;  // space-separated one-line notation
    static Permutation parse(std::string_view text);
    static Permutation identity(std::int64_t m);

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<std::int32_t> v_;
};

// Stack labels after one sweep: push at every ball, pop into every empty box.
// The result is 312-avoiding; the empty configuration maps to the empty
// permutation.
Permutation sigma_of_config(const BoxBallConfig& cfg);

// Direct formula on an h-restricted Motzkin path; inverse of sigma_of_config
// on the corresponding configuration, always 231-avoiding.
Permutation sigma_of_path(const LatticePath& path);

// sigma(k) = k + subtree size of the k-th non-root node - its level.
Permutation sigma_of_forest(const RootedForest& forest);

// Shape of the Robinson-Schensted insertion tableau (shape only).
YoungDiagram rs_shape(const Permutation& perm);

bool avoids(const Permutation& perm, const Permutation& pattern);

struct GreedyShape {
    std::vector<std::int64_t> lambda;
    std::vector<std::int64_t> rho;
    bool matches_rs = false;
};

// Columns by repeatedly deleting a longest decreasing subsequence (rows with
// increasing ones), taking the lexicographically first position set among
// ties. Reports whether the result agrees with rs_shape.
GreedyShape greedy_lambda_rho(const Permutation& perm);

}  // namespace boxball
