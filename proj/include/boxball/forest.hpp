#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxball/path.hpp"
#include "boxball/young.hpp"

namespace boxball {

// Ordered rooted forest with nodes stored in depth-first discovery order.
// First-child/next-sibling links plus cached levels and subtree sizes give
// O(1) access to everything the permutation map and the lopping operator need.
class RootedForest {
  public:
    struct Node {
        std::int32_t parent = -1;  // -1 for roots
        std::int32_t first_child = -1;
        std::int32_t next_sibling = -1;
        std::int32_t level = 0;
        std::int32_t subtree_size = 1;
    };

    std::vector<Node> nodes;
    std::vector<std::int32_t> roots;

    std::int64_t node_count() const { return static_cast<std::int64_t>(nodes.size()); }
    std::int64_t tree_count() const { return static_cast<std::int64_t>(roots.size()); }
    bool empty() const { return nodes.empty(); }

    std::int64_t leaf_count() const;  // childless non-root nodes
    std::int32_t max_level() const;

    // Balanced parentheses per tree, trees separated by single spaces.
    std::string serialize() const;

    bool operator==(const RootedForest& other) const {
        return serialize() == other.serialize();
    }
    bool operator!=(const RootedForest& other) const { return !(*this == other); }

    void finalize();  // recompute subtree sizes and links from parent/level data
};

// Collapses a Motzkin path to its rooted forest: equal-height vertices with
// the path staying at or above that height in between are identified, and
// maximal stretches free of height-0 flat steps become the individual trees.
RootedForest forest_of_path(const LatticePath& path);

// Depth-first level sequence. Height-0 h-strokes are not recoverable from a
// forest, so this returns the canonical path with zero-runs collapsed.
LatticePath contour(const RootedForest& forest);

// Deletes all leaves; trees reduced to a bare root are dropped.
RootedForest trim(const RootedForest& forest);

// Detaches the path from the root to the rightmost deepest node and regroups
// the remaining bushes, matching what the excursion operator does to the
// contour. Single-node trees present in the input are preserved.
RootedForest lop(const RootedForest& forest);

YoungDiagram young_from_forest(const RootedForest& forest);

}  // namespace boxball
