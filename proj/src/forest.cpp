#include "boxball/forest.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxball {

std::int64_t RootedForest::leaf_count() const {
    std::int64_t leaves = 0;
    for (const Node& n : nodes)
        if (n.parent != -1 && n.first_child == -1) ++leaves;
    return leaves;
}

std::int32_t RootedForest::max_level() const {
    std::int32_t m = 0;
    for (const Node& n : nodes) m = std::max(m, n.level);
    return m;
}

std::string RootedForest::serialize() const {
    std::string out;
    for (std::size_t r = 0; r < roots.size(); ++r) {
        if (r) out += ' ';
        // Iterative parenthesization of the tree rooted at roots[r].
        std::vector<std::pair<std::int32_t, bool>> work;  // (node, closing?)
        work.push_back({roots[r], false});
        while (!work.empty()) {
            auto [idx, closing] = work.back();
            work.pop_back();
            if (closing) {
                out += ')';
                continue;
            }
            out += '(';
            work.push_back({idx, true});
            std::vector<std::int32_t> kids;
            for (std::int32_t c = nodes[static_cast<std::size_t>(idx)].first_child; c != -1;
                 c = nodes[static_cast<std::size_t>(c)].next_sibling)
                kids.push_back(c);
            for (std::size_t i = kids.size(); i-- > 0;) work.push_back({kids[i], false});
        }
    }
    return out;
}

void RootedForest::finalize() {
    for (Node& n : nodes) {
        n.first_child = -1;
        n.next_sibling = -1;
        n.subtree_size = 1;
    }
    std::vector<std::int32_t> last_child(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::int32_t p = nodes[i].parent;
        if (p == -1) continue;
        if (nodes[static_cast<std::size_t>(p)].first_child == -1)
            nodes[static_cast<std::size_t>(p)].first_child = static_cast<std::int32_t>(i);
        else
            nodes[static_cast<std::size_t>(last_child[static_cast<std::size_t>(p)])].next_sibling =
                static_cast<std::int32_t>(i);
        last_child[static_cast<std::size_t>(p)] = static_cast<std::int32_t>(i);
    }
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const std::int32_t p = nodes[i].parent;
        if (p != -1) nodes[static_cast<std::size_t>(p)].subtree_size += nodes[i].subtree_size;
    }
}

RootedForest forest_of_path(const LatticePath& path) {
    if (!path.is_motzkin()) throw std::domain_error("forest_of_path requires a Motzkin path");
    RootedForest f;
    std::vector<std::int32_t> stack;  // open nodes at levels 1..depth
    for (std::int64_t k = 0; k + 1 < path.length(); ++k) {
        const std::int32_t h = path.at(k);
        const std::int32_t d = path.at(k + 1) - h;
        if (d == 1) {
            std::int32_t parent;
            if (h == 0) {
                // Each proper excursion becomes its own tree.
                parent = static_cast<std::int32_t>(f.nodes.size());
                f.nodes.push_back({-1, -1, -1, 0, 1});
                f.roots.push_back(parent);
            } else {
                parent = stack.back();
            }
            stack.push_back(static_cast<std::int32_t>(f.nodes.size()));
            f.nodes.push_back({parent, -1, -1, h + 1, 1});
        } else if (d == -1) {
            stack.pop_back();
        }
    }
    f.finalize();
    return f;
}

LatticePath contour(const RootedForest& forest) {
    std::vector<std::int32_t> h{0};
    for (const std::int32_t root : forest.roots) {
        std::vector<std::pair<std::int32_t, bool>> work{{root, false}};
        while (!work.empty()) {
            auto [idx, closing] = work.back();
            work.pop_back();
            const RootedForest::Node& n = forest.nodes[static_cast<std::size_t>(idx)];
            if (closing) {
                if (n.parent != -1)
                    h.push_back(forest.nodes[static_cast<std::size_t>(n.parent)].level);
                continue;
            }
            if (n.parent != -1) h.push_back(n.level);
            work.push_back({idx, true});
            std::vector<std::int32_t> kids;
            for (std::int32_t c = n.first_child; c != -1;
                 c = forest.nodes[static_cast<std::size_t>(c)].next_sibling)
                kids.push_back(c);
            for (std::size_t i = kids.size(); i-- > 0;) work.push_back({kids[i], false});
        }
    }
    return LatticePath(std::move(h));
}

RootedForest trim(const RootedForest& forest) {
    const std::size_t n = forest.nodes.size();
    std::vector<char> keep(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const RootedForest::Node& node = forest.nodes[i];
        if (node.first_child == -1) continue;  // leaf or bare root
        if (node.parent != -1) {
            keep[i] = 1;
            continue;
        }
        // Roots survive only when some child is internal.
        for (std::int32_t c = node.first_child; c != -1;
             c = forest.nodes[static_cast<std::size_t>(c)].next_sibling)
            if (forest.nodes[static_cast<std::size_t>(c)].first_child != -1) {
                keep[i] = 1;
                break;
            }
    }
    RootedForest out;
    std::vector<std::int32_t> remap(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        remap[i] = static_cast<std::int32_t>(out.nodes.size());
        const RootedForest::Node& node = forest.nodes[i];
        const std::int32_t p = node.parent == -1 ? -1 : remap[static_cast<std::size_t>(node.parent)];
        out.nodes.push_back({p, -1, -1, node.level, 1});
        if (p == -1) out.roots.push_back(remap[i]);
    }
    out.finalize();
    return out;
}

namespace {

// Appends the subtree rooted at `src` with its levels shifted so that the
// copied root sits at level `base`, under parent `parent`.
void copy_subtree(const RootedForest& in, std::int32_t src, std::int32_t parent,
                  std::int32_t base, RootedForest& out) {
    const std::int32_t shift = base - in.nodes[static_cast<std::size_t>(src)].level;
    const std::int32_t begin = src;
    const std::int32_t end = src + in.nodes[static_cast<std::size_t>(src)].subtree_size;
    std::vector<std::int32_t> remap(static_cast<std::size_t>(end - begin), -1);
    for (std::int32_t i = begin; i < end; ++i) {
        const RootedForest::Node& node = in.nodes[static_cast<std::size_t>(i)];
        const std::int32_t idx = static_cast<std::int32_t>(out.nodes.size());
        remap[static_cast<std::size_t>(i - begin)] = idx;
        std::int32_t p;
        if (i == begin)
            p = parent;
        else
            p = remap[static_cast<std::size_t>(node.parent - begin)];
        out.nodes.push_back({p, -1, -1, node.level + shift, 1});
        if (p == -1) out.roots.push_back(idx);
    }
}

}  // namespace

RootedForest lop(const RootedForest& forest) {
    if (forest.empty() || forest.max_level() == 0) {
        RootedForest copy = forest;
        return copy;
    }
    const std::int32_t top = forest.max_level();
    std::int32_t vm = -1;
    for (std::size_t i = 0; i < forest.nodes.size(); ++i)
        if (forest.nodes[i].level == top) vm = static_cast<std::int32_t>(i);

    // Root-to-vm chain.
    std::vector<std::int32_t> gamma;
    for (std::int32_t v = vm; v != -1; v = forest.nodes[static_cast<std::size_t>(v)].parent)
        gamma.push_back(v);
    std::reverse(gamma.begin(), gamma.end());
    const std::int32_t tree_root = gamma.front();

    RootedForest out;
    // Trees left of the split tree.
    for (const std::int32_t r : forest.roots) {
        if (r == tree_root) break;
        copy_subtree(forest, r, -1, 0, out);
    }
    // Descending the chain: every bush attached before the chain child becomes
    // its own tree under a fresh root, exactly as the excursion operator
    // leaves one proper excursion per bush.
    for (std::size_t i = 0; i + 1 < gamma.size(); ++i) {
        const std::int32_t u = gamma[i];
        const std::int32_t next = gamma[i + 1];
        for (std::int32_t c = forest.nodes[static_cast<std::size_t>(u)].first_child;
             c != -1 && c != next; c = forest.nodes[static_cast<std::size_t>(c)].next_sibling) {
            const std::int32_t fresh = static_cast<std::int32_t>(out.nodes.size());
            out.nodes.push_back({-1, -1, -1, 0, 1});
            out.roots.push_back(fresh);
            copy_subtree(forest, c, fresh, 1, out);
        }
    }
    // Climbing back: bushes attached after the chain child, deepest level first.
    for (std::size_t i = gamma.size() - 1; i-- > 0;) {
        const std::int32_t u = gamma[i];
        const std::int32_t next = gamma[i + 1];
        bool past = false;
        for (std::int32_t c = forest.nodes[static_cast<std::size_t>(u)].first_child; c != -1;
             c = forest.nodes[static_cast<std::size_t>(c)].next_sibling) {
            if (c == next) {
                past = true;
                continue;
            }
            if (!past) continue;
            const std::int32_t fresh = static_cast<std::int32_t>(out.nodes.size());
            out.nodes.push_back({-1, -1, -1, 0, 1});
            out.roots.push_back(fresh);
            copy_subtree(forest, c, fresh, 1, out);
        }
    }
    // Trees right of the split tree.
    bool seen = false;
    for (const std::int32_t r : forest.roots) {
        if (r == tree_root) {
            seen = true;
            continue;
        }
        if (seen) copy_subtree(forest, r, -1, 0, out);
    }
    out.finalize();
    return out;
}

YoungDiagram young_from_forest(const RootedForest& forest) {
    std::vector<std::int64_t> rows;
    for (RootedForest f = forest; !f.empty();) {
        const std::int64_t leaves = f.leaf_count();
        if (leaves == 0) break;  // only bare roots remain
        rows.push_back(leaves);
        f = trim(f);
    }
    std::vector<std::int64_t> cols;
    const std::int64_t total = forest.leaf_count();
    RootedForest f = forest;
    for (std::int64_t j = 0; j < total; ++j) {
        const std::int32_t top = f.max_level();
        if (top < 1) throw std::logic_error("columns remain but the forest is flat");
        cols.push_back(top);
        RootedForest next = lop(f);
        if (next.leaf_count() != f.leaf_count() - 1)
            throw std::logic_error("lop did not remove exactly one leaf");
        f = std::move(next);
    }
    if (f.max_level() != 0) throw std::logic_error("columns exhausted but forest has height");
    return YoungDiagram::checked(std::move(cols), std::move(rows));
}

}  // namespace boxball
