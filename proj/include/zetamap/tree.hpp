#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetamap/error.hpp"

namespace zetamap {

/// Rooted tree with an ordered (left-to-right) child list at every node.
/// Size n = number of non-root nodes; the root-only tree has size 0.
///
/// Orientation conventions used throughout this project (these are easy to
/// get backwards and everything downstream depends on them):
///   - sibling_index_from_right (c) counts siblings 1-based from the RIGHT:
///     the rightmost child of a node has c = 1.
///   - breadth order lists nodes by increasing depth, and RIGHT to LEFT
///     within a depth.
///   - the contour walk used by the steep maps is CLOCKWISE: children are
///     visited rightmost first.
///
/// Text encoding: balanced parentheses with the root included, children
/// left to right, so size n = number of '(' minus one.
class PlaneTree {
public:
    /// Root-only tree (n = 0).
    PlaneTree();

    /// Parses "(...)"; throws ParseError with a 1-based position.
    static PlaneTree parse(std::string_view text);

    /// Builds from explicit child lists (left to right); node ids are
    /// 0..children.size()-1 and `root` must be the unique parentless node.
    /// Throws std::logic_error on malformed input.
    static PlaneTree from_children(std::vector<std::vector<int>> children, int root);

    std::string str() const;

    int size() const { return static_cast<int>(children_.size()) - 1; }
    int root() const { return root_; }
    int node_count() const { return static_cast<int>(children_.size()); }

    const std::vector<int>& children(int v) const { return children_[v]; }
    int parent(int v) const { return parent_[v]; }
    int depth(int v) const { return depth_[v]; }
    int arity(int v) const { return static_cast<int>(children_[v].size()); }

    /// Maximal arity m over all nodes, root included.
    int max_arity() const;

    /// 1-based position of v among its siblings counted from the right.
    int sibling_index_from_right(int v) const;

    /// Node count per depth: element l-1 holds the number of nodes at
    /// depth l, for l = 1..max depth.
    std::vector<int> depth_counts() const;

    /// All non-root nodes in breadth order: increasing depth, right to
    /// left within a depth.
    std::vector<int> breadth_order() const;

    bool operator==(const PlaneTree& o) const { return str() == o.str(); }
    bool operator!=(const PlaneTree& o) const { return !(*this == o); }

    /// The unique decomposition of a breadth position k = s_l - r with
    /// 0 <= r < alpha_l: depth l (1-based) and rank r. The node at that
    /// position is the (r+1)-st node of depth l counted from the left.
    struct BreadthOrderIndex {
        int depth;
        int rank;
        bool operator==(const BreadthOrderIndex&) const = default;
    };

    /// Decomposes k in [1, n] against this tree's depth counts.
    BreadthOrderIndex breadth_index(int k) const;

private:
    PlaneTree(std::vector<std::vector<int>> children, std::vector<int> parent, int root);
    void compute_depths();

    std::vector<std::vector<int>> children_;
    std::vector<int> parent_;
    std::vector<int> depth_;
    int root_ = 0;
};

}  // namespace zetamap
