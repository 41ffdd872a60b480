#pragma once

#include "zetamap/dyck.hpp"
#include "zetamap/poset.hpp"
#include "zetamap/tree.hpp"

namespace zetamap {

/// Poset -> tree: the parent of element i is the largest element strictly
/// below i (or the root if none), and children of a node are ordered left
/// to right with decreasing element index.
PlaneTree poset_to_tree(const UnitIntervalPoset& p);

/// One exact rational per non-root node u, written in base m+2 where m is
/// the maximal arity: value = depth(u) plus one base-(m+2) digit per
/// ancestor, the digit being that ancestor's sibling index from the right.
/// Values strictly decrease left to right within a depth; returned sorted
/// ascending. Distinctness of all values is checked on every call.
StartingSet starting_set_of_tree(const PlaneTree& t);

/// Tree -> poset via the starting set above; inverse of poset_to_tree.
/// Output is canonical as produced (cross-checked in debug builds).
UnitIntervalPoset tree_to_poset(const PlaneTree& t);

/// Test oracle: for every node u whose parent v is not the root, the value
/// of v must be the largest value x in the tree's starting set with
/// x + 1 < value(u); for depth-1 nodes no such x may exist. Always true
/// for valid trees.
bool check_parent_condition(const PlaneTree& t);

/// Test oracle: 1 < value(u) - value(parent(u)) < 1 + (m+2)^(1-l) holds
/// exactly for every node u whose parent sits at depth l >= 1.
bool parent_gap_in_bounds(const PlaneTree& t);

/// Tree -> path by the clockwise contour walk (children rightmost first):
/// 'N' the first time an edge is passed, 'E' the second time.
DyckPath tree_to_dyck_steep(const PlaneTree& t);

/// Inverse contour walk: 'N' descends into a new child placed leftmost so
/// far, 'E' ascends.
PlaneTree dyck_to_tree_steep(const DyckPath& d);

/// Tree -> path by north-run lengths: the run at x = 0 is the root arity;
/// the runs of each depth block are the arities of that depth's nodes read
/// left to right (equivalently, run k for k = s_l - r is the arity of the
/// (r+1)-st node of depth l counted from the right).
DyckPath tree_to_dyck_bounce(const PlaneTree& t);

/// Inverse of tree_to_dyck_bounce: north runs are consumed level by level
/// as arities; the run of the single breadth-last node is the one omitted
/// at the end of the path and is always zero.
PlaneTree dyck_to_tree_bounce(const DyckPath& d);

}  // namespace zetamap
