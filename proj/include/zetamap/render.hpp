#pragma once

#include <string>

#include "zetamap/dyck.hpp"
#include "zetamap/tree.hpp"

namespace zetamap {

/// ASCII drawing of a path on the unit grid: '|' and '_' for the path,
/// '.' marking the diagonal. Empty for the size-0 path.
std::string render_dyck(const DyckPath& d);

/// One '*' per node, indented two spaces per depth, children top to
/// bottom in left-to-right order.
std::string render_tree(const PlaneTree& t);

}  // namespace zetamap
