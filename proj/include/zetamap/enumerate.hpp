#pragma once

#include <optional>
#include <vector>

#include "zetamap/dyck.hpp"
#include "zetamap/poset.hpp"
#include "zetamap/tree.hpp"

namespace zetamap {

/// Streams all Dyck paths of size n in lexicographic order of the step
/// string ('E' < 'N'), lazily via a successor computation.
class DyckEnumerator {
public:
    explicit DyckEnumerator(int n);

    std::optional<DyckPath> next();

    /// Pulls up to k paths; fewer (or none) near the end of the stream.
    std::vector<DyckPath> take(std::size_t k);

private:
    bool advance();

    int n_;
    std::string cur_;
    bool fresh_ = true;
    bool done_ = false;
};

/// All plane trees of size n, as contour trees of the path stream.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int n) : inner_(n) {}
    std::optional<PlaneTree> next();

private:
    DyckEnumerator inner_;
};

/// All unit interval posets of size n (canonical, pairwise distinct), as
/// poset images of the tree stream.
class PosetEnumerator {
public:
    explicit PosetEnumerator(int n) : inner_(n) {}
    std::optional<UnitIntervalPoset> next();

private:
    TreeEnumerator inner_;
};

}  // namespace zetamap
