#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetamap/error.hpp"
#include "zetamap/rational.hpp"

namespace zetamap {

/// n-th Catalan number, exact.
BigInt catalan_number(int n);

/// Lattice path of 'N' and 'E' steps from the origin to the diagonal,
/// staying weakly above it. Size n = number of north steps. The empty
/// path is the unique path of size 0. Immutable after construction.
class DyckPath {
public:
    DyckPath() = default;

    /// Parses an 'N'/'E' string; throws ParseError with a 1-based position.
    static DyckPath parse(std::string_view text);

    /// Builds from steps produced internally; throws std::logic_error if the
    /// word is not a valid Dyck path.
    static DyckPath from_steps(std::string steps);

    const std::string& str() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size() / 2); }

    bool operator==(const DyckPath& o) const = default;

private:
    explicit DyckPath(std::string s) : steps_(std::move(s)) {}
    std::string steps_;
};

/// The per-row full-square counts of a Dyck path, characterized by
/// a_1 = 0 and a_i <= a_{i-1} + 1 (entries non-negative).
class AreaVector {
public:
    AreaVector() = default;

    /// Validates the characterization; throws std::invalid_argument.
    explicit AreaVector(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    bool operator==(const AreaVector& o) const = default;

private:
    std::vector<int> entries_;
};

AreaVector area_vector(const DyckPath& d);
DyckPath dyck_from_area(const AreaVector& a);

/// North-run lengths at x = 0 .. n-1 (counts of 'N' before each 'E').
std::vector<int> north_runs(const DyckPath& d);

}  // namespace zetamap
