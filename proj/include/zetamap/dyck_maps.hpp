#pragma once

#include <stdexcept>
#include <vector>

#include "zetamap/dyck.hpp"
#include "zetamap/poset.hpp"

namespace zetamap {

/// Poset -> path. Order-theoretic form: the number of north steps before
/// the k-th east step is n minus the up-set size of element k. Equals the
/// merge construction below for every realizing starting set.
DyckPath phi(const UnitIntervalPoset& p);

/// The sorted union of a starting set S and its unit shift S+1, each value
/// tagged with its origin. Requires the two sets to be disjoint.
class MergedSequence {
public:
    struct Entry {
        Rational value;
        bool is_start;  // true: from S, false: from S+1
    };

    /// Throws std::invalid_argument if S and S+1 intersect.
    static MergedSequence build(const StartingSet& s);

    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

/// Literal merge construction of phi from an explicit starting set:
/// 'N' for values from S, 'E' for values from S+1. Rejects sets that do
/// not realize p or that intersect their own shift.
DyckPath phi_from_starting_set(const UnitIntervalPoset& p, const StartingSet& s);

/// Path -> poset from the area vector: i < j iff a_i + 2 <= a_j, or
/// a_i + 1 = a_j with i < j. Returned in canonical form.
UnitIntervalPoset psi(const DyckPath& d);

/// Inverse of psi, computed as the contour path of the poset's tree.
DyckPath psi_inverse(const UnitIntervalPoset& p);

/// The zeta map: level-arity path of the contour tree of d.
DyckPath zeta(const DyckPath& d);

/// Raised when no supported area-word scanning convention reproduces zeta
/// on the calibration sizes.
class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Independent implementation of the zeta map by diagonal scanning of the
/// area word. Several scanning conventions are supported; construction
/// calibrates against zeta on all paths of size <= 4 and freezes the first
/// convention that agrees everywhere.
class ZetaOracle {
public:
    enum class Convention {
        // for d = 0, 1, ...: scan the entries equal to d or d-1 in word
        // order, emitting 'N' for a d and 'E' for a d-1
        plain_left_to_right,
        plain_right_to_left,
        // blocks anchored at the (d-1)-entries taken right to left, each
        // anchor's 'E' preceding the 'N's of the d-entries that follow it
        grouped_right_to_left,
        // any of the above composed with reverse-complement of the result
        plain_left_to_right_reversed,
        plain_right_to_left_reversed,
        grouped_right_to_left_reversed,
    };

    /// Evaluates one convention directly (no calibration).
    static DyckPath apply(Convention c, const DyckPath& d);

    /// All supported conventions, in calibration order.
    static const std::vector<Convention>& conventions();

    /// Calibrated oracle; throws CalibrationError if nothing matches.
    static const ZetaOracle& calibrated();

    DyckPath operator()(const DyckPath& d) const { return apply(convention_, d); }
    Convention convention() const { return convention_; }

private:
    explicit ZetaOracle(Convention c) : convention_(c) {}
    Convention convention_;
};

/// calibrated()(d)
DyckPath zeta_classical(const DyckPath& d);

}  // namespace zetamap
