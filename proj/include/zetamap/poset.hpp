#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zetamap/rational.hpp"

namespace zetamap {

/// Strict partial order on {1..n}, stored transitively closed as one
/// successor bitmask per element (so n is capped at 64, which is far
/// beyond anything enumerable here). Immutable after construction.
class Poset {
public:
    Poset() = default;

    /// Pairs are 1-based (i, j) meaning i < j in the order, and must
    /// already be transitively closed. Throws std::invalid_argument on
    /// anything that is not a strict partial order.
    Poset(int n, const std::vector<std::pair<int, int>>& pairs);

    /// Trusted constructor from 0-indexed successor masks; validates the
    /// order axioms only.
    static Poset from_succ_masks(int n, std::vector<std::uint64_t> succ);

    int n() const { return n_; }

    /// 1-based strict comparison.
    bool less(int i, int j) const { return (succ_[i - 1] >> (j - 1)) & 1u; }
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

    /// 0-indexed masks: bit j of succ_mask(i) means element i+1 < j+1.
    std::uint64_t succ_mask(int i) const { return succ_[i]; }
    std::uint64_t pred_mask(int i) const;

    int up_size(int i) const;    // 0-indexed
    int down_size(int i) const;  // 0-indexed

    /// All related pairs, 1-based, sorted lexicographically.
    std::vector<std::pair<int, int>> relation_pairs() const;

    bool operator==(const Poset& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> succ_;
};

/// No four elements induce a 3-chain plus an element incomparable to all
/// of it. Brute-force over 4-subsets.
bool is_three_plus_one_free(const Poset& p);

/// No four elements induce two disjoint 2-chains with no cross relations.
/// Brute-force over 4-subsets.
bool is_two_plus_two_free(const Poset& p);

bool is_unit_interval(const Poset& p);

/// Unit interval poset in the canonical labeling: elements sorted by
/// (down-set size ascending, up-set size descending), matching the order
/// of interval starting points. Immutable after construction.
class UnitIntervalPoset {
public:
    UnitIntervalPoset() = default;

    /// Validates everything: order axioms, canonical labeling, and the
    /// (3+1)/(2+2) freeness characterization.
    static UnitIntervalPoset from_relations(int n, const std::vector<std::pair<int, int>>& pairs);

    /// For values produced by the maps in this library, which are canonical
    /// by construction. Fully cross-checked in debug builds.
    static UnitIntervalPoset from_canonical_masks(int n, std::vector<std::uint64_t> succ);

    /// Strict JSON schema: {"n": int, "relations": [[i,j],...]} with 1-based
    /// labels, transitively closed, pairs sorted lexicographically.
    static UnitIntervalPoset from_json(const nlohmann::json& j);
    static UnitIntervalPoset parse(std::string_view text);

    nlohmann::json to_json() const;
    std::string encode() const;  // compact JSON

    const Poset& order() const { return order_; }
    int n() const { return order_.n(); }
    bool less(int i, int j) const { return order_.less(i, j); }

    bool operator==(const UnitIntervalPoset& o) const = default;

private:
    explicit UnitIntervalPoset(Poset p) : order_(std::move(p)) {}
    friend UnitIntervalPoset canonical_form(const Poset& p);
    Poset order_;
};

/// Relabels a unit interval order into canonical form; isomorphic inputs
/// yield identical outputs. Throws std::invalid_argument if the input is
/// not a unit interval order.
UnitIntervalPoset canonical_form(const Poset& p);

bool posets_isomorphic(const Poset& a, const Poset& b);

/// Strictly increasing exact rationals; the interval starting points
/// realizing a unit interval poset.
class StartingSet {
public:
    StartingSet() = default;
    explicit StartingSet(std::vector<Rational> points);

    const std::vector<Rational>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }

private:
    std::vector<Rational> points_;
};

/// The order i < j iff x_i + 1 < x_j. Boundary coincidences x_i + 1 = x_j
/// yield incomparability (the comparison is strict).
UnitIntervalPoset poset_from_starting_set(const StartingSet& s);

}  // namespace zetamap
