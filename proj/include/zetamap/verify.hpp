#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zetamap {

/// One failing object of a law sweep, replayable through the CLI.
struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;

    bool operator==(const Counterexample&) const = default;
};

/// Result of sweeping one law over all objects of one size.
struct LawReport {
    std::string law;
    int n = 0;
    std::int64_t checked = 0;
    std::vector<Counterexample> counterexamples;
    std::int64_t millis = 0;

    bool ok() const { return counterexamples.empty(); }
    nlohmann::json to_json() const;
};

/// Deliberately wrong map variants, used to confirm that every law sweep
/// actually detects convention mistakes (mutation sensitivity).
enum class Mutant {
    none,
    contour_left_to_right,     // contour walk visits children leftmost first
    breadth_left_to_right,     // depth blocks of the level path read right to left
    sibling_order_increasing,  // poset_to_tree orders children by increasing index
    psi_chain_rule_only,       // psi keeps only the a_i + 1 = a_j rule
    oracle_scan_mirror,        // classical oracle forced to a mirrored scan direction
    enumerate_duplicate_first, // poset stream repeats its first object at the end
};

struct SweepOptions {
    int jobs = 0;  // 0 = all hardware threads, 1 = serial reference sweep
    Mutant mutant = Mutant::none;
};

/// Law identifiers accepted by verify_law, in canonical order:
///   main            phi(psi(D)) = zeta(D) over all paths
///   poset-roundtrip tree->poset->tree and poset->tree->poset identities
///   phi-bounce      phi of the tree's poset = the tree's level path
///   psi-steep       psi(D) = poset of the contour tree of D
///   zeta-oracle     zeta = calibrated classical oracle
///   psi-valid       psi(D) is a canonical unit interval poset
///   count           poset stream has catalan(n) distinct members
const std::vector<std::string>& law_ids();

/// Sweeps one law over every object of size n, collecting all
/// counterexamples in enumeration order. The report is byte-identical
/// (except millis) for any worker count. Throws std::invalid_argument for
/// an unknown law.
LawReport verify_law(std::string_view law, int n, const SweepOptions& opts = {});

/// Every law for every size 1..n_max (size 0 is vacuous); reports ordered
/// law-major.
std::vector<LawReport> verify_all(int n_max, const SweepOptions& opts = {});

bool all_ok(const std::vector<LawReport>& reports);

}  // namespace zetamap
