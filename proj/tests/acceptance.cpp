// Acceptance suite: exhaustively certifies every law of the library at
// desk scale and prints one pass/fail line per criterion. Exit status is
// the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zetamap/dyck_maps.hpp"
#include "zetamap/enumerate.hpp"
#include "zetamap/tree_maps.hpp"
#include "zetamap/verify.hpp"

using namespace zetamap;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail = "") {
    if (!ok) ++failures;
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

bool laws_hold(const std::string& law, int n_lo, int n_hi, const SweepOptions& opts,
               std::int64_t& total, std::int64_t& millis) {
    bool ok = true;
    for (int n = n_lo; n <= n_hi; ++n) {
        LawReport r = verify_law(law, n, opts);
        ok = ok && r.ok();
        total += r.checked;
        millis += r.millis;
    }
    return ok;
}

}  // namespace

int main() {
    SweepOptions parallel;  // all hardware threads
    SweepOptions serial;
    serial.jobs = 1;

    {
        // 1: phi(psi(D)) equals zeta(D) step for step, every path, n <= 12,
        //    single-threaded within its runtime budget
        std::int64_t total = 0, millis = 0;
        bool ok = laws_hold("main", 1, 12, serial, total, millis);
        bool in_budget = millis < 5 * 60 * 1000;
        report(1, ok && in_budget, "phi . psi = zeta exactly on all paths, n <= 12",
               std::to_string(total) + " paths in " + std::to_string(millis) +
                   " ms single-threaded");
    }

    {
        // 2: tree->poset->tree and poset->tree->poset are identities, n <= 12
        std::int64_t total = 0, millis = 0;
        bool ok = laws_hold("poset-roundtrip", 1, 12, parallel, total, millis);
        report(2, ok, "poset/tree bijections are mutually inverse, n <= 12",
               std::to_string(total) + " trees");
    }

    {
        // 3: phi of a tree's poset is the tree's level path, and psi is the
        //    poset of the contour tree, n <= 12
        std::int64_t total = 0, millis = 0;
        bool ok = laws_hold("phi-bounce", 1, 12, parallel, total, millis) &&
                  laws_hold("psi-steep", 1, 12, parallel, total, millis);
        report(3, ok, "phi and psi factor through the tree maps, n <= 12",
               std::to_string(total) + " objects");
    }

    {
        // 4: exactly catalan(n) pairwise non-isomorphic posets; distinct
        //    canonical encodings to n = 10, pairwise isomorphism to n = 8
        std::int64_t total = 0, millis = 0;
        bool ok = laws_hold("count", 1, 10, serial, total, millis);
        for (int n = 1; n <= 8 && ok; ++n) {
            std::vector<UnitIntervalPoset> posets;
            PosetEnumerator en(n);
            while (auto p = en.next()) posets.push_back(*p);
            for (std::size_t i = 0; i < posets.size() && ok; ++i)
                for (std::size_t j = i + 1; j < posets.size() && ok; ++j)
                    ok = !posets_isomorphic(posets[i].order(), posets[j].order());
        }
        report(4, ok, "catalan(n) pairwise non-isomorphic posets (n <= 10, pairwise n <= 8)",
               std::to_string(total) + " posets");
    }

    {
        // 5: psi images pass the brute-force 4-subset freeness checks, n <= 10
        std::int64_t total = 0, millis = 0;
        bool ok = laws_hold("psi-valid", 1, 10, parallel, total, millis);
        report(5, ok, "psi images are (3+1)- and (2+2)-free, n <= 10",
               std::to_string(total) + " paths");
    }

    {
        // 6: a depth-3 node with right-sibling indices (3,2,1) under maximal
        //    arity 4 receives exactly 769/216
        PlaneTree t = PlaneTree::parse("(()((())())()())");
        bool shape_ok = t.max_arity() == 4;
        const Rational expected = make_rational(769, 216);
        bool found = false;
        for (const auto& x : starting_set_of_tree(t).points()) found = found || x == expected;
        report(6, shape_ok && found,
               "depth-3 node with sibling indices (3,2,1), arity 4: value 769/216");
    }

    {
        // 7: parent condition and the exact gap bound on every tree, n <= 10
        bool ok = true;
        std::int64_t total = 0;
        for (int n = 1; n <= 10; ++n) {
            TreeEnumerator en(n);
            while (auto t = en.next()) {
                ++total;
                ok = ok && check_parent_condition(*t) && parent_gap_in_bounds(*t);
            }
        }
        report(7, ok, "parent rule and gap bound 1 < gap < 1 + (m+2)^(1-l), n <= 10",
               std::to_string(total) + " trees");
    }

    {
        // 8: every law catches a seeded wrong-convention mutant at n = 3
        const std::vector<std::pair<std::string, Mutant>> table{
            {"main", Mutant::contour_left_to_right},
            {"main", Mutant::breadth_left_to_right},
            {"poset-roundtrip", Mutant::sibling_order_increasing},
            {"phi-bounce", Mutant::breadth_left_to_right},
            {"psi-steep", Mutant::contour_left_to_right},
            {"zeta-oracle", Mutant::oracle_scan_mirror},
            {"psi-valid", Mutant::psi_chain_rule_only},
            {"count", Mutant::enumerate_duplicate_first},
        };
        bool ok = true;
        int caught = 0;
        for (const auto& [law, mutant] : table) {
            SweepOptions opts;
            opts.mutant = mutant;
            if (!verify_law(law, 3, opts).ok())
                ++caught;
            else
                ok = false;
        }
        report(8, ok, "every law catches its seeded wrong-convention mutant at n = 3",
               std::to_string(caught) + "/" + std::to_string(table.size()) + " caught");
    }

    {
        // 9: the calibrated classical oracle agrees with zeta, n <= 10;
        //    waived only if no supported convention calibrates
        try {
            const ZetaOracle& oracle = ZetaOracle::calibrated();
            (void)oracle;
            std::int64_t total = 0, millis = 0;
            bool ok = laws_hold("zeta-oracle", 1, 10, parallel, total, millis);
            report(9, ok, "classical zeta oracle agrees after calibration, n <= 10",
                   std::to_string(total) + " paths");
        } catch (const CalibrationError& e) {
            std::printf("WAIVED  criterion 9: %s\n", e.what());
        }
    }

    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures;
}
