#include "zetamap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zetamap/dyck_maps.hpp"
#include "zetamap/enumerate.hpp"
#include "zetamap/tree_maps.hpp"

namespace zetamap {

nlohmann::json LawReport::to_json() const {
    nlohmann::json cxs = nlohmann::json::array();
    for (const auto& c : counterexamples)
        cxs.push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
    return nlohmann::json{
        {"law", law}, {"n", n}, {"checked", checked}, {"counterexamples", cxs}, {"millis", millis}};
}

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids{
        "main", "poset-roundtrip", "phi-bounce", "psi-steep", "zeta-oracle", "psi-valid", "count"};
    return ids;
}

namespace {

// ---- wrong-convention variants (mutation sensitivity seeds) ----
// Each mirrors one real map with a single flipped convention. They live
// here, not in the map modules, so the real maps stay single-purpose.

PlaneTree mutant_tree_of_contour_ltr(const DyckPath& d) {
    std::vector<std::vector<int>> children(1);
    std::vector<int> stack{0};
    for (char c : d.str()) {
        if (c == 'N') {
            int id = static_cast<int>(children.size());
            children.emplace_back();
            children[stack.back()].push_back(id);
            stack.push_back(id);
        } else {
            stack.pop_back();
        }
    }
    // no reversal: pretends the walk was counterclockwise
    return PlaneTree::from_children(std::move(children), 0);
}

DyckPath mutant_level_path_ltr(const PlaneTree& t) {
    int n = t.size();
    if (n == 0) return DyckPath();
    // flipped: breadth order taken left to right within each depth
    auto order = t.breadth_order();
    auto alpha = t.depth_counts();
    std::size_t lo = 0;
    for (int a : alpha) {
        std::reverse(order.begin() + lo, order.begin() + lo + a);
        lo += a;
    }
    std::string steps;
    steps.append(t.arity(t.root()), 'N');
    steps.push_back('E');
    for (int k = 1; k <= n - 1; ++k) {
        steps.append(t.arity(order[k - 1]), 'N');
        steps.push_back('E');
    }
    return DyckPath::from_steps(std::move(steps));
}

PlaneTree mutant_poset_to_tree_increasing(const UnitIntervalPoset& p) {
    int n = p.n();
    std::vector<std::vector<int>> children(n + 1);
    for (int i = 1; i <= n; ++i) {
        std::uint64_t below = p.order().pred_mask(i - 1);
        int parent = below ? 64 - std::countl_zero(below) : 0;
        children[parent].push_back(i);  // increasing index, not decreasing
    }
    return PlaneTree::from_children(std::move(children), 0);
}

std::vector<std::pair<int, int>> mutant_psi_chain_pairs(const DyckPath& d) {
    const auto a = area_vector(d).entries();
    int n = static_cast<int>(a.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i] + 1 == a[j] && i < j) pairs.emplace_back(i + 1, j + 1);
    return pairs;
}

// ---- sweep kernels ----

using DyckCheck = std::function<std::optional<Counterexample>(const DyckPath&)>;

// Serial reference sweep. Kept alongside the parallel kernel; the two must
// produce byte-identical reports (minus timing) and the test suite checks
// that.
std::int64_t sweep_serial(DyckEnumerator& en, const DyckCheck& check,
                          std::vector<Counterexample>& out) {
    std::int64_t checked = 0;
    while (auto d = en.next()) {
        ++checked;
        if (auto cx = check(*d)) out.push_back(std::move(*cx));
    }
    return checked;
}

std::int64_t sweep_parallel(DyckEnumerator& en, const DyckCheck& check, int jobs,
                            std::vector<Counterexample>& out) {
    constexpr std::size_t kChunk = 2048;
    std::int64_t checked = 0;
    for (;;) {
        std::vector<DyckPath> chunk = en.take(kChunk);
        if (chunk.empty()) break;
        checked += static_cast<std::int64_t>(chunk.size());
        std::vector<std::optional<Counterexample>> results(chunk.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunk.size()); ++i)
            results[i] = check(chunk[i]);
        for (auto& r : results)
            if (r) out.push_back(std::move(*r));
    }
    (void)jobs;
    return checked;
}

std::int64_t sweep(int n, const DyckCheck& check, int jobs, std::vector<Counterexample>& out) {
    DyckEnumerator en(n);
    int effective = jobs;
#ifdef _OPENMP
    if (effective <= 0) effective = omp_get_max_threads();
#else
    effective = 1;
#endif
    if (effective == 1) return sweep_serial(en, check, out);
    return sweep_parallel(en, check, effective, out);
}

// ---- law checks ----

std::optional<Counterexample> check_main(const DyckPath& d, Mutant m) {
    DyckPath actual = phi(psi(d));
    DyckPath expected;
    try {
        expected = m == Mutant::contour_left_to_right
                       ? tree_to_dyck_bounce(mutant_tree_of_contour_ltr(d))
                   : m == Mutant::breadth_left_to_right
                       ? mutant_level_path_ltr(dyck_to_tree_steep(d))
                       : zeta(d);
    } catch (const std::logic_error& e) {
        return Counterexample{d.str(), "a valid Dyck path", e.what()};
    }
    if (actual == expected) return std::nullopt;
    return Counterexample{d.str(), expected.str(), actual.str()};
}

std::optional<Counterexample> check_poset_roundtrip(const DyckPath& d, Mutant m) {
    PlaneTree t = dyck_to_tree_steep(d);
    UnitIntervalPoset p = tree_to_poset(t);
    PlaneTree t2 = m == Mutant::sibling_order_increasing ? mutant_poset_to_tree_increasing(p)
                                                         : poset_to_tree(p);
    if (t2 != t) return Counterexample{t.str(), t.str(), t2.str()};
    UnitIntervalPoset p2 = tree_to_poset(t2);
    if (p2 != p) return Counterexample{t.str(), p.encode(), p2.encode()};
    return std::nullopt;
}

std::optional<Counterexample> check_phi_bounce(const DyckPath& d, Mutant m) {
    PlaneTree t = dyck_to_tree_steep(d);
    DyckPath actual = phi(tree_to_poset(t));
    DyckPath expected;
    try {
        expected = m == Mutant::breadth_left_to_right ? mutant_level_path_ltr(t)
                                                      : tree_to_dyck_bounce(t);
    } catch (const std::logic_error& e) {
        return Counterexample{t.str(), "a valid Dyck path", e.what()};
    }
    if (actual == expected) return std::nullopt;
    return Counterexample{t.str(), expected.str(), actual.str()};
}

std::optional<Counterexample> check_psi_steep(const DyckPath& d, Mutant m) {
    UnitIntervalPoset actual = psi(d);
    PlaneTree t = m == Mutant::contour_left_to_right ? mutant_tree_of_contour_ltr(d)
                                                     : dyck_to_tree_steep(d);
    UnitIntervalPoset expected = tree_to_poset(t);
    if (actual == expected) return std::nullopt;
    return Counterexample{d.str(), expected.encode(), actual.encode()};
}

std::optional<Counterexample> check_zeta_oracle(const DyckPath& d, Mutant m) {
    DyckPath expected = zeta(d);
    DyckPath actual;
    try {
        actual = m == Mutant::oracle_scan_mirror
                     ? ZetaOracle::apply(ZetaOracle::Convention::grouped_right_to_left, d)
                     : zeta_classical(d);
    } catch (const std::logic_error& e) {
        return Counterexample{d.str(), "a valid Dyck path", e.what()};
    }
    if (actual == expected) return std::nullopt;
    return Counterexample{d.str(), expected.str(), actual.str()};
}

std::optional<Counterexample> check_psi_valid(const DyckPath& d, Mutant m) {
    const char* expected = "canonical unit interval poset";
    try {
        UnitIntervalPoset p = m == Mutant::psi_chain_rule_only
                                  ? UnitIntervalPoset::from_relations(d.size(),
                                                                     mutant_psi_chain_pairs(d))
                                  : psi(d);
        if (!is_three_plus_one_free(p.order()))
            return Counterexample{d.str(), expected, "not (3+1)-free: " + p.encode()};
        if (!is_two_plus_two_free(p.order()))
            return Counterexample{d.str(), expected, "not (2+2)-free: " + p.encode()};
        if (canonical_form(p.order()) != p)
            return Counterexample{d.str(), expected, "not canonical: " + p.encode()};
    } catch (const std::invalid_argument& e) {
        return Counterexample{d.str(), expected, e.what()};
    }
    return std::nullopt;
}

LawReport law_count(int n, const SweepOptions& opts) {
    // the duplicate check is a global set, so this law runs serially
    LawReport rep;
    rep.law = "count";
    rep.n = n;
    std::unordered_set<std::string> seen;
    PosetEnumerator en(n);
    std::optional<std::string> first_encoding;
    while (auto p = en.next()) {
        ++rep.checked;
        std::string enc = p->encode();
        if (!first_encoding) first_encoding = enc;
        if (!seen.insert(enc).second)
            rep.counterexamples.push_back({enc, "distinct from all earlier objects", "duplicate"});
    }
    if (opts.mutant == Mutant::enumerate_duplicate_first && first_encoding) {
        ++rep.checked;
        if (!seen.insert(*first_encoding).second)
            rep.counterexamples.push_back(
                {*first_encoding, "distinct from all earlier objects", "duplicate"});
    }
    BigInt expected = catalan_number(n);
    if (BigInt(rep.checked) != expected)
        rep.counterexamples.push_back({"stream length for n=" + std::to_string(n),
                                       expected.str() + " objects",
                                       std::to_string(rep.checked) + " objects"});
    return rep;
}

}  // namespace

LawReport verify_law(std::string_view law, int n, const SweepOptions& opts) {
    if (n < 0) throw std::invalid_argument("verify_law: n must be non-negative");
    const auto t0 = std::chrono::steady_clock::now();
    LawReport rep;
    rep.law = std::string(law);
    rep.n = n;
    Mutant m = opts.mutant;
    if (law == "main") {
        rep.checked = sweep(n, [m](const DyckPath& d) { return check_main(d, m); }, opts.jobs,
                            rep.counterexamples);
    } else if (law == "poset-roundtrip") {
        rep.checked = sweep(n, [m](const DyckPath& d) { return check_poset_roundtrip(d, m); },
                            opts.jobs, rep.counterexamples);
    } else if (law == "phi-bounce") {
        rep.checked = sweep(n, [m](const DyckPath& d) { return check_phi_bounce(d, m); },
                            opts.jobs, rep.counterexamples);
    } else if (law == "psi-steep") {
        rep.checked = sweep(n, [m](const DyckPath& d) { return check_psi_steep(d, m); },
                            opts.jobs, rep.counterexamples);
    } else if (law == "zeta-oracle") {
        rep.checked = sweep(n, [m](const DyckPath& d) { return check_zeta_oracle(d, m); },
                            opts.jobs, rep.counterexamples);
    } else if (law == "psi-valid") {
        rep.checked = sweep(n, [m](const DyckPath& d) { return check_psi_valid(d, m); },
                            opts.jobs, rep.counterexamples);
    } else if (law == "count") {
        rep = law_count(n, opts);
    } else {
        throw std::invalid_argument("unknown law identifier: " + std::string(law));
    }
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

std::vector<LawReport> verify_all(int n_max, const SweepOptions& opts) {
    std::vector<LawReport> reports;
    for (const auto& law : law_ids())
        for (int n = 1; n <= n_max; ++n) reports.push_back(verify_law(law, n, opts));
    return reports;
}

bool all_ok(const std::vector<LawReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.ok(); });
}

}  // namespace zetamap
