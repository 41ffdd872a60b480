#include "zetamap/dyck_maps.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "zetamap/enumerate.hpp"
#include "zetamap/tree_maps.hpp"

namespace zetamap {

DyckPath phi(const UnitIntervalPoset& p) {
    int n = p.n();
    std::string steps;
    steps.reserve(2 * n);
    int placed = 0;
    for (int k = 0; k < n; ++k) {
        int norths_before = n - p.order().up_size(k);
        if (norths_before < placed)
            throw std::logic_error("phi: up-set sizes are not weakly decreasing");
        steps.append(norths_before - placed, 'N');
        steps.push_back('E');
        placed = norths_before;
    }
    return DyckPath::from_steps(std::move(steps));
}

MergedSequence MergedSequence::build(const StartingSet& s) {
    MergedSequence m;
    const auto& x = s.points();
    int n = s.size();
    m.entries_.reserve(2 * n);
    int i = 0, j = 0;
    while (i < n || j < n) {
        if (j >= n || (i < n && x[i] < x[j] + 1)) {
            m.entries_.push_back({x[i], true});
            ++i;
        } else if (i >= n || x[j] + 1 < x[i]) {
            m.entries_.push_back({x[j] + 1, false});
            ++j;
        } else {
            throw std::invalid_argument("starting set intersects its unit shift (value " +
                                        to_string(x[i]) + ")");
        }
    }
    return m;
}

DyckPath phi_from_starting_set(const UnitIntervalPoset& p, const StartingSet& s) {
    if (poset_from_starting_set(s) != p)
        throw std::invalid_argument("starting set does not realize the given poset");
    MergedSequence m = MergedSequence::build(s);
    std::string steps;
    steps.reserve(m.entries().size());
    for (const auto& e : m.entries()) steps.push_back(e.is_start ? 'N' : 'E');
    return DyckPath::from_steps(std::move(steps));
}

namespace {

// succ masks of the area-vector order, before canonical relabeling
std::vector<std::uint64_t> psi_succ_masks(const AreaVector& a) {
    const auto& v = a.entries();
    int n = a.size();
    std::vector<std::uint64_t> succ(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool rel = v[i] + 2 <= v[j] || (v[i] + 1 == v[j] && i < j);
            if (rel) succ[i] |= std::uint64_t(1) << j;
        }
    return succ;
}

}  // namespace

UnitIntervalPoset psi(const DyckPath& d) {
    AreaVector a = area_vector(d);
    int n = a.size();
    Poset raw = Poset::from_succ_masks(n, psi_succ_masks(a));
    return canonical_form(raw);
}

DyckPath psi_inverse(const UnitIntervalPoset& p) {
    return tree_to_dyck_steep(poset_to_tree(p));
}

DyckPath zeta(const DyckPath& d) {
    return tree_to_dyck_bounce(dyck_to_tree_steep(d));
}

DyckPath ZetaOracle::apply(Convention c, const DyckPath& d) {
    const auto a = area_vector(d).entries();
    int n = static_cast<int>(a.size());
    int amax = 0;
    for (int x : a) amax = std::max(amax, x);

    bool grouped = c == Convention::grouped_right_to_left ||
                   c == Convention::grouped_right_to_left_reversed;
    bool right_to_left = c == Convention::grouped_right_to_left ||
                         c == Convention::plain_right_to_left ||
                         c == Convention::grouped_right_to_left_reversed ||
                         c == Convention::plain_right_to_left_reversed;
    bool reversed = c == Convention::grouped_right_to_left_reversed ||
                    c == Convention::plain_left_to_right_reversed ||
                    c == Convention::plain_right_to_left_reversed;

    std::string steps;
    steps.reserve(2 * n);
    for (int i = 0; i < n; ++i)
        if (a[i] == 0) steps.push_back('N');

    if (grouped) {
        // one block per diagonal value v: anchors are the v-entries, each
        // owning the (v+1)-entries between it and the next anchor
        for (int v = 0; v <= amax; ++v) {
            std::vector<int> anchors;
            for (int i = 0; i < n; ++i)
                if (a[i] == v) anchors.push_back(i);
            for (std::size_t k = anchors.size(); k-- > 0;) {
                steps.push_back('E');
                int to = k + 1 < anchors.size() ? anchors[k + 1] : n;
                for (int i = anchors[k] + 1; i < to; ++i)
                    if (a[i] == v + 1) steps.push_back('N');
            }
        }
    } else {
        for (int dgl = 1; dgl <= amax + 1; ++dgl) {
            if (right_to_left) {
                for (int i = n - 1; i >= 0; --i) {
                    if (a[i] == dgl) steps.push_back('N');
                    if (a[i] == dgl - 1) steps.push_back('E');
                }
            } else {
                for (int i = 0; i < n; ++i) {
                    if (a[i] == dgl) steps.push_back('N');
                    if (a[i] == dgl - 1) steps.push_back('E');
                }
            }
        }
    }

    if (reversed) {
        std::string rc;
        rc.reserve(steps.size());
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
            rc.push_back(*it == 'N' ? 'E' : 'N');
        steps = std::move(rc);
    }
    return DyckPath::from_steps(std::move(steps));
}

const std::vector<ZetaOracle::Convention>& ZetaOracle::conventions() {
    static const std::vector<Convention> all{
        Convention::plain_left_to_right,
        Convention::plain_right_to_left,
        Convention::grouped_right_to_left,
        Convention::plain_left_to_right_reversed,
        Convention::plain_right_to_left_reversed,
        Convention::grouped_right_to_left_reversed,
    };
    return all;
}

const ZetaOracle& ZetaOracle::calibrated() {
    static const ZetaOracle instance = [] {
        constexpr int kCalibrationMax = 4;
        for (Convention c : conventions()) {
            bool all_match = true;
            for (int n = 0; n <= kCalibrationMax && all_match; ++n) {
                DyckEnumerator en(n);
                while (auto d = en.next()) {
                    try {
                        if (apply(c, *d) != zeta(*d)) {
                            all_match = false;
                            break;
                        }
                    } catch (const std::logic_error&) {
                        // convention produced an invalid word; disqualify it
                        all_match = false;
                        break;
                    }
                }
            }
            if (all_match) return ZetaOracle(c);
        }
        throw CalibrationError(
            "no supported area-word scanning convention reproduces the zeta map on sizes 0..4");
    }();
    return instance;
}

DyckPath zeta_classical(const DyckPath& d) { return ZetaOracle::calibrated()(d); }

}  // namespace zetamap
