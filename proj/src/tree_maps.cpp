#include "zetamap/tree_maps.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace zetamap {

namespace {

// (value, node id) for every non-root node, sorted by value ascending.
// Throws std::logic_error if two values collide, which would mean the
// exact-arithmetic invariant is broken.
std::vector<std::pair<Rational, int>> node_values(const PlaneTree& t) {
    int n = t.size();
    std::vector<std::pair<Rational, int>> vals;
    vals.reserve(n);
    if (n == 0) return vals;
    const int base = t.max_arity() + 2;
    // digit weights (m+2)^-d for d = 1..max depth
    std::vector<Rational> weight;
    BigInt pow = 1;
    struct Frame {
        int node;
        Rational frac;
    };
    std::vector<Frame> stack{{t.root(), Rational(0)}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (int c : t.children(f.node)) {
            int d = t.depth(c);
            while (static_cast<int>(weight.size()) < d) {
                pow *= base;
                weight.emplace_back(BigInt(1), pow);
            }
            Rational frac = f.frac + t.sibling_index_from_right(c) * weight[d - 1];
            vals.emplace_back(Rational(d) + frac, c);
            stack.push_back({c, std::move(frac)});
        }
    }
    std::sort(vals.begin(), vals.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        if (vals[i].first == vals[i + 1].first)
            throw std::logic_error("starting_set_of_tree: node values are not distinct");
    return vals;
}

}  // namespace

StartingSet starting_set_of_tree(const PlaneTree& t) {
    auto vals = node_values(t);
    std::vector<Rational> pts;
    pts.reserve(vals.size());
    for (auto& v : vals) pts.push_back(std::move(v.first));
    return StartingSet(std::move(pts));
}

UnitIntervalPoset tree_to_poset(const PlaneTree& t) {
    return poset_from_starting_set(starting_set_of_tree(t));
}

PlaneTree poset_to_tree(const UnitIntervalPoset& p) {
    int n = p.n();
    // ids: 0 = root, 1..n = elements
    std::vector<std::vector<int>> children(n + 1);
    for (int i = 1; i <= n; ++i) {
        std::uint64_t below = p.order().pred_mask(i - 1);
        int parent = below ? 64 - std::countl_zero(below) : 0;  // largest element below i
        children[parent].push_back(i);
    }
    // children were collected in increasing index; left-to-right order is
    // decreasing index
    for (auto& c : children) std::reverse(c.begin(), c.end());
    return PlaneTree::from_children(std::move(children), 0);
}

bool check_parent_condition(const PlaneTree& t) {
    auto vals = node_values(t);
    int n = static_cast<int>(vals.size());
    std::vector<Rational> xs(n);
    std::vector<int> index_of_node(t.node_count(), -1);
    for (int i = 0; i < n; ++i) {
        xs[i] = vals[i].first;
        index_of_node[vals[i].second] = i;
    }
    for (int i = 0; i < n; ++i) {
        int u = vals[i].second;
        // largest element strictly more than 1 below value(u)
        Rational bound = xs[i] - 1;
        auto it = std::lower_bound(xs.begin(), xs.end(), bound);
        int largest = static_cast<int>(it - xs.begin()) - 1;  // last index with x < bound
        int parent = t.parent(u);
        if (parent == t.root()) {
            if (largest >= 0) return false;
        } else {
            if (largest < 0 || largest != index_of_node[parent]) return false;
        }
    }
    return true;
}

bool parent_gap_in_bounds(const PlaneTree& t) {
    auto vals = node_values(t);
    std::vector<Rational> value_of_node(t.node_count());
    for (auto& [x, u] : vals) value_of_node[u] = x;
    const int base = t.max_arity() + 2;
    for (auto& [x, u] : vals) {
        int parent = t.parent(u);
        if (parent == t.root()) continue;
        int l = t.depth(parent);
        Rational gap = x - value_of_node[parent];
        BigInt denom = 1;
        for (int k = 0; k < l - 1; ++k) denom *= base;  // (m+2)^(l-1)
        Rational limit = 1 + Rational(BigInt(1), denom);
        if (!(1 < gap && gap < limit)) return false;
    }
    return true;
}

DyckPath tree_to_dyck_steep(const PlaneTree& t) {
    std::string steps;
    steps.reserve(2 * t.size());
    struct Frame {
        int node;
        int next;  // index into the reversed child order
    };
    std::vector<Frame> stack{{t.root(), 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& kids = t.children(f.node);
        if (f.next < static_cast<int>(kids.size())) {
            // clockwise: rightmost child first
            int c = kids[kids.size() - 1 - f.next];
            ++f.next;
            steps.push_back('N');
            stack.push_back({c, 0});
        } else {
            stack.pop_back();
            if (!stack.empty()) steps.push_back('E');
        }
    }
    return DyckPath::from_steps(std::move(steps));
}

PlaneTree dyck_to_tree_steep(const DyckPath& d) {
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
    // the walk discovered children right to left
    for (auto& kids : children) std::reverse(kids.begin(), kids.end());
    return PlaneTree::from_children(std::move(children), 0);
}

DyckPath tree_to_dyck_bounce(const PlaneTree& t) {
    // The run at x = k is the arity of the k-th node in breadth order
    // (depth ascending, right to left within a depth). Writing k = s_l - r
    // with 0 <= r < alpha_l, that node is the (r+1)-st node of depth l
    // counted from the left, since breadth position and value order agree.
    int n = t.size();
    if (n == 0) return DyckPath();
    auto order = t.breadth_order();
    std::string steps;
    steps.reserve(2 * n);
    steps.append(t.arity(t.root()), 'N');
    steps.push_back('E');
    for (int k = 1; k <= n - 1; ++k) {
        steps.append(t.arity(order[k - 1]), 'N');
        steps.push_back('E');
    }
    return DyckPath::from_steps(std::move(steps));
}

PlaneTree dyck_to_tree_bounce(const DyckPath& d) {
    int n = d.size();
    if (n == 0) return PlaneTree();
    std::vector<int> runs = north_runs(d);
    std::vector<std::vector<int>> children(1);
    std::size_t pos = 0;
    // level lists are kept in breadth order (right to left), matching the
    // order in which runs were emitted
    std::vector<int> level;
    auto add_children = [&](int parent, int count) {
        std::vector<int> ids;
        ids.reserve(count);
        for (int k = 0; k < count; ++k) {
            ids.push_back(static_cast<int>(children.size()));
            children.emplace_back();
        }
        children[parent] = ids;  // left to right
        for (auto it = ids.rbegin(); it != ids.rend(); ++it) level.push_back(*it);
    };
    add_children(0, runs[pos++]);
    while (!level.empty()) {
        std::vector<int> current = std::move(level);
        level.clear();
        std::size_t remaining = runs.size() - pos;
        if (remaining >= current.size()) {
            for (int v : current) add_children(v, runs[pos++]);
        } else {
            // deepest level: only the breadth-last node's run is omitted
            // from the path, and every node here is a leaf
            if (remaining != current.size() - 1)
                throw std::logic_error("dyck_to_tree_bounce: run sequence is not realizable");
            for (std::size_t k = 0; k < remaining; ++k)
                if (runs[pos++] != 0)
                    throw std::logic_error("dyck_to_tree_bounce: deepest level must be leaves");
            break;
        }
    }
    if (pos != runs.size() || static_cast<int>(children.size()) != n + 1)
        throw std::logic_error("dyck_to_tree_bounce: run sequence is not realizable");
    return PlaneTree::from_children(std::move(children), 0);
}

}  // namespace zetamap
