#include "zetamap/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetamap {

PlaneTree::PlaneTree() : children_(1), parent_{-1}, depth_{0}, root_(0) {}

PlaneTree::PlaneTree(std::vector<std::vector<int>> children, std::vector<int> parent, int root)
    : children_(std::move(children)), parent_(std::move(parent)), root_(root) {
    compute_depths();
}

void PlaneTree::compute_depths() {
    depth_.assign(children_.size(), -1);
    depth_[root_] = 0;
    // children_ lists are acyclic by construction; a preorder pass suffices
    std::vector<int> stack{root_};
    std::size_t seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int c : children_[v]) {
            depth_[c] = depth_[v] + 1;
            stack.push_back(c);
        }
    }
    if (seen != children_.size())
        throw std::logic_error("PlaneTree: nodes not all reachable from the root");
}

PlaneTree PlaneTree::parse(std::string_view text) {
    std::vector<std::vector<int>> children;
    std::vector<int> parent;
    std::vector<int> stack;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') {
            if (stack.empty() && !children.empty())
                throw ParseError("unexpected second root", i + 1);
            int id = static_cast<int>(children.size());
            children.emplace_back();
            parent.push_back(stack.empty() ? -1 : stack.back());
            if (!stack.empty()) children[stack.back()].push_back(id);
            stack.push_back(id);
        } else if (c == ')') {
            if (stack.empty()) throw ParseError("unmatched ')'", i + 1);
            stack.pop_back();
        } else {
            throw ParseError(std::string("invalid character '") + c + "'", i + 1);
        }
    }
    if (!stack.empty()) throw ParseError("unmatched '('", text.size());
    if (children.empty()) throw ParseError("empty tree encoding (expected at least \"()\")", 1);
    return PlaneTree(std::move(children), std::move(parent), 0);
}

PlaneTree PlaneTree::from_children(std::vector<std::vector<int>> children, int root) {
    int m = static_cast<int>(children.size());
    if (root < 0 || root >= m) throw std::logic_error("PlaneTree: root out of range");
    std::vector<int> parent(m, -1);
    for (int v = 0; v < m; ++v) {
        for (int c : children[v]) {
            if (c < 0 || c >= m || c == root)
                throw std::logic_error("PlaneTree: bad child id");
            if (parent[c] != -1) throw std::logic_error("PlaneTree: node has two parents");
            parent[c] = v;
        }
    }
    for (int v = 0; v < m; ++v)
        if (v != root && parent[v] == -1)
            throw std::logic_error("PlaneTree: orphan node");
    return PlaneTree(std::move(children), std::move(parent), root);
}

std::string PlaneTree::str() const {
    std::string out;
    out.reserve(2 * children_.size());
    // iterative DFS emitting '(' on entry and ')' on exit
    struct Frame {
        int node;
        std::size_t next_child;
    };
    std::vector<Frame> stack;
    out.push_back('(');
    stack.push_back({root_, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_child < children_[f.node].size()) {
            int c = children_[f.node][f.next_child++];
            out.push_back('(');
            stack.push_back({c, 0});
        } else {
            out.push_back(')');
            stack.pop_back();
        }
    }
    return out;
}

int PlaneTree::max_arity() const {
    int m = 0;
    for (const auto& c : children_) m = std::max(m, static_cast<int>(c.size()));
    return m;
}

int PlaneTree::sibling_index_from_right(int v) const {
    if (v == root_) throw std::logic_error("sibling_index_from_right: root has no siblings");
    const auto& sib = children_[parent_[v]];
    for (std::size_t k = 0; k < sib.size(); ++k)
        if (sib[k] == v) return static_cast<int>(sib.size() - k);
    throw std::logic_error("sibling_index_from_right: node not found under its parent");
}

std::vector<int> PlaneTree::depth_counts() const {
    std::vector<int> alpha;
    for (std::size_t v = 0; v < children_.size(); ++v) {
        int d = depth_[static_cast<int>(v)];
        if (d == 0) continue;
        if (static_cast<int>(alpha.size()) < d) alpha.resize(d, 0);
        ++alpha[d - 1];
    }
    return alpha;
}

PlaneTree::BreadthOrderIndex PlaneTree::breadth_index(int k) const {
    if (k < 1 || k > size()) throw std::logic_error("breadth_index: position out of range");
    int s = 0, depth = 0;
    for (int a : depth_counts()) {
        ++depth;
        s += a;
        if (k <= s) return {depth, s - k};
    }
    throw std::logic_error("breadth_index: depth counts do not cover the tree");
}

std::vector<int> PlaneTree::breadth_order() const {
    // level order with every level listed right to left: process parents
    // right to left and push their children right to left
    std::vector<int> order;
    order.reserve(size());
    std::vector<int> level;
    for (auto it = children_[root_].rbegin(); it != children_[root_].rend(); ++it)
        level.push_back(*it);
    while (!level.empty()) {
        std::vector<int> next;
        for (int v : level) {
            order.push_back(v);
            for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it)
                next.push_back(*it);
        }
        level = std::move(next);
    }
    return order;
}

}  // namespace zetamap
