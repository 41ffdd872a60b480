#include "zetamap/enumerate.hpp"

#include "zetamap/tree_maps.hpp"

namespace zetamap {

DyckEnumerator::DyckEnumerator(int n) : n_(n) {
    // lex-smallest valid word: "NENE...NE"
    cur_.reserve(2 * n);
    for (int i = 0; i < n; ++i) cur_ += "NE";
}

bool DyckEnumerator::advance() {
    int len = 2 * n_;
    // rightmost 'E' that can be raised to 'N' with a valid completion
    int norths = n_, easts = n_;
    for (int i = len - 1; i >= 0; --i) {
        if (cur_[i] == 'N') {
            --norths;
            continue;
        }
        --easts;
        // prefix [0, i) now holds `norths` N and `easts` E
        if (norths + 1 > n_) continue;
        cur_[i] = 'N';
        int nc = norths + 1, ec = easts;
        for (int j = i + 1; j < len; ++j) {
            // smallest suffix: 'E' whenever the prefix stays valid
            if (ec < nc && ec < n_) {
                cur_[j] = 'E';
                ++ec;
            } else {
                cur_[j] = 'N';
                ++nc;
            }
        }
        return true;
    }
    return false;
}

std::optional<DyckPath> DyckEnumerator::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return DyckPath::from_steps(cur_);
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return DyckPath::from_steps(cur_);
}

std::vector<DyckPath> DyckEnumerator::take(std::size_t k) {
    std::vector<DyckPath> out;
    out.reserve(k);
    while (out.size() < k) {
        auto d = next();
        if (!d) break;
        out.push_back(std::move(*d));
    }
    return out;
}

std::optional<PlaneTree> TreeEnumerator::next() {
    auto d = inner_.next();
    if (!d) return std::nullopt;
    return dyck_to_tree_steep(*d);
}

std::optional<UnitIntervalPoset> PosetEnumerator::next() {
    auto t = inner_.next();
    if (!t) return std::nullopt;
    return tree_to_poset(*t);
}

}  // namespace zetamap
