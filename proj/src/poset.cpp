#include "zetamap/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "zetamap/error.hpp"

namespace zetamap {

namespace {

constexpr int kMaxElements = 64;

void validate_axioms(int n, const std::vector<std::uint64_t>& succ) {
    for (int i = 0; i < n; ++i) {
        if ((succ[i] >> i) & 1u)
            throw std::invalid_argument("poset relation is not irreflexive (element " +
                                        std::to_string(i + 1) + ")");
        if (n < 64 && (succ[i] >> n) != 0)
            throw std::invalid_argument("poset relation mentions an element beyond n");
    }
    for (int i = 0; i < n; ++i) {
        std::uint64_t m = succ[i];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            if ((succ[j] >> i) & 1u)
                throw std::invalid_argument("poset relation is not antisymmetric (" +
                                            std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
            if ((succ[j] & ~succ[i]) != 0)
                throw std::invalid_argument("poset relation is not transitively closed (" +
                                            std::to_string(i + 1) + " < " + std::to_string(j + 1) + ")");
        }
    }
}

}  // namespace

Poset::Poset(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
    if (n < 0) throw std::invalid_argument("poset size must be non-negative");
    if (n > kMaxElements)
        throw std::invalid_argument("posets with more than 64 elements are not supported");
    succ_.assign(n, 0);
    for (auto [i, j] : pairs) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::invalid_argument("relation pair (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") out of range 1..n");
        succ_[i - 1] |= std::uint64_t(1) << (j - 1);
    }
    validate_axioms(n_, succ_);
}

Poset Poset::from_succ_masks(int n, std::vector<std::uint64_t> succ) {
    if (n < 0 || n > kMaxElements) throw std::invalid_argument("poset size out of range");
    Poset p;
    p.n_ = n;
    p.succ_ = std::move(succ);
    validate_axioms(p.n_, p.succ_);
    return p;
}

std::uint64_t Poset::pred_mask(int i) const {
    std::uint64_t m = 0;
    for (int j = 0; j < n_; ++j)
        if ((succ_[j] >> i) & 1u) m |= std::uint64_t(1) << j;
    return m;
}

int Poset::up_size(int i) const { return std::popcount(succ_[i]); }
int Poset::down_size(int i) const { return std::popcount(pred_mask(i)); }

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) {
        std::uint64_t m = succ_[i];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            out.emplace_back(i + 1, j + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_three_plus_one_free(const Poset& p) {
    int n = p.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    int q[4] = {a, b, c, d};
                    for (int iso = 0; iso < 4; ++iso) {
                        int r[3];
                        for (int k = 0, t = 0; k < 4; ++k)
                            if (k != iso) r[t++] = q[k];
                        bool chain = p.comparable(r[0], r[1]) && p.comparable(r[0], r[2]) &&
                                     p.comparable(r[1], r[2]);
                        bool isolated = !p.comparable(q[iso], r[0]) &&
                                        !p.comparable(q[iso], r[1]) &&
                                        !p.comparable(q[iso], r[2]);
                        if (chain && isolated) return false;
                    }
                }
    return true;
}

bool is_two_plus_two_free(const Poset& p) {
    int n = p.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    // the three ways to split {a,b,c,d} into two pairs
                    int splits[3][4] = {{a, b, c, d}, {a, c, b, d}, {a, d, b, c}};
                    for (auto& s : splits) {
                        bool two_chains = p.comparable(s[0], s[1]) && p.comparable(s[2], s[3]);
                        bool no_cross = !p.comparable(s[0], s[2]) && !p.comparable(s[0], s[3]) &&
                                        !p.comparable(s[1], s[2]) && !p.comparable(s[1], s[3]);
                        if (two_chains && no_cross) return false;
                    }
                }
    return true;
}

bool is_unit_interval(const Poset& p) {
    return is_three_plus_one_free(p) && is_two_plus_two_free(p);
}

namespace {

// Relabels by (down-set size asc, up-set size desc, original label asc).
// For unit interval orders down-sets and up-sets are nested, so ties are
// order-equivalent elements and the output relation does not depend on how
// they are broken.
Poset canonical_relabel(const Poset& p) {
    int n = p.n();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> down(n), up(n);
    for (int i = 0; i < n; ++i) {
        down[i] = p.down_size(i);
        up[i] = p.up_size(i);
    }
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (down[a] != down[b]) return down[a] < down[b];
        if (up[a] != up[b]) return up[a] > up[b];
        return a < b;
    });
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[idx[r]] = r;
    std::vector<std::uint64_t> succ(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t m = p.succ_mask(i);
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            succ[rank[i]] |= std::uint64_t(1) << rank[j];
        }
    }
    return Poset::from_succ_masks(n, std::move(succ));
}

bool is_canonical_labeling(const Poset& p) {
    int n = p.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            if (p.less(j + 1, i + 1)) return false;
    for (int i = 0; i + 1 < n; ++i) {
        if (p.down_size(i) > p.down_size(i + 1)) return false;
        if (p.up_size(i) < p.up_size(i + 1)) return false;
    }
    return true;
}

}  // namespace

UnitIntervalPoset UnitIntervalPoset::from_relations(int n,
                                                    const std::vector<std::pair<int, int>>& pairs) {
    Poset p(n, pairs);
    if (!is_unit_interval(p))
        throw std::invalid_argument("relation is not a unit interval order");
    if (!is_canonical_labeling(p))
        throw std::invalid_argument("relation is not in canonical labeling");
    return UnitIntervalPoset(std::move(p));
}

UnitIntervalPoset UnitIntervalPoset::from_canonical_masks(int n, std::vector<std::uint64_t> succ) {
    Poset p = Poset::from_succ_masks(n, std::move(succ));
    assert(is_canonical_labeling(p));
    assert(is_unit_interval(p));
    return UnitIntervalPoset(std::move(p));
}

UnitIntervalPoset canonical_form(const Poset& p) {
    if (!is_unit_interval(p))
        throw std::invalid_argument("canonical_form requires a unit interval order");
    Poset c = canonical_relabel(p);
    assert(is_canonical_labeling(c));
    return UnitIntervalPoset(std::move(c));
}

bool posets_isomorphic(const Poset& a, const Poset& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a) == canonical_form(b);
}

UnitIntervalPoset UnitIntervalPoset::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("relations") || j.size() != 2)
        throw std::invalid_argument(
            "poset JSON must be an object with exactly the keys \"n\" and \"relations\"");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("poset JSON: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (!j["relations"].is_array())
        throw std::invalid_argument("poset JSON: \"relations\" must be an array of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j["relations"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("poset JSON: each relation must be a pair of integers");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return from_relations(n, pairs);
}

UnitIntervalPoset UnitIntervalPoset::parse(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, true);
    return from_json(j);
}

nlohmann::json UnitIntervalPoset::to_json() const {
    nlohmann::json rel = nlohmann::json::array();
    for (auto [i, j] : order_.relation_pairs()) rel.push_back({i, j});
    return nlohmann::json{{"n", n()}, {"relations", rel}};
}

std::string UnitIntervalPoset::encode() const { return to_json().dump(); }

StartingSet::StartingSet(std::vector<Rational> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (!(points_[i] < points_[i + 1]))
            throw std::invalid_argument("starting set must be strictly increasing");
}

UnitIntervalPoset poset_from_starting_set(const StartingSet& s) {
    // x sorted ascending, so i < j iff x_i + 1 < x_j gives upward-closed
    // successor sets and the identity labeling is already canonical.
    const auto& x = s.points();
    int n = s.size();
    if (n > 64) throw std::invalid_argument("posets with more than 64 elements are not supported");
    std::vector<std::uint64_t> succ(n, 0);
    int j = 0;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    for (int i = 0; i < n; ++i) {
        if (j < i + 1) j = i + 1;
        while (j < n && !(x[i] + 1 < x[j])) ++j;
        if (j < n) succ[i] = all & ~((std::uint64_t(1) << j) - 1);
    }
    return UnitIntervalPoset::from_canonical_masks(n, std::move(succ));
}

}  // namespace zetamap
