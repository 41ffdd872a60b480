#include "zetamap/dyck.hpp"

#include <stdexcept>
#include <utility>

namespace zetamap {

BigInt catalan_number(int n) {
    if (n < 0) throw std::invalid_argument("catalan_number: n must be non-negative");
    // Cat_n = C(2n, n) / (n + 1), computed with exact division.
    BigInt c = 1;
    for (int k = 1; k <= n; ++k) {
        c = c * (n + k) / k;  // running C(n+k, k); division is exact here
    }
    return c / (n + 1);
}

namespace {

struct StepCheck {
    bool ok;
    std::string reason;
    std::size_t pos;  // 1-based
};

StepCheck check_steps(std::string_view s) {
    long north = 0, east = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == 'N') {
            ++north;
        } else if (c == 'E') {
            ++east;
            if (east > north)
                return {false, "path dips below the diagonal", i + 1};
        } else {
            return {false, std::string("invalid step character '") + c + "'", i + 1};
        }
    }
    if (north != east)
        return {false,
                "unbalanced path (" + std::to_string(north) + " north vs " +
                    std::to_string(east) + " east steps)",
                s.size()};
    return {true, {}, 0};
}

}  // namespace

DyckPath DyckPath::parse(std::string_view text) {
    StepCheck c = check_steps(text);
    if (!c.ok) throw ParseError(c.reason, c.pos);
    return DyckPath(std::string(text));
}

DyckPath DyckPath::from_steps(std::string steps) {
    StepCheck c = check_steps(steps);
    if (!c.ok) throw std::logic_error("DyckPath::from_steps: " + c.reason);
    return DyckPath(std::move(steps));
}

AreaVector::AreaVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0)
            throw std::invalid_argument("area vector entries must be non-negative");
        if (i == 0 && entries_[0] != 0)
            throw std::invalid_argument("area vector must start with 0");
        if (i > 0 && entries_[i] > entries_[i - 1] + 1)
            throw std::invalid_argument("area vector may rise by at most 1 per step");
    }
}

AreaVector area_vector(const DyckPath& d) {
    // a_i = (i - 1) - (number of east steps before the i-th north step)
    std::vector<int> a;
    a.reserve(d.size());
    int east = 0, north = 0;
    for (char c : d.str()) {
        if (c == 'N') {
            a.push_back(north - east);
            ++north;
        } else {
            ++east;
        }
    }
    return AreaVector(std::move(a));
}

DyckPath dyck_from_area(const AreaVector& a) {
    const auto& v = a.entries();
    int n = a.size();
    std::string s;
    s.reserve(2 * n);
    int east = 0;
    for (int i = 0; i < n; ++i) {
        int easts_before = i - v[i];
        while (east < easts_before) {
            s.push_back('E');
            ++east;
        }
        s.push_back('N');
    }
    while (east < n) {
        s.push_back('E');
        ++east;
    }
    return DyckPath::from_steps(std::move(s));
}

std::vector<int> north_runs(const DyckPath& d) {
    std::vector<int> runs;
    runs.reserve(d.size());
    int run = 0;
    for (char c : d.str()) {
        if (c == 'N') {
            ++run;
        } else {
            runs.push_back(run);
            run = 0;
        }
    }
    return runs;
}

}  // namespace zetamap
