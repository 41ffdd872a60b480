#include "zetamap/render.hpp"

#include <vector>

namespace zetamap {

std::string render_dyck(const DyckPath& d) {
    int n = d.size();
    if (n == 0) return "";
    // text row r covers the height band [n - r, n - r + 1); row 0 is a
    // border row carrying the horizontal segments at height n
    std::vector<std::string> canvas(n + 1, std::string(2 * n, ' '));
    int x = 0, y = 0;
    for (char c : d.str()) {
        if (c == 'N') {
            canvas[n - y][2 * x] = '|';  // vertical over band [y, y+1)
            ++y;
        } else {
            // horizontal at height y over [x, x+1)
            canvas[n - y][2 * x] = '_';
            canvas[n - y][2 * x + 1] = '_';
            ++x;
        }
    }
    for (int yy = 1; yy <= n; ++yy) {
        char& cell = canvas[n - yy + 1][2 * (yy - 1) + 1];
        if (cell == ' ') cell = '.';
    }
    std::string out;
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_tree(const PlaneTree& t) {
    std::string out;
    struct Frame {
        int node;
        std::size_t next;
    };
    std::vector<Frame> stack{{t.root(), 0}};
    out += "*\n";
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& kids = t.children(f.node);
        if (f.next < kids.size()) {
            int c = kids[f.next++];
            out.append(2 * static_cast<std::size_t>(t.depth(c)), ' ');
            out += "*\n";
            stack.push_back({c, 0});
        } else {
            stack.pop_back();
        }
    }
    return out;
}

}  // namespace zetamap
