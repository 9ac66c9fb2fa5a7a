#include "tabkit/ejection.hpp"

#include <algorithm>
#include <string>

namespace tabkit {

namespace detail {

bool ejectable_in_suffix(const std::vector<std::vector<int>>& rows,
                         std::size_t from_row, int x) {
    // Unrolled recursion: x ejectable in rows[d..] iff x sits in rows[d] and
    // either x-1 is absent there, or x-1 is ejectable in rows[d+1..].
    std::size_t d = from_row;
    int v = x;
    while (true) {
        if (d >= rows.size()) return false;
        const auto& row = rows[d];
        if (std::find(row.begin(), row.end(), v) == row.end()) return false;
        if (std::find(row.begin(), row.end(), v - 1) == row.end()) return true;
        --v;
        ++d;
    }
}

}  // namespace detail

bool is_ejectable(const DecreasingTableau& p, int x) {
    return detail::ejectable_in_suffix(p.rows(), 0, x);
}

BumpingPath bumping_path(const DecreasingTableau& p, Cell s) {
    if (!is_removable(p.shape(), s)) {
        fail(errc::not_removable,
             "cell (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                 ") is not removable");
    }
    BumpingPath path;
    path.steps.push_back(BumpingStep{s, p.at(s)});
    for (int r = s.row - 1; r >= 1; --r) {
        const auto& row = p.rows()[static_cast<std::size_t>(r) - 1];
        const int below = path.steps.back().value;
        // Rows decrease left to right, so the smallest entry exceeding the
        // value below is the rightmost such entry.
        int col = -1;
        for (int c = static_cast<int>(row.size()); c >= 1; --c) {
            if (row[static_cast<std::size_t>(c) - 1] > below) {
                col = c;
                break;
            }
        }
        if (col < 0) {
            fail(errc::internal, "bumping path found no entry above " + std::to_string(below) +
                                     " in row " + std::to_string(r));
        }
        path.steps.push_back(
            BumpingStep{Cell{r, col}, row[static_cast<std::size_t>(col) - 1]});
    }
    return path;
}

}  // namespace tabkit
