#include "tabkit/eg.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "tabkit/ejection.hpp"
#include "tabkit/words.hpp"

namespace tabkit {

EgReverseOutcome eg_reverse_insert(const DecreasingTableau& p, Cell s) {
    if (!is_reduced(p.row_word())) {
        fail(errc::not_reduced, "row word must be reduced for EG reverse insertion");
    }
    const BumpingPath path = bumping_path(p, s);  // raises NotRemovable

    std::vector<std::vector<int>> rows = p.rows();
    auto& last = rows[static_cast<std::size_t>(s.row) - 1];
    last.pop_back();
    if (last.empty()) rows.pop_back();

    // path.steps runs from row r down to row 1; steps[k] lives in row r-k.
    for (std::size_t k = 1; k < path.steps.size(); ++k) {
        auto& row = rows[static_cast<std::size_t>(path.steps[k].cell.row) - 1];
        const int mi = path.steps[k].value;
        if (std::find(row.begin(), row.end(), mi - 1) != row.end()) continue;
        const int below = path.steps[k - 1].value;
        *std::find(row.begin(), row.end(), mi) = below;
    }

    EgReverseOutcome out;
    out.ejected = path.steps.back().value;
    out.tableau = DecreasingTableau::from_rows(std::move(rows));
    return out;
}

namespace {

struct SlideGrid {
    std::vector<std::vector<int>> values;

    int row_len(std::size_t i) const {
        return i < values.size() ? static_cast<int>(values[i].size()) : 0;
    }
};

// Slides one value-v hole outward (down/right).  Neighbours with values
// larger than v move in; anything else acts as a wall.  Ties slide the
// entry below, keeping columns strict.
void slide_out(SlideGrid& g, std::size_t i, std::size_t j, int v) {
    while (true) {
        const bool below_live = static_cast<int>(j) < g.row_len(i + 1) && g.values[i + 1][j] > v;
        const bool right_live =
            static_cast<int>(j) + 1 < g.row_len(i) && g.values[i][j + 1] > v;
        if (below_live && (!right_live || g.values[i + 1][j] <= g.values[i][j + 1])) {
            g.values[i][j] = g.values[i + 1][j];
            ++i;
        } else if (right_live) {
            g.values[i][j] = g.values[i][j + 1];
            ++j;
        } else {
            g.values[i][j] = v;
            return;
        }
    }
}

// Mirror slide: the hole moves inward (up/left) and larger values move
// down/right past it.  Ties slide the entry above.
void slide_in(SlideGrid& g, std::size_t i, std::size_t j, int v) {
    while (true) {
        const bool above_live = i > 0 && g.values[i - 1][j] > v;
        const bool left_live = j > 0 && g.values[i][j - 1] > v;
        if (above_live && (!left_live || g.values[i - 1][j] >= g.values[i][j - 1])) {
            g.values[i][j] = g.values[i - 1][j];
            --i;
        } else if (left_live) {
            g.values[i][j] = g.values[i][j - 1];
            --j;
        } else {
            g.values[i][j] = v;
            return;
        }
    }
}

std::vector<std::vector<int>> singleton_grid(const SetRows& rows) {
    std::vector<std::vector<int>> grid;
    grid.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<int> out;
        out.reserve(row.size());
        for (const auto& cell : row) out.push_back(cell.front());
        grid.push_back(std::move(out));
    }
    return grid;
}

SetRows grid_to_singletons(const std::vector<std::vector<int>>& grid) {
    SetRows rows;
    rows.reserve(grid.size());
    for (const auto& row : grid) {
        std::vector<CellSet> out;
        out.reserve(row.size());
        for (int v : row) out.push_back(CellSet{v});
        rows.push_back(std::move(out));
    }
    return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> cells_with_value(const SlideGrid& g, int v) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        for (std::size_t j = 0; j < g.values[i].size(); ++j)
            if (g.values[i][j] == v) cells.emplace_back(i, j);
    return cells;
}

int max_value(const SlideGrid& g) {
    int m = 0;
    for (const auto& row : g.values)
        for (int v : row) m = std::max(m, v);
    return m;
}

}  // namespace

ReverseSetValuedTableau evacuate_ssyt(const SetValuedTableau& q) {
    if (!q.all_singletons()) {
        fail(errc::not_semistandard, "evacuation input must have singleton cells");
    }
    SlideGrid g{singleton_grid(q.rows())};
    const int top = max_value(g);
    for (int v = 1; v <= top; ++v) {
        auto cells = cells_with_value(g, v);
        // Rightmost first, so settled copies never block an active slide.
        std::sort(cells.begin(), cells.end(),
                  [](const auto& lhs, const auto& rhs) { return lhs.second > rhs.second; });
        for (const auto& [i, j] : cells) slide_out(g, i, j, v);
    }
    return ReverseSetValuedTableau::from_rows(grid_to_singletons(g.values));
}

SetValuedTableau evacuate_rssyt(const ReverseSetValuedTableau& q) {
    if (!q.all_singletons()) {
        fail(errc::not_semistandard, "evacuation input must have singleton cells");
    }
    SlideGrid g{singleton_grid(q.rows())};
    const int top = max_value(g);
    for (int v = top; v >= 1; --v) {
        auto cells = cells_with_value(g, v);
        std::sort(cells.begin(), cells.end(),
                  [](const auto& lhs, const auto& rhs) { return lhs.second < rhs.second; });
        for (const auto& [i, j] : cells) slide_in(g, i, j, v);
    }
    return SetValuedTableau::from_rows(grid_to_singletons(g.values));
}

}  // namespace tabkit
