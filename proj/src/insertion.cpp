#include "tabkit/insertion.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <utility>

namespace tabkit {

std::string_view case_label_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::T1: return "T1";
        case CaseLabel::D: return "D";
        case CaseLabel::DR: return "DR";
        case CaseLabel::IR: return "IR";
        case CaseLabel::IR1: return "IR1";
        case CaseLabel::IR2: return "IR2";
        case CaseLabel::NR: return "NR";
        case CaseLabel::T2: return "T2";
        case CaseLabel::InitRemove: return "INIT_REMOVE";
    }
    return "?";
}

namespace {

using Rows = std::vector<std::vector<int>>;

bool row_contains(const std::vector<int>& row, int v) {
    return std::find(row.begin(), row.end(), v) != row.end();
}

void replace_in_row(std::vector<int>& row, int from, int to) {
    auto it = std::find(row.begin(), row.end(), from);
    assert(it != row.end());
    *it = to;
}

// Smallest ejectable entry of rows[from..] strictly between lo and hi.
// Candidates live in the first row of the suffix.
int smallest_ejectable_between(const Rows& rows, std::size_t from, int lo, int hi) {
    if (from >= rows.size()) return 0;
    int best = 0;
    for (int v : rows[from]) {
        if (v <= lo || v >= hi) continue;
        if ((best == 0 || v < best) && detail::ejectable_in_suffix(rows, from, v)) best = v;
    }
    return best;
}

// Largest ejectable entry of rows[from..] strictly between lo and hi.
int largest_ejectable_between(const Rows& rows, std::size_t from, int lo, int hi) {
    if (from >= rows.size()) return 0;
    int best = 0;
    for (int v : rows[from]) {
        if (v <= lo || v >= hi) continue;
        if (v > best && detail::ejectable_in_suffix(rows, from, v)) best = v;
    }
    return best;
}

}  // namespace

ReverseOutcome reverse_insert(const DecreasingTableau& p, Cell s, int alpha) {
    if (alpha != 0 && alpha != 1) {
        fail(errc::invalid_alpha, "alpha must be 0 or 1, got " + std::to_string(alpha));
    }
    const BumpingPath path = bumping_path(p, s);  // raises NotRemovable

    // m_by_row[i] is the path value in row i (1-based).
    std::vector<int> m_by_row(static_cast<std::size_t>(s.row) + 1, 0);
    for (const BumpingStep& step : path.steps) {
        m_by_row[static_cast<std::size_t>(step.cell.row)] = step.value;
    }

    Rows rows = p.rows();
    ReverseOutcome out;

    int start_row = s.row;
    int prev_alpha = 0;  // alpha_{i+1} entering the next iteration
    int prev_m = 0;      // m_{i+1}, with the 0 sentinel for alpha = 0
    if (alpha == 1) {
        auto& last = rows[static_cast<std::size_t>(s.row) - 1];
        last.pop_back();
        if (last.empty()) rows.pop_back();
        out.trace.push_back(CaseLabel::InitRemove);
        out.alphas.push_back(1);
        prev_alpha = 1;
        prev_m = m_by_row[static_cast<std::size_t>(s.row)];
        start_row = s.row - 1;
    }

    for (int i = start_row; i >= 1; --i) {
        auto& row = rows[static_cast<std::size_t>(i) - 1];
        const int mi = m_by_row[static_cast<std::size_t>(i)];
        int alpha_i;
        if (row_contains(row, mi - 1)) {
            // Dummy: m_{i+1} = m_i - 1 already sits in this row.
            out.trace.push_back(CaseLabel::D);
            alpha_i = prev_alpha;
        } else if (prev_alpha == 1 && !row_contains(row, prev_m)) {
            // Direct replacement by the value ejected from below.
            replace_in_row(row, mi, prev_m);
            out.trace.push_back(CaseLabel::DR);
            alpha_i = 1;
        } else {
            const int x = smallest_ejectable_between(rows, static_cast<std::size_t>(i),
                                                     prev_m, mi);
            if (x != 0) {
                replace_in_row(row, mi, x);
                out.trace.push_back(CaseLabel::IR);
                alpha_i = 1;
            } else {
                out.trace.push_back(CaseLabel::NR);
                alpha_i = 0;
            }
        }
        out.alphas.push_back(alpha_i);
        prev_alpha = alpha_i;
        prev_m = mi;
    }

    out.ejected = m_by_row[1];
    out.tableau = DecreasingTableau::from_rows(std::move(rows));
    return out;
}

InsertOutcome insert(const DecreasingTableau& p, int value) {
    if (value < 1) {
        fail(errc::non_positive_value, "inserted value must be >= 1, got " + std::to_string(value));
    }

    Rows rows = p.rows();
    InsertOutcome out;

    int incoming = value;
    for (std::size_t bi = 0;; ++bi) {
        if (bi == rows.size()) rows.emplace_back();
        auto& row = rows[bi];

        // Largest entry <= incoming; rows decrease left to right so it is
        // the leftmost entry that fits.
        int j1 = -1;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] <= incoming) {
                j1 = static_cast<int>(c);
                break;
            }
        }

        if (j1 < 0) {
            row.push_back(incoming);
            out.cell = Cell{static_cast<int>(bi) + 1, static_cast<int>(row.size())};
            out.alpha = 1;
            out.trace.push_back(CaseLabel::T1);
            break;
        }

        const int n1 = row[static_cast<std::size_t>(j1)];
        row[static_cast<std::size_t>(j1)] = incoming;

        if (n1 == incoming && row_contains(row, incoming - 1)) {
            out.trace.push_back(CaseLabel::D);
            incoming = incoming - 1;
            continue;
        }
        if (n1 < incoming && !detail::ejectable_in_suffix(rows, bi + 1, n1)) {
            out.trace.push_back(CaseLabel::DR);
            incoming = n1;
            continue;
        }

        const int n2 = (static_cast<std::size_t>(j1) + 1 < row.size())
                           ? row[static_cast<std::size_t>(j1) + 1]
                           : 0;
        const int y = largest_ejectable_between(rows, bi + 1, n2, n1);
        if (y != 0) {
            out.trace.push_back(CaseLabel::IR1);
            incoming = y;
            continue;
        }
        if (n2 > 0) {
            // The entry directly below the bumped n_1, if any, never
            // exceeds n_2.
            assert(bi + 1 >= rows.size() ||
                   static_cast<std::size_t>(j1) >= rows[bi + 1].size() ||
                   rows[bi + 1][static_cast<std::size_t>(j1)] <= n2);
            out.trace.push_back(CaseLabel::IR2);
            incoming = n2;
            continue;
        }
        out.cell = Cell{static_cast<int>(bi) + 1, j1 + 1};
        out.alpha = 0;
        out.trace.push_back(CaseLabel::T2);
        break;
    }

    out.tableau = DecreasingTableau::from_rows(std::move(rows));
    return out;
}

namespace detail {

void record_label(SetRows& recording, Cell cell, int label, int alpha) {
    const std::size_t r = static_cast<std::size_t>(cell.row) - 1;
    const std::size_t c = static_cast<std::size_t>(cell.col) - 1;
    if (alpha == 1) {
        if (r == recording.size()) recording.emplace_back();
        if (r >= recording.size() || c != recording[r].size()) {
            fail(errc::internal, "recording cell does not extend the shape");
        }
        recording[r].push_back(CellSet{label});
        return;
    }
    if (r >= recording.size() || c >= recording[r].size()) {
        fail(errc::internal, "recording cell outside the shape");
    }
    CellSet& set = recording[r][c];
    auto it = std::lower_bound(set.begin(), set.end(), label);
    if (it != set.end() && *it == label) {
        fail(errc::duplicate_label_at_cell,
             "label " + std::to_string(label) + " already recorded at (" +
                 std::to_string(cell.row) + "," + std::to_string(cell.col) + ")");
    }
    set.insert(it, label);
}

}  // namespace detail

TableauPair correspond(const CompatiblePair& cp) {
    DecreasingTableau p;
    SetRows recording;
    const std::size_t n = cp.size();
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t j = n - 1 - t;  // rightmost entry first
        InsertOutcome step = insert(p, cp.a()[j]);
        detail::record_label(recording, step.cell, cp.i()[j], step.alpha);
        p = std::move(step.tableau);
    }
    return TableauPair{std::move(p), SetValuedTableau::from_rows(std::move(recording))};
}

namespace {

std::map<int, std::vector<Cell>> cells_by_label(const SetRows& rows) {
    std::map<int, std::vector<Cell>> by_label;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            for (int v : rows[r][c]) {
                by_label[v].push_back(Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1});
            }
        }
    }
    for (auto& [label, cells] : by_label) {
        std::sort(cells.begin(), cells.end(),
                  [](Cell lhs, Cell rhs) { return lhs.col > rhs.col; });
    }
    return by_label;
}

// Removes one occurrence of label at cell; true when the cell emptied and
// was deleted.  The caller keeps Q's shape synced with P's.
bool erase_label(SetRows& rows, Cell cell, int label) {
    const std::size_t r = static_cast<std::size_t>(cell.row) - 1;
    const std::size_t c = static_cast<std::size_t>(cell.col) - 1;
    CellSet& set = rows[r][c];
    auto it = std::find(set.begin(), set.end(), label);
    assert(it != set.end());
    set.erase(it);
    if (!set.empty()) return false;
    rows[r].erase(rows[r].begin() + static_cast<std::ptrdiff_t>(c));
    if (rows[r].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    return true;
}

}  // namespace

namespace detail {

CompatiblePair inverse_correspond_rows(const DecreasingTableau& p, const SetRows& recording) {
    auto by_label = cells_by_label(recording);
    SetRows remaining = recording;
    DecreasingTableau work = p;

    std::vector<int> letters;
    std::vector<int> labels;
    for (auto it = by_label.rbegin(); it != by_label.rend(); ++it) {
        const int label = it->first;
        for (Cell cell : it->second) {
            if (!is_removable(work.shape(), cell)) {
                fail(errc::cell_not_removable,
                     "undo order reached cell (" + std::to_string(cell.row) + "," +
                         std::to_string(cell.col) + ") which is not removable");
            }
            const CellSet& set = remaining[static_cast<std::size_t>(cell.row) - 1]
                                          [static_cast<std::size_t>(cell.col) - 1];
            const int alpha = (set.size() == 1) ? 1 : 0;
            ReverseOutcome step = reverse_insert(work, cell, alpha);
            work = std::move(step.tableau);
            erase_label(remaining, cell, label);
            letters.push_back(step.ejected);
            labels.push_back(label);
        }
    }
    return CompatiblePair(Word(std::move(letters)), Word(std::move(labels)));
}

}  // namespace detail

CompatiblePair inverse_correspond(const DecreasingTableau& p, const SetValuedTableau& q) {
    if (p.shape() != q.shape()) {
        fail(errc::shape_mismatch, "insertion and recording tableaux have different shapes");
    }
    return detail::inverse_correspond_rows(p, q.rows());
}

namespace {

std::vector<std::vector<int>> reflect_rows(const std::vector<std::vector<int>>& rows,
                                           int bound) {
    std::vector<std::vector<int>> out = rows;
    for (auto& row : out)
        for (auto& v : row) v = bound + 1 - v;
    return out;
}

}  // namespace

IncreasingTableauPair correspond_increasing(const CompatiblePair& cp) {
    // Flipped-comparison flavor, realized as conjugation by the order
    // reflection x -> L+1-x; the machinery only consults order tests and
    // x-1/x+1 neighbours, which the reflection transports.
    int bound = 0;
    for (int letter : cp.a()) bound = std::max(bound, letter);

    DecreasingTableau p;
    SetRows recording;
    for (std::size_t j = 0; j < cp.size(); ++j) {  // leftmost entry first
        InsertOutcome step = insert(p, bound + 1 - cp.a()[j]);
        detail::record_label(recording, step.cell, cp.i()[j], step.alpha);
        p = std::move(step.tableau);
    }
    IncreasingTableauPair out;
    out.insertion = reflect_rows(p.rows(), bound);
    out.recording = ReverseSetValuedTableau::from_rows(std::move(recording));
    return out;
}

CompatiblePair inverse_correspond_increasing(const std::vector<std::vector<int>>& p,
                                             const ReverseSetValuedTableau& q) {
    if (!is_increasing_tableau(p)) {
        fail(errc::invalid_argument, "insertion tableau is not increasing");
    }
    if (shape_of(p) != q.shape()) {
        fail(errc::shape_mismatch, "insertion and recording tableaux have different shapes");
    }

    int bound = 0;
    for (const auto& row : p)
        for (int v : row) bound = std::max(bound, v);

    DecreasingTableau work = DecreasingTableau::from_rows(reflect_rows(p, bound));
    auto by_label = cells_by_label(q.rows());
    SetRows remaining = q.rows();

    // Undo in reverse of the forward order: smallest label first, rightmost
    // column first among equal labels, emitting (a_n,i_n) back to (a_1,i_1).
    std::vector<int> letters;
    std::vector<int> labels;
    for (auto& [label, cells] : by_label) {
        for (Cell cell : cells) {
            if (!is_removable(work.shape(), cell)) {
                fail(errc::cell_not_removable,
                     "undo order reached cell (" + std::to_string(cell.row) + "," +
                         std::to_string(cell.col) + ") which is not removable");
            }
            const CellSet& set = remaining[static_cast<std::size_t>(cell.row) - 1]
                                          [static_cast<std::size_t>(cell.col) - 1];
            const int alpha = (set.size() == 1) ? 1 : 0;
            ReverseOutcome step = reverse_insert(work, cell, alpha);
            work = std::move(step.tableau);
            erase_label(remaining, cell, label);
            letters.push_back(bound + 1 - step.ejected);
            labels.push_back(label);
        }
    }
    std::reverse(letters.begin(), letters.end());
    std::reverse(labels.begin(), labels.end());
    return CompatiblePair(Word(std::move(letters)), Word(std::move(labels)));
}

}  // namespace tabkit
