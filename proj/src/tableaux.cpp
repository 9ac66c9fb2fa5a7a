#include "tabkit/tableaux.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace tabkit {

namespace {

std::string cell_str(int row, int col) {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

// Row lengths of any tableau-like structure must form a partition.
template <class Rows>
void check_partition_profile(const Rows& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) {
            fail(errc::not_a_partition_shape, "row " + std::to_string(r + 1) + " is empty");
        }
        if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) {
            fail(errc::not_a_partition_shape,
                 "row " + std::to_string(r + 2) + " is longer than row " + std::to_string(r + 1));
        }
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (parts_[r] < 1) {
            fail(errc::not_a_partition_shape, "part " + std::to_string(r + 1) + " must be >= 1");
        }
        if (r + 1 < parts_.size() && parts_[r] < parts_[r + 1]) {
            fail(errc::not_a_partition_shape, "parts must be weakly decreasing");
        }
    }
}

int Partition::total() const {
    int sum = 0;
    for (int p : parts_) sum += p;
    return sum;
}

int Partition::part(int r) const {
    if (r < 1 || r > static_cast<int>(parts_.size())) return 0;
    return parts_[static_cast<std::size_t>(r) - 1];
}

std::vector<Cell> removable_cells(const Partition& shape) {
    std::vector<Cell> out;
    const int rows = static_cast<int>(shape.row_count());
    for (int r = 1; r <= rows; ++r) {
        if (shape.part(r) > shape.part(r + 1)) {
            out.push_back(Cell{r, shape.part(r)});
        }
    }
    return out;
}

bool is_removable(const Partition& shape, Cell s) {
    return s.row >= 1 && s.col >= 1 && shape.part(s.row) == s.col &&
           shape.part(s.row + 1) < s.col;
}

DecreasingTableau DecreasingTableau::from_rows(std::vector<std::vector<int>> rows) {
    check_partition_profile(rows);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1) {
                fail(errc::non_positive_value,
                     "entry at " + cell_str(static_cast<int>(r) + 1, static_cast<int>(c) + 1) +
                         " must be >= 1");
            }
            if (c + 1 < rows[r].size() && rows[r][c] <= rows[r][c + 1]) {
                fail(errc::row_not_decreasing,
                     "at " + cell_str(static_cast<int>(r) + 1, static_cast<int>(c) + 2));
            }
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] <= rows[r + 1][c]) {
                fail(errc::column_not_decreasing,
                     "at " + cell_str(static_cast<int>(r) + 2, static_cast<int>(c) + 1));
            }
        }
    }
    DecreasingTableau t;
    t.rows_ = std::move(rows);
    return t;
}

int DecreasingTableau::cell_count() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

int DecreasingTableau::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int v : row) m = std::max(m, v);
    return m;
}

Partition DecreasingTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int DecreasingTableau::at(Cell s) const {
    if (s.row < 1 || s.row > static_cast<int>(rows_.size()) || s.col < 1 ||
        s.col > static_cast<int>(rows_[static_cast<std::size_t>(s.row) - 1].size())) {
        fail(errc::invalid_argument, "cell " + cell_str(s.row, s.col) + " outside the shape");
    }
    return rows_[static_cast<std::size_t>(s.row) - 1][static_cast<std::size_t>(s.col) - 1];
}

Word DecreasingTableau::row_word() const {
    return row_word_of(rows_);
}

DecreasingTableau validate_decreasing(std::vector<std::vector<int>> rows) {
    return DecreasingTableau::from_rows(std::move(rows));
}

namespace {

void check_cell_sets(const SetRows& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const CellSet& cell = rows[r][c];
            if (cell.empty()) {
                fail(errc::empty_cell,
                     "at " + cell_str(static_cast<int>(r) + 1, static_cast<int>(c) + 1));
            }
            for (std::size_t k = 0; k < cell.size(); ++k) {
                if (cell[k] < 1) {
                    fail(errc::non_positive_value,
                         "value at " + cell_str(static_cast<int>(r) + 1, static_cast<int>(c) + 1) +
                             " must be >= 1");
                }
                if (k + 1 < cell.size() && cell[k] >= cell[k + 1]) {
                    fail(errc::invalid_argument,
                         "cell set at " +
                             cell_str(static_cast<int>(r) + 1, static_cast<int>(c) + 1) +
                             " must be strictly increasing");
                }
            }
        }
    }
}

// reverse_order=false checks the set-valued order, true the reversed one.
void check_set_order(const SetRows& rows, bool reverse_order) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const CellSet& cell = rows[r][c];
            if (c + 1 < rows[r].size()) {
                const CellSet& right = rows[r][c + 1];
                const bool ok = reverse_order ? cell.front() >= right.back()
                                              : cell.back() <= right.front();
                if (!ok) {
                    fail(errc::row_order_violation,
                         "at " + cell_str(static_cast<int>(r) + 1, static_cast<int>(c) + 2));
                }
            }
            if (r + 1 < rows.size() && c < rows[r + 1].size()) {
                const CellSet& below = rows[r + 1][c];
                const bool ok = reverse_order ? cell.front() > below.back()
                                              : cell.back() < below.front();
                if (!ok) {
                    fail(errc::column_order_violation,
                         "at " + cell_str(static_cast<int>(r) + 2, static_cast<int>(c) + 1));
                }
            }
        }
    }
}

Partition set_rows_shape(const SetRows& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

bool set_rows_singletons(const SetRows& rows) {
    for (const auto& row : rows)
        for (const auto& cell : row)
            if (cell.size() != 1) return false;
    return true;
}

int set_rows_value_count(const SetRows& rows) {
    int n = 0;
    for (const auto& row : rows)
        for (const auto& cell : row) n += static_cast<int>(cell.size());
    return n;
}

ExponentVector set_rows_weight(const SetRows& rows, int var_count) {
    if (var_count < 0) fail(errc::invalid_argument, "variable count must be >= 0");
    ExponentVector counts(static_cast<std::size_t>(var_count), 0);
    for (const auto& row : rows) {
        for (const auto& cell : row) {
            for (int v : cell) {
                if (v > var_count) {
                    fail(errc::letter_out_of_range,
                         "value " + std::to_string(v) + " exceeds variable count " +
                             std::to_string(var_count));
                }
                ++counts[static_cast<std::size_t>(v) - 1];
            }
        }
    }
    return counts;
}

}  // namespace

SetValuedTableau SetValuedTableau::from_rows(SetRows rows) {
    check_partition_profile(rows);
    check_cell_sets(rows);
    check_set_order(rows, /*reverse_order=*/false);
    SetValuedTableau t;
    t.rows_ = std::move(rows);
    return t;
}

Partition SetValuedTableau::shape() const { return set_rows_shape(rows_); }
bool SetValuedTableau::all_singletons() const { return set_rows_singletons(rows_); }
int SetValuedTableau::value_count() const { return set_rows_value_count(rows_); }
ExponentVector SetValuedTableau::weight(int var_count) const {
    return set_rows_weight(rows_, var_count);
}

ReverseSetValuedTableau ReverseSetValuedTableau::from_rows(SetRows rows) {
    check_partition_profile(rows);
    check_cell_sets(rows);
    check_set_order(rows, /*reverse_order=*/true);
    ReverseSetValuedTableau t;
    t.rows_ = std::move(rows);
    return t;
}

Partition ReverseSetValuedTableau::shape() const { return set_rows_shape(rows_); }
bool ReverseSetValuedTableau::all_singletons() const { return set_rows_singletons(rows_); }
int ReverseSetValuedTableau::value_count() const { return set_rows_value_count(rows_); }
ExponentVector ReverseSetValuedTableau::weight(int var_count) const {
    return set_rows_weight(rows_, var_count);
}

SetValuedTableau validate_svt(SetRows rows) {
    return SetValuedTableau::from_rows(std::move(rows));
}

ReverseSetValuedTableau validate_rsvt(SetRows rows) {
    return ReverseSetValuedTableau::from_rows(std::move(rows));
}

std::vector<std::vector<int>> order_reverse(const DecreasingTableau& t, int bound) {
    std::vector<std::vector<int>> out = t.rows();
    for (auto& row : out) {
        for (auto& v : row) {
            if (v > bound) {
                fail(errc::entry_exceeds_bound,
                     "entry " + std::to_string(v) + " exceeds bound " + std::to_string(bound));
            }
            v = bound + 1 - v;
        }
    }
    return out;
}

Word row_word_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> letters;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        letters.insert(letters.end(), it->begin(), it->end());
    }
    return Word(std::move(letters));
}

bool is_increasing_tableau(const std::vector<std::vector<int>>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1) return false;
            if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
                return false;
        }
    }
    return true;
}

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

}  // namespace tabkit
