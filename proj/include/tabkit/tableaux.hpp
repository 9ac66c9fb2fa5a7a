#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "tabkit/error.hpp"
#include "tabkit/words.hpp"

namespace tabkit {

/// Matrix-style cell coordinates, 1-based, English convention.
struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t row_count() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int total() const;

    /// Length of row r (1-based); 0 beyond the last row.
    int part(int r) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All cells at the end of their row and bottom of their column, by row.
std::vector<Cell> removable_cells(const Partition& shape);
bool is_removable(const Partition& shape, Cell s);

/// Rows and columns strictly decreasing; the insertion substrate.
class DecreasingTableau {
public:
    DecreasingTableau() = default;
    static DecreasingTableau from_rows(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int cell_count() const;
    int max_entry() const;
    Partition shape() const;

    /// Entry at a cell of the shape (1-based coordinates).
    int at(Cell s) const;

    /// Rows read left to right, listed from the last row up to the first.
    Word row_word() const;

    bool operator==(const DecreasingTableau&) const = default;
    auto operator<=>(const DecreasingTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

DecreasingTableau validate_decreasing(std::vector<std::vector<int>> rows);

/// One cell of a set-valued tableau: a nonempty strictly increasing vector.
using CellSet = std::vector<int>;
using SetRows = std::vector<std::vector<CellSet>>;

/// Set-valued tableau: max(cell) <= min(right neighbor) along rows and
/// max(cell) < min(below neighbor) down columns.  SSYT is the all-singleton
/// special case.
class SetValuedTableau {
public:
    SetValuedTableau() = default;
    static SetValuedTableau from_rows(SetRows rows);

    const SetRows& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    Partition shape() const;
    bool all_singletons() const;

    /// Total number of values over all cells.
    int value_count() const;

    /// Slot v = number of cells whose set contains v.
    ExponentVector weight(int var_count) const;

    bool operator==(const SetValuedTableau&) const = default;
    auto operator<=>(const SetValuedTableau&) const = default;

private:
    SetRows rows_;
};

/// Same data with all inequalities reversed: min(cell) >= max(right
/// neighbor), min(cell) > max(below neighbor).  RSSYT = all singletons.
class ReverseSetValuedTableau {
public:
    ReverseSetValuedTableau() = default;
    static ReverseSetValuedTableau from_rows(SetRows rows);

    const SetRows& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    Partition shape() const;
    bool all_singletons() const;
    int value_count() const;
    ExponentVector weight(int var_count) const;

    bool operator==(const ReverseSetValuedTableau&) const = default;
    auto operator<=>(const ReverseSetValuedTableau&) const = default;

private:
    SetRows rows_;
};

SetValuedTableau validate_svt(SetRows rows);
ReverseSetValuedTableau validate_rsvt(SetRows rows);

/// Entrywise reflection x -> bound+1-x.  The result of reflecting a
/// decreasing tableau is an increasing filling, so plain rows are returned.
std::vector<std::vector<int>> order_reverse(const DecreasingTableau& t, int bound);

/// Row-reading word of a plain filling (last row first, each left to right).
Word row_word_of(const std::vector<std::vector<int>>& rows);

/// True for a partition-shaped filling with strictly increasing rows and
/// columns (the order-reversed counterpart of a decreasing tableau).
bool is_increasing_tableau(const std::vector<std::vector<int>>& rows);

Partition shape_of(const std::vector<std::vector<int>>& rows);

}  // namespace tabkit
