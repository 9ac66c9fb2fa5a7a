#pragma once

#include <vector>

#include "tabkit/tableaux.hpp"

namespace tabkit {

struct BumpingStep {
    Cell cell;
    int value = 0;

    bool operator==(const BumpingStep&) const = default;
};

/// Reverse bumping path from a removable cell up to row 1.  steps[0] sits in
/// the starting row; values strictly increase and columns weakly increase as
/// the row index decreases.
struct BumpingPath {
    std::vector<BumpingStep> steps;

    bool operator==(const BumpingPath&) const = default;
};

/// x is ejectable when it occurs in row 1 and either x-1 is absent from
/// row 1, or x-1 is there and is recursively ejectable below row 1.
bool is_ejectable(const DecreasingTableau& p, int x);

BumpingPath bumping_path(const DecreasingTableau& p, Cell s);

namespace detail {

/// Ejectability in the subtableau formed by rows[from_row..] (0-based).
bool ejectable_in_suffix(const std::vector<std::vector<int>>& rows,
                         std::size_t from_row, int x);

}  // namespace detail

}  // namespace tabkit
