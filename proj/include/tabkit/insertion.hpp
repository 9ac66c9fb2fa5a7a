#pragma once

#include <string_view>
#include <vector>

#include "tabkit/ejection.hpp"
#include "tabkit/tableaux.hpp"
#include "tabkit/words.hpp"

namespace tabkit {

/// Per-row case labels of the two algorithms.  Reverse insertion emits
/// INIT_REMOVE/NR/D/DR/IR; forward insertion emits D/DR/IR1/IR2 with a final
/// T1 or T2.
enum class CaseLabel {
    T1,
    D,
    DR,
    IR,
    IR1,
    IR2,
    NR,
    T2,
    InitRemove,
};

std::string_view case_label_name(CaseLabel label);

struct ReverseOutcome {
    DecreasingTableau tableau;      ///< P'
    int ejected = 0;                ///< m = m_1
    std::vector<CaseLabel> trace;   ///< one label per processed row, r down to 1
    std::vector<int> alphas;        ///< alpha_r .. alpha_1
};

struct InsertOutcome {
    DecreasingTableau tableau;      ///< P'
    Cell cell;                      ///< removable cell where the run ended
    int alpha = 0;
    std::vector<CaseLabel> trace;
};

/// Reverse row insertion: removes/rewrites along the bumping path of s and
/// ejects the row-1 path value.  shape(P') = shape(P) minus s when alpha=1,
/// unchanged when alpha=0.
ReverseOutcome reverse_insert(const DecreasingTableau& p, Cell s, int alpha);

/// Row insertion of a positive value; the inverse of reverse_insert.
/// shape(P') gains the output cell when alpha=1, is unchanged when alpha=0.
InsertOutcome insert(const DecreasingTableau& p, int value);

struct TableauPair {
    DecreasingTableau insertion;
    SetValuedTableau recording;

    bool operator==(const TableauPair&) const = default;
    auto operator<=>(const TableauPair&) const = default;
};

/// Full correspondence: inserts the letters of a from the right end, labels
/// each outcome cell with the matching i-letter.  Weight preserving; the
/// recording tableau is set-valued of the same shape.
TableauPair correspond(const CompatiblePair& cp);

/// Inverse of correspond: peels labels off Q from the largest down
/// (rightmost column first among equal labels) and reverse-inserts.
CompatiblePair inverse_correspond(const DecreasingTableau& p, const SetValuedTableau& q);

struct IncreasingTableauPair {
    std::vector<std::vector<int>> insertion;  ///< increasing tableau rows
    ReverseSetValuedTableau recording;

    bool operator==(const IncreasingTableauPair&) const = default;
    auto operator<=>(const IncreasingTableauPair&) const = default;
};

/// Order-reversed flavor: all entry comparisons flipped, letters processed
/// from the left end; lands in increasing tableaux paired with reverse
/// set-valued recording tableaux.
IncreasingTableauPair correspond_increasing(const CompatiblePair& cp);

CompatiblePair inverse_correspond_increasing(const std::vector<std::vector<int>>& p,
                                             const ReverseSetValuedTableau& q);

namespace detail {

/// Records a label at a cell of a working recording tableau.  alpha=1 adds
/// the cell as a new singleton, alpha=0 inserts into the existing set;
/// a repeated label at one cell signals a broken invariant upstream.
void record_label(SetRows& recording, Cell cell, int label, int alpha);

/// Undo engine behind inverse_correspond, without the set-valued validation
/// of the recording rows.  On malformed recordings the undo order can reach
/// a non-removable cell, which raises cell_not_removable.
CompatiblePair inverse_correspond_rows(const DecreasingTableau& p, const SetRows& recording);

}  // namespace detail

}  // namespace tabkit
