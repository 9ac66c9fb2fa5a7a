#include <doctest.h>

#include <functional>
#include <set>

#include "tabkit/expansions.hpp"
#include "tabkit/insertion.hpp"
#include "tabkit/verify.hpp"

using namespace tabkit;

namespace {

DecreasingTableau tab(std::vector<std::vector<int>> rows) {
    return DecreasingTableau::from_rows(std::move(rows));
}

std::vector<std::string> names(const std::vector<CaseLabel>& trace) {
    std::vector<std::string> out;
    for (CaseLabel label : trace) out.emplace_back(case_label_name(label));
    return out;
}

void for_each_small_tableau(const std::function<void(const DecreasingTableau&)>& fn) {
    for_each_decreasing_tableau(4, 3, 3, 9, fn);
}

// All words over {1..letters} of length <= max_len, with all compatible
// labelings bounded by the letters themselves being arbitrary.
void for_each_compatible(int letters, int max_len, int labels,
                         const std::function<void(const CompatiblePair&)>& fn) {
    std::function<void(std::vector<int>&)> with_letters = [&](std::vector<int>& a) {
        std::function<void(std::vector<int>&)> with_labels = [&](std::vector<int>& i) {
            if (i.size() == a.size()) {
                fn(CompatiblePair(Word(a), Word(i)));
                return;
            }
            const std::size_t j = i.size();
            int upper = labels;
            if (j > 0) upper = (a[j - 1] < a[j]) ? i[j - 1] : i[j - 1] - 1;
            for (int v = 1; v <= upper; ++v) {
                i.push_back(v);
                with_labels(i);
                i.pop_back();
            }
        };
        std::vector<int> i;
        with_labels(i);
        if (static_cast<int>(a.size()) == max_len) return;
        for (int v = 1; v <= letters; ++v) {
            a.push_back(v);
            with_letters(a);
            a.pop_back();
        }
    };
    std::vector<int> a;
    with_letters(a);
}

}  // namespace

TEST_CASE("reverse insertion of the five-row example") {
    const auto p = tab({{10, 9, 8}, {8, 6, 3}, {7, 5, 2}, {4, 2, 1}, {1}});
    const ReverseOutcome out = reverse_insert(p, Cell{5, 1}, 0);
    CHECK(out.tableau == tab({{10, 9, 6}, {8, 5, 3}, {7, 4, 2}, {4, 2, 1}, {1}}));
    CHECK(out.ejected == 8);
    CHECK(names(out.trace) == std::vector<std::string>{"NR", "D", "IR", "DR", "DR"});
    CHECK(out.alphas == std::vector<int>{0, 0, 1, 1, 1});
}

TEST_CASE("reverse insertion removing a cell") {
    const ReverseOutcome out = reverse_insert(tab({{4, 3, 1}, {2, 1}}), Cell{2, 2}, 1);
    CHECK(out.tableau == tab({{4, 2, 1}, {2}}));
    CHECK(out.ejected == 3);
    CHECK(names(out.trace).front() == "INIT_REMOVE");

    // The follow-up ejection is 4 whichever alpha is used.
    for (int alpha : {0, 1}) {
        const ReverseOutcome next = reverse_insert(out.tableau, Cell{2, 1}, alpha);
        CHECK(next.ejected == 4);
    }
}

TEST_CASE("reverse insertion of the last cell empties the tableau") {
    const ReverseOutcome out = reverse_insert(tab({{1}}), Cell{1, 1}, 1);
    CHECK(out.tableau == DecreasingTableau{});
    CHECK(out.ejected == 1);
}

TEST_CASE("reverse insertion rejects bad input") {
    CHECK_THROWS_WITH_AS(reverse_insert(tab({{2, 1}}), Cell{1, 1}, 0),
                         doctest::Contains("NotRemovable"), Error);
    CHECK_THROWS_WITH_AS(reverse_insert(tab({{1}}), Cell{1, 1}, 2),
                         doctest::Contains("InvalidAlpha"), Error);
}

TEST_CASE("forward insertion examples") {
    {
        const InsertOutcome out = insert(tab({{10, 9, 6}, {8, 5, 3}, {7, 4, 2}, {4, 2, 1}, {1}}), 8);
        CHECK(out.tableau == tab({{10, 9, 8}, {8, 6, 3}, {7, 5, 2}, {4, 2, 1}, {1}}));
        CHECK(out.cell == Cell{5, 1});
        CHECK(out.alpha == 0);
        CHECK(names(out.trace) == std::vector<std::string>{"DR", "DR", "IR2", "D", "T2"});
    }
    {
        const InsertOutcome out = insert(tab({{7, 4, 2}, {4, 3, 1}, {3}}), 5);
        CHECK(out.tableau == tab({{7, 5, 2}, {4, 3, 1}, {3, 1}}));
        CHECK(out.cell == Cell{3, 2});
        CHECK(out.alpha == 1);
        CHECK(names(out.trace) == std::vector<std::string>{"IR1", "IR2", "T1"});
    }
    {
        const InsertOutcome out = insert(tab({{4, 2, 1}, {2}}), 3);
        CHECK(out.tableau == tab({{4, 3, 1}, {2, 1}}));
        CHECK(out.cell == Cell{2, 2});
        CHECK(out.alpha == 1);
    }
    {
        const InsertOutcome out = insert(DecreasingTableau{}, 9);
        CHECK(out.tableau == tab({{9}}));
        CHECK(out.cell == Cell{1, 1});
        CHECK(out.alpha == 1);
        CHECK(names(out.trace) == std::vector<std::string>{"T1"});
    }
    CHECK_THROWS_WITH_AS(insert(tab({{1}}), 0), doctest::Contains("NonPositiveValue"), Error);
}

TEST_CASE("correspond reproduces the pinned tableau pairs") {
    {
        const TableauPair pair = correspond(CompatiblePair(Word({2, 4, 1, 3, 1}),
                                                           Word({3, 3, 2, 2, 1})));
        CHECK(pair.insertion == tab({{4, 2}, {3, 1}, {1}}));
        CHECK(pair.recording == validate_svt({{{1}, {2}}, {{2}, {3}}, {{3}}}));
    }
    {
        const TableauPair pair = correspond(CompatiblePair(Word({3, 1, 2, 4, 2}),
                                                           Word({5, 4, 4, 4, 2})));
        CHECK(pair.insertion == tab({{4, 3, 1}, {2, 1}}));
        CHECK(pair.recording == validate_svt({{{2}, {4}, {4}}, {{4}, {5}}}));
    }
    {
        const TableauPair pair = correspond(CompatiblePair{});
        CHECK(pair.insertion == DecreasingTableau{});
        CHECK(pair.recording == SetValuedTableau{});
    }
    {
        const TableauPair pair = correspond(CompatiblePair(Word({1, 2, 4, 1, 3, 5, 2, 4}),
                                                           Word({3, 3, 3, 2, 2, 2, 1, 1})));
        CHECK(pair.insertion == tab({{5, 4, 2, 1}, {4, 3, 1}, {2}}));
        CHECK(pair.recording ==
              validate_svt({{{1}, {1}, {2}, {3}}, {{2}, {2}, {3}}, {{3}}}));
        CHECK(pair.recording.all_singletons());
    }
}

TEST_CASE("inverse_correspond undoes correspond") {
    const CompatiblePair cp(Word({2, 4, 1, 3, 1}), Word({3, 3, 2, 2, 1}));
    CHECK(inverse_correspond(tab({{4, 2}, {3, 1}, {1}}),
                             validate_svt({{{1}, {2}}, {{2}, {3}}, {{3}}})) == cp);
    CHECK(inverse_correspond(DecreasingTableau{}, SetValuedTableau{}) == CompatiblePair{});

    for (const CompatiblePair& pair : random_compatible_pairs(99, 1000, 8, 5)) {
        const TableauPair image = correspond(pair);
        CHECK(inverse_correspond(image.insertion, image.recording) == pair);
        CHECK(image.insertion.shape() == image.recording.shape());
        CHECK(image.recording.weight(32) == weight(pair.i(), 32));
        CHECK(is_hecke_word(image.insertion.row_word().reversed(), hecke_class(pair.a())));
    }
}

TEST_CASE("inverse_correspond rejects inconsistent input") {
    CHECK_THROWS_WITH_AS(inverse_correspond(tab({{2, 1}}), validate_svt({{{1}}})),
                         doctest::Contains("ShapeMismatch"), Error);
    // A recording that is not set-valued can send the undo order to a
    // non-removable cell; the engine refuses rather than guessing.
    CHECK_THROWS_WITH_AS(
        detail::inverse_correspond_rows(tab({{2}, {1}}), SetRows{{{2}}, {{1}}}),
        doctest::Contains("CellNotRemovable"), Error);
}

TEST_CASE("correspond_increasing matches the pinned row-flavor pair") {
    const CompatiblePair cp(Word({1, 2, 4, 1, 3, 5, 2, 4}), Word({3, 3, 3, 2, 2, 2, 1, 1}));
    const IncreasingTableauPair pair = correspond_increasing(cp);
    CHECK(pair.insertion == std::vector<std::vector<int>>{{1, 2, 3, 4}, {2, 3, 5}, {4}});
    CHECK(pair.recording ==
          validate_rsvt({{{3}, {3}, {3}, {2}}, {{2}, {2}, {1}}, {{1}}}));
    CHECK(inverse_correspond_increasing(pair.insertion, pair.recording) == cp);

    const IncreasingTableauPair empty = correspond_increasing(CompatiblePair{});
    CHECK(empty.insertion.empty());
    CHECK(empty.recording == ReverseSetValuedTableau{});
}

TEST_CASE("correspond_increasing round-trips on random pairs") {
    for (const CompatiblePair& pair : random_compatible_pairs(7, 1000, 8, 5)) {
        const IncreasingTableauPair image = correspond_increasing(pair);
        CHECK(inverse_correspond_increasing(image.insertion, image.recording) == pair);
    }
}

TEST_CASE("correspond_increasing lands in increasing tableaux and reverse SVTs") {
    for_each_compatible(3, 4, 4, [](const CompatiblePair& cp) {
        const IncreasingTableauPair pair = correspond_increasing(cp);
        CHECK(is_increasing_tableau(pair.insertion));
        CHECK(shape_of(pair.insertion) == pair.recording.shape());
        CHECK(pair.recording.weight(8) == weight(cp.i(), 8));
        CHECK(is_hecke_word(row_word_of(pair.insertion), hecke_class(cp.a())));
    });
}

TEST_CASE("insert and reverse_insert are mutually inverse on a small corpus") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        for (Cell s : removable_cells(p.shape())) {
            for (int alpha : {0, 1}) {
                const ReverseOutcome back = reverse_insert(p, s, alpha);
                const InsertOutcome again = insert(back.tableau, back.ejected);
                CHECK(again.tableau == p);
                CHECK(again.cell == s);
                CHECK(again.alpha == alpha);
            }
        }
        for (int m = 1; m <= 5; ++m) {
            const InsertOutcome step = insert(p, m);
            const ReverseOutcome undo = reverse_insert(step.tableau, step.cell, step.alpha);
            CHECK(undo.tableau == p);
            CHECK(undo.ejected == m);
        }
    });
}

TEST_CASE("reverse insertion respects the Hecke class") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        for (Cell s : removable_cells(p.shape())) {
            for (int alpha : {0, 1}) {
                const ReverseOutcome out = reverse_insert(p, s, alpha);
                CHECK(hecke_class(p.row_word()) ==
                      hecke_class(out.tableau.row_word().appended(out.ejected)));
            }
        }
    });
}

TEST_CASE("forward insertion respects the Hecke class") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        for (int m = 1; m <= 5; ++m) {
            const InsertOutcome out = insert(p, m);
            CHECK(hecke_class(out.tableau.row_word()) ==
                  hecke_class(p.row_word().appended(m)));
        }
    });
}

TEST_CASE("shape change follows the alpha bit") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        const Partition shape = p.shape();
        for (Cell s : removable_cells(shape)) {
            CHECK(reverse_insert(p, s, 0).tableau.shape() == shape);
            const Partition smaller = reverse_insert(p, s, 1).tableau.shape();
            CHECK(smaller.total() == shape.total() - 1);
        }
        for (int m = 1; m <= 5; ++m) {
            const InsertOutcome step = insert(p, m);
            CHECK(is_removable(step.tableau.shape(), step.cell));
            if (step.alpha == 0) {
                CHECK(step.tableau.shape() == shape);
            } else {
                CHECK(step.tableau.shape().total() == shape.total() + 1);
            }
        }
    });
}

TEST_CASE("alpha bits match ejectability of the path values") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        for (Cell s : removable_cells(p.shape())) {
            const BumpingPath path = bumping_path(p, s);
            for (int alpha : {0, 1}) {
                const ReverseOutcome out = reverse_insert(p, s, alpha);
                REQUIRE(out.alphas.size() == static_cast<std::size_t>(s.row));
                for (int row = s.row; row >= 1; --row) {
                    const int bit = out.alphas[static_cast<std::size_t>(s.row - row)];
                    const int m_row = path.steps[static_cast<std::size_t>(s.row - row)].value;
                    const bool ejectable = detail::ejectable_in_suffix(
                        out.tableau.rows(), static_cast<std::size_t>(row) - 1, m_row);
                    CHECK((bit == 0) == ejectable);
                }
            }
        }
    });
}

TEST_CASE("successive insertions satisfy both Pieri equivalences") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        for (Cell s1 : removable_cells(p.shape())) {
            for (int a1 : {0, 1}) {
                const ReverseOutcome one = reverse_insert(p, s1, a1);
                for (Cell s2 : removable_cells(one.tableau.shape())) {
                    for (int a2 : {0, 1}) {
                        const ReverseOutcome two = reverse_insert(one.tableau, s2, a2);
                        CHECK((s2.col < s1.col) == (two.ejected > one.ejected));
                    }
                }
            }
        }
        for (int m = 1; m <= 5; ++m) {
            const InsertOutcome one = insert(p, m);
            for (int m2 = 1; m2 <= 5; ++m2) {
                const InsertOutcome two = insert(one.tableau, m2);
                CHECK((m > m2) == (one.cell.col < two.cell.col));
            }
        }
    });
}

namespace {

// Replays an insertion from its trace, checking the box condition on every
// IR2 row: the entry directly below the bumped n_1 never exceeds n_2.
void replay_checking_box(const DecreasingTableau& p, int m,
                         const std::vector<CaseLabel>& trace) {
    std::vector<std::vector<int>> rows = p.rows();
    int incoming = m;
    for (std::size_t bi = 0; bi < trace.size(); ++bi) {
        if (trace[bi] == CaseLabel::T1) return;
        auto& row = rows[bi];
        std::size_t j1 = row.size();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] <= incoming) {
                j1 = c;
                break;
            }
        }
        REQUIRE(j1 < row.size());
        const int n1 = row[j1];
        const int n2 = (j1 + 1 < row.size()) ? row[j1 + 1] : 0;
        row[j1] = incoming;
        switch (trace[bi]) {
            case CaseLabel::D:
                incoming = incoming - 1;
                break;
            case CaseLabel::DR:
                incoming = n1;
                break;
            case CaseLabel::IR1: {
                int y = 0;
                if (bi + 1 < rows.size()) {
                    for (int v : rows[bi + 1]) {
                        if (v > n2 && v < n1 && v > y &&
                            detail::ejectable_in_suffix(rows, bi + 1, v)) {
                            y = v;
                        }
                    }
                }
                REQUIRE(y != 0);
                incoming = y;
                break;
            }
            case CaseLabel::IR2:
                if (bi + 1 < rows.size() && j1 < rows[bi + 1].size()) {
                    CHECK(rows[bi + 1][j1] <= n2);
                }
                incoming = n2;
                break;
            case CaseLabel::T2:
                return;
            default:
                FAIL("unexpected label in a forward trace");
        }
    }
}

}  // namespace

TEST_CASE("box condition holds on every indirect replacement") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        for (int m = 1; m <= 5; ++m) {
            const InsertOutcome out = insert(p, m);
            replay_checking_box(p, m, out.trace);
        }
    });
}

TEST_CASE("recording a repeated label at one cell is rejected") {
    SetRows recording{{{1, 3}}};
    CHECK_THROWS_WITH_AS(detail::record_label(recording, Cell{1, 1}, 3, 0),
                         doctest::Contains("DuplicateLabelAtCell"), Error);
    CHECK_NOTHROW(detail::record_label(recording, Cell{1, 1}, 2, 0));
    CHECK(recording == SetRows{{{1, 2, 3}}});
}

TEST_CASE("traces stay within the documented label sets") {
    for_each_small_tableau([](const DecreasingTableau& p) {
        for (Cell s : removable_cells(p.shape())) {
            for (int alpha : {0, 1}) {
                const ReverseOutcome out = reverse_insert(p, s, alpha);
                for (CaseLabel label : out.trace) {
                    const bool allowed =
                        label == CaseLabel::InitRemove || label == CaseLabel::NR ||
                        label == CaseLabel::D || label == CaseLabel::DR ||
                        label == CaseLabel::IR;
                    CHECK(allowed);
                }
            }
        }
        for (int m = 1; m <= 5; ++m) {
            const InsertOutcome out = insert(p, m);
            REQUIRE(!out.trace.empty());
            const CaseLabel last = out.trace.back();
            CHECK((last == CaseLabel::T1 || last == CaseLabel::T2));
            for (std::size_t k = 0; k + 1 < out.trace.size(); ++k) {
                const CaseLabel label = out.trace[k];
                const bool allowed = label == CaseLabel::D || label == CaseLabel::DR ||
                                     label == CaseLabel::IR1 || label == CaseLabel::IR2;
                CHECK(allowed);
            }
        }
    });
}
