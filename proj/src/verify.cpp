#include "tabkit/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "tabkit/eg.hpp"
#include "tabkit/insertion.hpp"

namespace tabkit {

namespace {

std::string word_str(const Word& w) {
    std::string out;
    for (int v : w) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out.empty() ? "(empty)" : out;
}

std::string perm_str(const Permutation& w) {
    std::string out;
    for (int v : w.images()) out += std::to_string(v);
    return out.empty() ? "id" : out;
}

void add_check(SuiteReport& report, std::string name, bool pass, std::string detail = "") {
    report.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

DecreasingTableau tab(std::vector<std::vector<int>> rows) {
    return DecreasingTableau::from_rows(std::move(rows));
}

std::vector<std::string> trace_names(const std::vector<CaseLabel>& trace) {
    std::vector<std::string> out;
    out.reserve(trace.size());
    for (CaseLabel label : trace) out.emplace_back(case_label_name(label));
    return out;
}

// The worked examples with pinned inputs and outputs.
SuiteReport examples_suite() {
    SuiteReport report;
    report.suite = "examples";

    {
        const auto p = tab({{10, 9, 8}, {8, 6, 3}, {7, 5, 2}, {4, 2, 1}, {1}});
        const ReverseOutcome out = reverse_insert(p, Cell{5, 1}, 0);
        const bool pass = out.tableau == tab({{10, 9, 6}, {8, 5, 3}, {7, 4, 2}, {4, 2, 1}, {1}}) &&
                          out.ejected == 8 &&
                          trace_names(out.trace) ==
                              std::vector<std::string>{"NR", "D", "IR", "DR", "DR"} &&
                          out.alphas == std::vector<int>{0, 0, 1, 1, 1};
        add_check(report, "reverse-insert-5x3", pass);
    }
    {
        const auto p = tab({{10, 9, 6}, {8, 5, 3}, {7, 4, 2}, {4, 2, 1}, {1}});
        const InsertOutcome out = insert(p, 8);
        const bool pass = out.tableau == tab({{10, 9, 8}, {8, 6, 3}, {7, 5, 2}, {4, 2, 1}, {1}}) &&
                          out.cell == Cell{5, 1} && out.alpha == 0 &&
                          trace_names(out.trace) ==
                              std::vector<std::string>{"DR", "DR", "IR2", "D", "T2"};
        add_check(report, "insert-8", pass);
    }
    {
        const InsertOutcome out = insert(tab({{7, 4, 2}, {4, 3, 1}, {3}}), 5);
        const bool pass = out.tableau == tab({{7, 5, 2}, {4, 3, 1}, {3, 1}}) &&
                          out.cell == Cell{3, 2} && out.alpha == 1 &&
                          trace_names(out.trace) == std::vector<std::string>{"IR1", "IR2", "T1"};
        add_check(report, "insert-5", pass);
    }
    {
        const ReverseOutcome first = reverse_insert(tab({{4, 3, 1}, {2, 1}}), Cell{2, 2}, 1);
        bool pass = first.tableau == tab({{4, 2, 1}, {2}}) && first.ejected == 3;
        for (int alpha : {0, 1}) {
            const ReverseOutcome second = reverse_insert(first.tableau, Cell{2, 1}, alpha);
            pass = pass && second.ejected == 4;
        }
        add_check(report, "successive-reverse-inserts", pass);
    }
    {
        const InsertOutcome first = insert(tab({{4, 2, 1}}), 4);
        const InsertOutcome second = insert(first.tableau, 3);
        const bool pass = first.tableau == tab({{4, 2, 1}, {2}}) && first.cell == Cell{2, 1} &&
                          first.alpha == 1 && second.tableau == tab({{4, 3, 1}, {2, 1}}) &&
                          second.cell == Cell{2, 2} && second.alpha == 1 &&
                          first.cell.col < second.cell.col;
        add_check(report, "successive-inserts", pass);
    }
    {
        const auto p = tab({{7, 6, 3, 2}, {5, 2, 1}, {3, 1}});
        add_check(report, "ejectable", is_ejectable(p, 3) && !is_ejectable(p, 7));
    }
    {
        const BumpingPath path = bumping_path(tab({{8, 7, 6}, {5, 4, 2}, {3, 2}, {1}}), Cell{3, 2});
        const bool pass = path.steps.size() == 3 && path.steps[0].value == 2 &&
                          path.steps[1].value == 4 && path.steps[2].value == 6 &&
                          path.steps[0].cell == Cell{3, 2} && path.steps[1].cell == Cell{2, 2} &&
                          path.steps[2].cell == Cell{1, 3};
        add_check(report, "bumping-path", pass);
    }
    {
        const CompatiblePair cp(Word({2, 4, 1, 3, 1}), Word({3, 3, 2, 2, 1}));
        const TableauPair pair = correspond(cp);
        const bool pass =
            pair.insertion == tab({{4, 2}, {3, 1}, {1}}) &&
            pair.recording == validate_svt({{{1}, {2}}, {{2}, {3}}, {{3}}}) &&
            inverse_correspond(pair.insertion, pair.recording) == cp;
        add_check(report, "correspond-31524", pass);
    }
    {
        const CompatiblePair cp(Word({3, 1, 2, 4, 2}), Word({5, 4, 4, 4, 2}));
        const TableauPair pair = correspond(cp);
        const bool pass = pair.insertion == tab({{4, 3, 1}, {2, 1}}) &&
                          pair.recording == validate_svt({{{2}, {4}, {4}}, {{4}, {5}}}) &&
                          inverse_correspond(pair.insertion, pair.recording) == cp;
        add_check(report, "correspond-24153", pass);
    }
    {
        const CompatiblePair cp(Word({1, 2, 4, 1, 3, 5, 2, 4}), Word({3, 3, 3, 2, 2, 2, 1, 1}));
        const TableauPair pair = correspond(cp);
        const bool pass =
            is_reduced(cp.a()) && pair.insertion == tab({{5, 4, 2, 1}, {4, 3, 1}, {2}}) &&
            pair.recording ==
                validate_svt({{{1}, {1}, {2}, {3}}, {{2}, {2}, {3}}, {{3}}}) &&
            pair.recording.all_singletons();
        add_check(report, "correspond-reduced", pass);
    }
    {
        const SetValuedTableau q = validate_svt({{{1}, {1}, {2}, {3}}, {{2}, {2}, {3}}, {{3}}});
        const ReverseSetValuedTableau ev = evacuate_ssyt(q);
        const bool pass =
            ev == validate_rsvt({{{3}, {3}, {3}, {2}}, {{2}, {2}, {1}}, {{1}}}) &&
            evacuate_rssyt(ev) == q;
        add_check(report, "evacuation", pass);
    }

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

SuiteReport roundtrip_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.suite = "roundtrip";
    const auto pairs =
        random_compatible_pairs(config.seed, config.random_pairs, 8, config.corpus_max_entry);
    bool direct = true;
    bool dual = true;
    std::string witness;
    for (const CompatiblePair& cp : pairs) {
        const TableauPair pair = correspond(cp);
        if (inverse_correspond(pair.insertion, pair.recording) != cp) {
            direct = false;
            if (witness.empty()) witness = word_str(cp.a());
        }
        const IncreasingTableauPair inc = correspond_increasing(cp);
        if (inverse_correspond_increasing(inc.insertion, inc.recording) != cp) {
            dual = false;
            if (witness.empty()) witness = word_str(cp.a());
        }
    }
    add_check(report, "decreasing-flavor", direct,
              std::to_string(pairs.size()) + " pairs" + (witness.empty() ? "" : "; " + witness));
    add_check(report, "increasing-flavor", dual, std::to_string(pairs.size()) + " pairs");
    report.pass = direct && dual;
    return report;
}

void for_each_corpus_tableau(const SuiteConfig& config,
                             const std::function<void(const DecreasingTableau&)>& fn) {
    for_each_decreasing_tableau(config.corpus_max_entry, config.corpus_max_rows,
                                config.corpus_max_cols, config.corpus_max_rows * config.corpus_max_cols,
                                fn);
}

SuiteReport pieri_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.suite = "pieri";
    long long reverse_pairs = 0;
    long long forward_pairs = 0;
    bool reverse_ok = true;
    bool forward_ok = true;
    for_each_corpus_tableau(config, [&](const DecreasingTableau& p) {
        for (Cell first : removable_cells(p.shape())) {
            for (int a1 : {0, 1}) {
                const ReverseOutcome one = reverse_insert(p, first, a1);
                for (Cell second : removable_cells(one.tableau.shape())) {
                    for (int a2 : {0, 1}) {
                        const ReverseOutcome two = reverse_insert(one.tableau, second, a2);
                        ++reverse_pairs;
                        if ((second.col < first.col) != (two.ejected > one.ejected)) {
                            reverse_ok = false;
                        }
                    }
                }
            }
        }
        const int max_value = config.corpus_max_entry + 1;
        for (int m = 1; m <= max_value; ++m) {
            const InsertOutcome one = insert(p, m);
            for (int m2 = 1; m2 <= max_value; ++m2) {
                const InsertOutcome two = insert(one.tableau, m2);
                ++forward_pairs;
                if ((m > m2) != (one.cell.col < two.cell.col)) forward_ok = false;
            }
        }
    });
    add_check(report, "reverse-pieri", reverse_ok, std::to_string(reverse_pairs) + " pairs");
    add_check(report, "forward-pieri", forward_ok, std::to_string(forward_pairs) + " pairs");
    report.pass = reverse_ok && forward_ok;
    return report;
}

SuiteReport eg_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.suite = "eg";
    long long reduced_checked = 0;
    bool agreement = true;
    bool restricted_trace = true;
    for_each_corpus_tableau(config, [&](const DecreasingTableau& p) {
        if (!is_reduced(p.row_word())) return;
        for (Cell s : removable_cells(p.shape())) {
            ++reduced_checked;
            const ReverseOutcome ours = reverse_insert(p, s, 1);
            const EgReverseOutcome eg = eg_reverse_insert(p, s);
            if (ours.tableau != eg.tableau || ours.ejected != eg.ejected) agreement = false;
            for (CaseLabel label : ours.trace) {
                if (label != CaseLabel::InitRemove && label != CaseLabel::D &&
                    label != CaseLabel::DR) {
                    restricted_trace = false;
                }
            }
        }
    });

    bool evacuation_ok = true;
    long long evacuated = 0;
    std::vector<Partition> shapes = {Partition({1}), Partition({2}),   Partition({2, 1}),
                                     Partition({3}), Partition({3, 1}), Partition({2, 2}),
                                     Partition({3, 2}), Partition({2, 2, 1})};
    for (const Partition& shape : shapes) {
        for_each_ssyt(shape, 4, [&](const SetValuedTableau& q) {
            ++evacuated;
            const ReverseSetValuedTableau ev = evacuate_ssyt(q);
            if (ev.shape() != q.shape() || ev.weight(10) != q.weight(10) ||
                evacuate_rssyt(ev) != q) {
                evacuation_ok = false;
            }
        });
    }

    add_check(report, "eg-agreement", agreement && restricted_trace,
              std::to_string(reduced_checked) + " reduced reverse insertions");
    add_check(report, "evacuation-roundtrip", evacuation_ok,
              std::to_string(evacuated) + " semistandard tableaux");
    report.pass = agreement && restricted_trace && evacuation_ok;
    return report;
}

SuiteReport expansion_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.suite = "expansion";
    const std::vector<Permutation> group = symmetric_group(config.sn);

    std::vector<CheckResult> results(group.size());
    const int jobs = std::max(1, config.jobs);
    std::vector<std::thread> workers;
    for (int worker = 0; worker < jobs; ++worker) {
        workers.emplace_back([&, worker]() {
            for (std::size_t k = static_cast<std::size_t>(worker); k < group.size();
                 k += static_cast<std::size_t>(jobs)) {
                const Permutation& w = group[k];
                try {
                    const ExpansionReport g = verify_expansion_G(w, config.vars, config.max_deg);
                    const ExpansionReport f = verify_expansion_F(w, config.vars + 1);
                    std::ostringstream detail;
                    detail << g.counts.compatible_pairs << " pairs, " << g.counts.tableaux
                           << " tableaux";
                    results[k] =
                        CheckResult{"w=" + perm_str(w), g.equal && f.equal, detail.str()};
                } catch (const std::exception& e) {
                    results[k] = CheckResult{"w=" + perm_str(w), false, e.what()};
                }
            }
        });
    }
    for (auto& worker : workers) worker.join();

    report.checks = std::move(results);
    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

}  // namespace

std::vector<CompatiblePair> random_compatible_pairs(std::uint64_t seed, int count,
                                                    int max_len, int max_letter) {
    if (count < 0 || max_len < 0 || max_letter < 1) {
        fail(errc::invalid_argument, "bad random corpus bounds");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> length_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(1, max_letter);
    std::uniform_int_distribution<int> coin(0, 1);

    std::vector<CompatiblePair> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        const int n = length_dist(rng);
        std::vector<int> letters(static_cast<std::size_t>(n));
        for (int& v : letters) v = letter_dist(rng);
        // Build labels right to left; a weak descent in the letters forces a
        // strict drop in the labels.
        std::vector<int> labels(static_cast<std::size_t>(n));
        int current = 1 + coin(rng);
        for (int j = n - 1; j >= 0; --j) {
            labels[static_cast<std::size_t>(j)] = current;
            if (j > 0) {
                const bool ascent = letters[static_cast<std::size_t>(j) - 1] <
                                    letters[static_cast<std::size_t>(j)];
                current += ascent ? coin(rng) : 1 + coin(rng);
            }
        }
        out.emplace_back(Word(std::move(letters)), Word(std::move(labels)));
    }
    return out;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
    if (name == "examples") return examples_suite();
    if (name == "roundtrip") return roundtrip_suite(config);
    if (name == "pieri") return pieri_suite(config);
    if (name == "eg") return eg_suite(config);
    if (name == "expansion") return expansion_suite(config);
    fail(errc::invalid_argument, "unknown suite: " + std::string(name));
}

}  // namespace tabkit
