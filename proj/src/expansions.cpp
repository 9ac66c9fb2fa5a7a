#include "tabkit/expansions.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace tabkit {

TruncatedPolynomial::TruncatedPolynomial(int var_count, int degree_bound)
    : var_count_(var_count), degree_bound_(degree_bound) {
    if (var_count < 0 || degree_bound < 0) {
        fail(errc::invalid_argument, "polynomial bounds must be nonnegative");
    }
}

void TruncatedPolynomial::add_term(const ExponentVector& exponents, long long coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(exponents.size()) != var_count_) {
        fail(errc::internal, "exponent vector length does not match variable count");
    }
    int degree = 0;
    for (int e : exponents) degree += e;
    if (degree > degree_bound_) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        long long sum = 0;
        if (__builtin_add_overflow(it->second, coeff, &sum)) {
            fail(errc::overflow, "coefficient overflow");
        }
        if (sum == 0) {
            terms_.erase(it);
        } else {
            it->second = sum;
        }
    }
}

long long TruncatedPolynomial::coeff(const ExponentVector& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? 0 : it->second;
}

namespace {

std::mutex corpus_cache_mutex;

std::string corpus_cache_path(const Permutation& w, int max_len) {
    const char* dir = std::getenv("TABKIT_CORPUS_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    std::string name = "hecke-words-";
    if (w.is_identity()) {
        name += "id";
    } else {
        for (std::size_t k = 0; k < w.images().size(); ++k) {
            if (k > 0) name += '-';
            name += std::to_string(w.images()[k]);
        }
    }
    name += "-len" + std::to_string(max_len) + ".jsonl";
    return std::string(dir) + "/" + name;
}

bool load_cached_words(const std::string& path, std::vector<Word>& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto doc = nlohmann::json::parse(line, nullptr, false);
        if (!doc.is_array()) return false;
        std::vector<int> letters;
        for (const auto& v : doc) {
            if (!v.is_number_integer()) return false;
            letters.push_back(v.get<int>());
        }
        words.emplace_back(std::move(letters));
    }
    out = std::move(words);
    return true;
}

void store_cached_words(const std::string& path, const std::vector<Word>& words) {
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    std::ofstream out(path, std::ios::trunc);
    if (!out) return;
    for (const Word& w : words) {
        out << nlohmann::json(w.letters()).dump() << '\n';
    }
}

void hecke_word_search(const Permutation& target, int max_len, int letter_bound,
                       std::vector<int>& prefix, const Permutation& fold,
                       std::vector<Word>& out) {
    if (fold == target) out.emplace_back(prefix);
    if (static_cast<int>(prefix.size()) == max_len) return;
    for (int j = 1; j <= letter_bound; ++j) {
        Permutation next = fold.hecke_append(j);
        // The fold of a prefix is dominated by the fold of the full word,
        // so its length can never exceed l(target).
        if (next.coxeter_length() > target.coxeter_length()) continue;
        prefix.push_back(j);
        hecke_word_search(target, max_len, letter_bound, prefix, next, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_hecke_words(const Permutation& w, int max_len) {
    if (max_len < 0) fail(errc::invalid_argument, "max_len must be >= 0");
    const std::string cache = corpus_cache_path(w, max_len);
    if (!cache.empty()) {
        std::lock_guard<std::mutex> lock(corpus_cache_mutex);
        std::vector<Word> cached;
        if (load_cached_words(cache, cached)) return cached;
    }

    std::vector<Word> out;
    std::vector<int> prefix;
    hecke_word_search(w, max_len, w.support_bound() - 1, prefix, Permutation{}, out);
    std::sort(out.begin(), out.end());

    if (!cache.empty()) {
        std::lock_guard<std::mutex> lock(corpus_cache_mutex);
        store_cached_words(cache, out);
    }
    return out;
}

namespace {

void label_search(const Word& a, int label_bound, std::size_t j, std::vector<int>& labels,
                  const std::function<void(const CompatiblePair&)>& fn) {
    if (j == a.size()) {
        fn(CompatiblePair(a, Word(labels)));
        return;
    }
    int upper = label_bound;
    if (j > 0) {
        upper = (a[j - 1] < a[j]) ? labels[j - 1] : labels[j - 1] - 1;
    }
    for (int v = upper; v >= 1; --v) {
        labels.push_back(v);
        label_search(a, label_bound, j + 1, labels, fn);
        labels.pop_back();
    }
}

}  // namespace

void for_each_compatible_pair(const Permutation& w, int max_len, int label_bound,
                              const std::function<void(const CompatiblePair&)>& fn) {
    if (label_bound < 1) fail(errc::invalid_argument, "label bound must be >= 1");
    for (const Word& a : enumerate_hecke_words(w, max_len)) {
        std::vector<int> labels;
        label_search(a, label_bound, 0, labels, fn);
    }
}

std::vector<CompatiblePair> enumerate_compatible_pairs(const Permutation& w, int max_len,
                                                       int label_bound) {
    std::vector<CompatiblePair> out;
    for_each_compatible_pair(w, max_len, label_bound,
                             [&](const CompatiblePair& cp) { out.push_back(cp); });
    return out;
}

namespace {

struct TableauSearch {
    int max_entry;
    int max_rows;
    int max_cols;
    int max_cells;
    const std::function<void(const DecreasingTableau&)>* fn;
    std::vector<std::vector<int>> rows;
    int cells = 0;

    void emit() {
        (*fn)(DecreasingTableau::from_rows(rows));
    }

    // Extends the current partial row (never empty when called) and recurses
    // into completions of the whole tableau.
    void extend_row(std::size_t r) {
        emit_with_more_rows(r);
        const auto& row = rows[r];
        const int col = static_cast<int>(row.size());
        const int prev_len = r == 0 ? max_cols : static_cast<int>(rows[r - 1].size());
        if (col >= prev_len || cells >= max_cells) return;
        int cap = row.back() - 1;
        if (r > 0) cap = std::min(cap, rows[r - 1][static_cast<std::size_t>(col)] - 1);
        for (int v = cap; v >= 1; --v) {
            rows[r].push_back(v);
            ++cells;
            extend_row(r);
            --cells;
            rows[r].pop_back();
        }
    }

    // The tableau with rows[0..r] complete is emitted, then extended by
    // candidate starts of row r+1.
    void emit_with_more_rows(std::size_t r) {
        emit();
        if (static_cast<int>(r) + 1 >= max_rows || cells >= max_cells) return;
        const int cap = rows[r][0] - 1;
        for (int v = cap; v >= 1; --v) {
            rows.emplace_back(1, v);
            ++cells;
            extend_row(r + 1);
            --cells;
            rows.pop_back();
        }
    }

    void run() {
        emit();  // the empty tableau
        if (max_rows < 1 || max_cols < 1 || max_cells < 1) return;
        for (int v = max_entry; v >= 1; --v) {
            rows.emplace_back(1, v);
            ++cells;
            extend_row(0);
            --cells;
            rows.pop_back();
        }
    }
};

}  // namespace

void for_each_decreasing_tableau(int max_entry, int max_rows, int max_cols, int max_cells,
                                 const std::function<void(const DecreasingTableau&)>& fn) {
    TableauSearch search{max_entry, max_rows, max_cols, max_cells, &fn, {}, 0};
    search.run();
}

std::vector<DecreasingTableau> enumerate_dec_tableaux(const Permutation& w, int max_cells) {
    const int entry_bound = w.support_bound() - 1;
    std::vector<DecreasingTableau> out;
    for_each_decreasing_tableau(
        entry_bound, entry_bound, entry_bound, max_cells, [&](const DecreasingTableau& t) {
            if (hecke_class(t.row_word().reversed()) == w) out.push_back(t);
        });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Candidate subsets for one cell of a set-valued filling, all from
// [low..label_bound], sizes capped by budget; emitted in increasing order.
void subset_search(int low, int label_bound, int budget, std::vector<int>& chosen,
                   const std::function<void(const CellSet&)>& fn) {
    if (!chosen.empty()) fn(chosen);
    if (static_cast<int>(chosen.size()) >= budget) return;
    const int next_low = chosen.empty() ? low : chosen.back() + 1;
    for (int v = next_low; v <= label_bound; ++v) {
        chosen.push_back(v);
        subset_search(low, label_bound, budget, chosen, fn);
        chosen.pop_back();
    }
}

struct SvtSearch {
    const Partition* shape;
    int label_bound;
    int max_weight;
    bool reverse_order;
    const std::function<void(const SetRows&)>* fn;
    SetRows rows;
    int used = 0;

    int cells_remaining(int r, int c) const {
        int n = shape->part(r + 1) - c;
        for (int rr = r + 2; rr <= static_cast<int>(shape->row_count()); ++rr) {
            n += shape->part(rr);
        }
        return n;
    }

    void fill(int r, int c) {
        if (r == static_cast<int>(shape->row_count())) {
            (*fn)(rows);
            return;
        }
        if (c == shape->part(r + 1)) {
            fill(r + 1, 0);
            return;
        }
        const int budget = max_weight - used - (cells_remaining(r, c) - 1);
        if (budget < 1) return;

        int low = 1;
        int high = label_bound;
        if (!reverse_order) {
            // min(cell) >= max(left), min(cell) > max(above)
            if (c > 0) low = std::max(low, rows[static_cast<std::size_t>(r)]
                                               [static_cast<std::size_t>(c) - 1].back());
            if (r > 0) low = std::max(low, rows[static_cast<std::size_t>(r) - 1]
                                               [static_cast<std::size_t>(c)].back() + 1);
        } else {
            // max(cell) <= min(left), max(cell) < min(above)
            if (c > 0) high = std::min(high, rows[static_cast<std::size_t>(r)]
                                                 [static_cast<std::size_t>(c) - 1].front());
            if (r > 0) high = std::min(high, rows[static_cast<std::size_t>(r) - 1]
                                                 [static_cast<std::size_t>(c)].front() - 1);
        }
        if (low > high) return;

        std::vector<int> chosen;
        const int lo = reverse_order ? 1 : low;
        const int hi = reverse_order ? high : label_bound;
        subset_search(lo, hi, budget, chosen, [&](const CellSet& set) {
            rows[static_cast<std::size_t>(r)].push_back(set);
            used += static_cast<int>(set.size());
            fill(r, c + 1);
            used -= static_cast<int>(set.size());
            rows[static_cast<std::size_t>(r)].pop_back();
        });
    }

    void run() {
        rows.assign(shape->row_count(), {});
        if (shape->empty()) {
            (*fn)(rows);
            return;
        }
        if (shape->total() > max_weight) return;
        fill(0, 0);
    }
};

}  // namespace

void for_each_svt(const Partition& shape, int label_bound, int max_weight,
                  const std::function<void(const SetValuedTableau&)>& fn) {
    std::function<void(const SetRows&)> emit = [&](const SetRows& rows) {
        fn(SetValuedTableau::from_rows(rows));
    };
    SvtSearch search{&shape, label_bound, max_weight, false, &emit, {}, 0};
    search.run();
}

void for_each_rsvt(const Partition& shape, int label_bound, int max_weight,
                   const std::function<void(const ReverseSetValuedTableau&)>& fn) {
    std::function<void(const SetRows&)> emit = [&](const SetRows& rows) {
        fn(ReverseSetValuedTableau::from_rows(rows));
    };
    SvtSearch search{&shape, label_bound, max_weight, true, &emit, {}, 0};
    search.run();
}

void for_each_ssyt(const Partition& shape, int label_bound,
                   const std::function<void(const SetValuedTableau&)>& fn) {
    for_each_svt(shape, label_bound, shape.total(), [&](const SetValuedTableau& t) {
        fn(t);  // weight cap |shape| forces every cell to a singleton
    });
}

TruncatedPolynomial grothendieck_w(const Permutation& w, int var_count, int degree_bound) {
    TruncatedPolynomial out(var_count, degree_bound);
    const int length = w.coxeter_length();
    for_each_compatible_pair(w, degree_bound, var_count, [&](const CompatiblePair& cp) {
        const int n = static_cast<int>(cp.size());
        const long long sign = ((n - length) % 2 == 0) ? 1 : -1;
        out.add_term(weight(cp.i(), var_count), sign);
    });
    return out;
}

TruncatedPolynomial grothendieck_shape(const Partition& shape, int var_count,
                                       int degree_bound) {
    TruncatedPolynomial out(var_count, degree_bound);
    const int size = shape.total();
    for_each_svt(shape, var_count, degree_bound, [&](const SetValuedTableau& t) {
        const long long sign = ((t.value_count() - size) % 2 == 0) ? 1 : -1;
        out.add_term(t.weight(var_count), sign);
    });
    return out;
}

TruncatedPolynomial schur(const Partition& shape, int var_count) {
    TruncatedPolynomial out(var_count, shape.total());
    for_each_ssyt(shape, var_count, [&](const SetValuedTableau& t) {
        out.add_term(t.weight(var_count), 1);
    });
    return out;
}

TruncatedPolynomial stanley_w(const Permutation& w, int var_count) {
    const int length = w.coxeter_length();
    TruncatedPolynomial out(var_count, length);
    // Hecke words never fold below their length, so the bound l(w) leaves
    // exactly the reduced words.
    for_each_compatible_pair(w, length, var_count, [&](const CompatiblePair& cp) {
        out.add_term(weight(cp.i(), var_count), 1);
    });
    return out;
}

ExpansionReport verify_expansion_G(const Permutation& w, int var_count, int degree_bound) {
    ExpansionReport report;
    report.identity = 'G';
    report.w = w;
    report.var_count = var_count;
    report.degree_bound = degree_bound;
    report.lhs = TruncatedPolynomial(var_count, degree_bound);
    report.rhs = TruncatedPolynomial(var_count, degree_bound);

    const int length = w.coxeter_length();
    for_each_compatible_pair(w, degree_bound, var_count, [&](const CompatiblePair& cp) {
        ++report.counts.compatible_pairs;
        const int n = static_cast<int>(cp.size());
        const long long sign = ((n - length) % 2 == 0) ? 1 : -1;
        report.lhs.add_term(weight(cp.i(), var_count), sign);
    });

    std::map<Partition, TruncatedPolynomial> shape_cache;
    for (const DecreasingTableau& t : enumerate_dec_tableaux(w, degree_bound)) {
        ++report.counts.tableaux;
        const Partition shape = t.shape();
        const long long sign = ((length - shape.total()) % 2 == 0) ? 1 : -1;
        report.shape_multiplicities[shape] += sign;
        auto it = shape_cache.find(shape);
        if (it == shape_cache.end()) {
            it = shape_cache.emplace(shape, grothendieck_shape(shape, var_count, degree_bound))
                     .first;
        }
        for (const auto& [exponents, coeff] : it->second.terms()) {
            long long scaled = 0;
            if (__builtin_mul_overflow(coeff, sign, &scaled)) {
                fail(errc::overflow, "coefficient overflow");
            }
            report.rhs.add_term(exponents, scaled);
        }
    }

    report.equal = report.lhs == report.rhs;
    return report;
}

ExpansionReport verify_expansion_F(const Permutation& w, int var_count) {
    ExpansionReport report;
    report.identity = 'F';
    report.w = w;
    report.var_count = var_count;
    report.degree_bound = w.coxeter_length();
    report.lhs = TruncatedPolynomial(var_count, report.degree_bound);
    report.rhs = TruncatedPolynomial(var_count, report.degree_bound);

    for_each_compatible_pair(w, report.degree_bound, var_count, [&](const CompatiblePair& cp) {
        ++report.counts.compatible_pairs;
        report.lhs.add_term(weight(cp.i(), var_count), 1);
    });

    std::map<Partition, TruncatedPolynomial> shape_cache;
    for (const DecreasingTableau& t : enumerate_dec_tableaux(w, report.degree_bound)) {
        ++report.counts.tableaux;
        const Partition shape = t.shape();
        report.shape_multiplicities[shape] += 1;
        auto it = shape_cache.find(shape);
        if (it == shape_cache.end()) {
            it = shape_cache.emplace(shape, schur(shape, var_count)).first;
        }
        for (const auto& [exponents, coeff] : it->second.terms()) {
            report.rhs.add_term(exponents, coeff);
        }
    }

    report.equal = report.lhs == report.rhs;
    return report;
}

namespace {

std::string describe_pair(const CompatiblePair& cp) {
    std::ostringstream out;
    out << "a=";
    for (int v : cp.a()) out << v;
    out << " i=";
    for (int v : cp.i()) out << v;
    return out.str();
}

}  // namespace

BijectionReport verify_bijection(const Permutation& w, int max_len, int label_bound) {
    BijectionReport report;
    report.w = w;
    report.max_len = max_len;
    report.label_bound = label_bound;

    auto note = [&report](bool& flag, const std::string& what) {
        flag = false;
        if (report.first_failure.empty()) report.first_failure = what;
    };

    std::set<TableauPair> images;
    std::set<IncreasingTableauPair> dual_images;
    for_each_compatible_pair(w, max_len, label_bound, [&](const CompatiblePair& cp) {
        ++report.pairs_checked;
        const TableauPair pair = correspond(cp);
        if (!images.insert(pair).second) {
            note(report.injective, "duplicate image for " + describe_pair(cp));
        }
        if (pair.recording.weight(label_bound) != weight(cp.i(), label_bound)) {
            note(report.weights_preserved, "weight changed for " + describe_pair(cp));
        }
        if (pair.insertion.shape() != pair.recording.shape()) {
            note(report.shapes_match, "shapes differ for " + describe_pair(cp));
        }
        if (!is_hecke_word(pair.insertion.row_word().reversed(), w)) {
            note(report.lands_in_dec_w, "insertion tableau left Dec_w for " + describe_pair(cp));
        }
        if (inverse_correspond(pair.insertion, pair.recording) != cp) {
            note(report.roundtrip_ok, "round trip failed for " + describe_pair(cp));
        }

        const IncreasingTableauPair dual = correspond_increasing(cp);
        bool dual_fine = dual_images.insert(dual).second;
        dual_fine = dual_fine && is_increasing_tableau(dual.insertion);
        dual_fine = dual_fine && shape_of(dual.insertion) == dual.recording.shape();
        dual_fine =
            dual_fine && dual.recording.weight(label_bound) == weight(cp.i(), label_bound);
        dual_fine = dual_fine && is_hecke_word(row_word_of(dual.insertion), w);
        dual_fine =
            dual_fine && inverse_correspond_increasing(dual.insertion, dual.recording) == cp;
        if (!dual_fine) {
            note(report.dual_ok, "dual checks failed for " + describe_pair(cp));
        }
    });

    // Surjectivity: every bounded (P, Q) pair must round-trip through the
    // inverse back to itself; cardinalities then force a bijection.
    for (const DecreasingTableau& p : enumerate_dec_tableaux(w, max_len)) {
        for_each_svt(p.shape(), label_bound, max_len, [&](const SetValuedTableau& q) {
            ++report.fiber_pairs_checked;
            try {
                const CompatiblePair cp = inverse_correspond(p, q);
                const bool fine = static_cast<int>(cp.size()) <= max_len &&
                                  is_hecke_word(cp.a(), w) && correspond(cp) == TableauPair{p, q};
                if (!fine) {
                    note(report.surjective, "fiber pair failed to round trip");
                }
            } catch (const Error& e) {
                note(report.surjective, std::string("inverse failed on fiber pair: ") + e.what());
            }
        });
    }
    if (report.fiber_pairs_checked != report.pairs_checked) {
        note(report.surjective, "fiber and pair counts differ");
    }
    return report;
}

std::vector<Permutation> symmetric_group(int n) {
    if (n < 0) fail(errc::invalid_argument, "n must be >= 0");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tabkit
