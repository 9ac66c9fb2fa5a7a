#include "tabkit.h"

#include <cstring>
#include <exception>
#include <string>

#include "tabkit/json_io.hpp"
#include "tabkit/verify.hpp"

struct tk_tableau {
    tabkit::DecreasingTableau value;
};

namespace {

thread_local std::string g_last_error;

tk_status status_of(tabkit::errc code) {
    using tabkit::errc;
    switch (code) {
        case errc::ok: return TK_OK;
        case errc::parse: return TK_E_PARSE;
        case errc::length_mismatch: return TK_E_LENGTH_MISMATCH;
        case errc::not_weakly_decreasing: return TK_E_NOT_WEAKLY_DECREASING;
        case errc::equal_label_not_increasing: return TK_E_EQUAL_LABEL_NOT_INCREASING;
        case errc::letter_out_of_range: return TK_E_LETTER_OUT_OF_RANGE;
        case errc::not_a_permutation: return TK_E_NOT_A_PERMUTATION;
        case errc::not_a_partition_shape: return TK_E_NOT_A_PARTITION_SHAPE;
        case errc::row_not_decreasing: return TK_E_ROW_NOT_DECREASING;
        case errc::column_not_decreasing: return TK_E_COLUMN_NOT_DECREASING;
        case errc::empty_cell: return TK_E_EMPTY_CELL;
        case errc::row_order_violation: return TK_E_ROW_ORDER_VIOLATION;
        case errc::column_order_violation: return TK_E_COLUMN_ORDER_VIOLATION;
        case errc::entry_exceeds_bound: return TK_E_ENTRY_EXCEEDS_BOUND;
        case errc::not_removable: return TK_E_NOT_REMOVABLE;
        case errc::invalid_alpha: return TK_E_INVALID_ALPHA;
        case errc::non_positive_value: return TK_E_NON_POSITIVE_VALUE;
        case errc::duplicate_label_at_cell: return TK_E_DUPLICATE_LABEL_AT_CELL;
        case errc::shape_mismatch: return TK_E_SHAPE_MISMATCH;
        case errc::cell_not_removable: return TK_E_CELL_NOT_REMOVABLE;
        case errc::not_reduced: return TK_E_NOT_REDUCED;
        case errc::not_semistandard: return TK_E_NOT_SEMISTANDARD;
        case errc::overflow: return TK_E_OVERFLOW;
        case errc::invalid_argument: return TK_E_INVALID_ARGUMENT;
        case errc::verify_failed: return TK_E_VERIFY_FAILED;
        case errc::internal: return TK_E_INTERNAL;
    }
    return TK_E_INTERNAL;
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <class Fn>
tk_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const tabkit::Error& e) {
        g_last_error = e.detail().empty() ? e.what() : e.detail();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TK_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TK_E_INTERNAL;
    }
}

tabkit::SuiteConfig config_from_json(const char* config_json) {
    tabkit::SuiteConfig config;
    if (config_json == nullptr || *config_json == '\0') return config;
    const nlohmann::json doc = tabkit::io::parse(config_json);
    if (!doc.is_object()) tabkit::fail(tabkit::errc::parse, "config must be an object");
    auto read_int = [&doc](const char* key, int& slot) {
        if (doc.contains(key)) {
            if (!doc[key].is_number_integer()) {
                tabkit::fail(tabkit::errc::parse, std::string(key) + " must be an integer");
            }
            slot = doc[key].get<int>();
        }
    };
    read_int("sn", config.sn);
    read_int("vars", config.vars);
    read_int("max_deg", config.max_deg);
    read_int("max_len", config.max_len);
    read_int("max_entry", config.corpus_max_entry);
    read_int("max_rows", config.corpus_max_rows);
    read_int("max_cols", config.corpus_max_cols);
    read_int("pairs", config.random_pairs);
    read_int("jobs", config.jobs);
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer()) {
            tabkit::fail(tabkit::errc::parse, "seed must be an integer");
        }
        config.seed = doc["seed"].get<std::uint64_t>();
    }
    return config;
}

}  // namespace

extern "C" {

const char* tk_status_name(tk_status status) {
    switch (status) {
        case TK_OK: return "Ok";
        case TK_E_PARSE: return "ParseError";
        case TK_E_LENGTH_MISMATCH: return "LengthMismatch";
        case TK_E_NOT_WEAKLY_DECREASING: return "NotWeaklyDecreasing";
        case TK_E_EQUAL_LABEL_NOT_INCREASING: return "EqualLabelNotIncreasing";
        case TK_E_LETTER_OUT_OF_RANGE: return "LetterOutOfRange";
        case TK_E_NOT_A_PERMUTATION: return "NotAPermutation";
        case TK_E_NOT_A_PARTITION_SHAPE: return "NotAPartitionShape";
        case TK_E_ROW_NOT_DECREASING: return "RowNotDecreasing";
        case TK_E_COLUMN_NOT_DECREASING: return "ColumnNotDecreasing";
        case TK_E_EMPTY_CELL: return "EmptyCell";
        case TK_E_ROW_ORDER_VIOLATION: return "RowOrderViolation";
        case TK_E_COLUMN_ORDER_VIOLATION: return "ColumnOrderViolation";
        case TK_E_ENTRY_EXCEEDS_BOUND: return "EntryExceedsBound";
        case TK_E_NOT_REMOVABLE: return "NotRemovable";
        case TK_E_INVALID_ALPHA: return "InvalidAlpha";
        case TK_E_NON_POSITIVE_VALUE: return "NonPositiveValue";
        case TK_E_DUPLICATE_LABEL_AT_CELL: return "DuplicateLabelAtCell";
        case TK_E_SHAPE_MISMATCH: return "ShapeMismatch";
        case TK_E_CELL_NOT_REMOVABLE: return "CellNotRemovable";
        case TK_E_NOT_REDUCED: return "NotReduced";
        case TK_E_NOT_SEMISTANDARD: return "NotSemistandard";
        case TK_E_OVERFLOW: return "Overflow";
        case TK_E_INVALID_ARGUMENT: return "InvalidArgument";
        case TK_E_VERIFY_FAILED: return "VerifyFailed";
        case TK_E_INTERNAL: return "InternalError";
    }
    return "InternalError";
}

const char* tk_last_error(void) { return g_last_error.c_str(); }

void tk_string_free(char* text) { delete[] text; }

tk_status tk_tableau_from_json(const char* json, tk_tableau** out) {
    return guarded([&]() {
        if (json == nullptr || out == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        auto doc = tabkit::io::parse(json);
        *out = new tk_tableau{tabkit::io::tableau_from_json(doc)};
        return TK_OK;
    });
}

tk_status tk_tableau_to_json(const tk_tableau* tableau, char** json_out) {
    return guarded([&]() {
        if (tableau == nullptr || json_out == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        *json_out = copy_string(tabkit::io::to_json(tableau->value).dump());
        return TK_OK;
    });
}

void tk_tableau_free(tk_tableau* tableau) { delete tableau; }

tk_status tk_insert(const tk_tableau* tableau, int value, int with_trace,
                    char** outcome_json) {
    return guarded([&]() {
        if (tableau == nullptr || outcome_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const tabkit::InsertOutcome outcome = tabkit::insert(tableau->value, value);
        *outcome_json =
            copy_string(tabkit::io::insert_outcome_json(outcome, with_trace != 0).dump());
        return TK_OK;
    });
}

tk_status tk_reverse_insert(const tk_tableau* tableau, int row, int col, int alpha,
                            int with_trace, char** outcome_json) {
    return guarded([&]() {
        if (tableau == nullptr || outcome_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const tabkit::ReverseOutcome outcome =
            tabkit::reverse_insert(tableau->value, tabkit::Cell{row, col}, alpha);
        *outcome_json =
            copy_string(tabkit::io::reverse_outcome_json(outcome, with_trace != 0).dump());
        return TK_OK;
    });
}

tk_status tk_bumping_path(const tk_tableau* tableau, int row, int col, char** path_json) {
    return guarded([&]() {
        if (tableau == nullptr || path_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const tabkit::BumpingPath path =
            tabkit::bumping_path(tableau->value, tabkit::Cell{row, col});
        *path_json = copy_string(tabkit::io::to_json(path).dump());
        return TK_OK;
    });
}

tk_status tk_rsk(const char* pair_json, int increasing, char** tableaux_json) {
    return guarded([&]() {
        if (pair_json == nullptr || tableaux_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const tabkit::CompatiblePair cp =
            tabkit::io::pair_from_json(tabkit::io::parse(pair_json));
        nlohmann::json out;
        if (increasing != 0) {
            out = tabkit::io::pair_json(tabkit::correspond_increasing(cp));
        } else {
            out = tabkit::io::pair_json(tabkit::correspond(cp));
        }
        *tableaux_json = copy_string(out.dump());
        return TK_OK;
    });
}

tk_status tk_unrsk(const char* tableaux_json, int increasing, char** pair_json) {
    return guarded([&]() {
        if (tableaux_json == nullptr || pair_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const nlohmann::json doc = tabkit::io::parse(tableaux_json);
        if (!doc.is_object() || !doc.contains("P") || !doc.contains("Q")) {
            tabkit::fail(tabkit::errc::parse,
                         "expected an object with \"P\" and \"Q\" tableaux");
        }
        tabkit::CompatiblePair cp;
        if (increasing != 0) {
            cp = tabkit::inverse_correspond_increasing(
                tabkit::io::rows_from_json(doc["P"]), tabkit::io::rsvt_from_json(doc["Q"]));
        } else {
            cp = tabkit::inverse_correspond(tabkit::io::tableau_from_json(doc["P"]),
                                            tabkit::io::svt_from_json(doc["Q"]));
        }
        *pair_json = copy_string(tabkit::io::to_json(cp).dump());
        return TK_OK;
    });
}

tk_status tk_verify_expansion(const char* w_json, int vars, int max_deg, char identity,
                              char** report_json) {
    return guarded([&]() {
        if (w_json == nullptr || report_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const tabkit::Permutation w =
            tabkit::io::permutation_from_json(tabkit::io::parse(w_json));
        tabkit::ExpansionReport report;
        if (identity == 'G' || identity == 'g') {
            report = tabkit::verify_expansion_G(w, vars, max_deg);
        } else if (identity == 'F' || identity == 'f') {
            report = tabkit::verify_expansion_F(w, vars);
        } else {
            tabkit::fail(tabkit::errc::invalid_argument, "identity must be 'G' or 'F'");
        }
        *report_json = copy_string(tabkit::io::to_json(report).dump());
        if (!report.equal) {
            g_last_error = "expansion sides differ";
            return TK_E_VERIFY_FAILED;
        }
        return TK_OK;
    });
}

tk_status tk_verify_suite(const char* suite, const char* config_json, char** report_json) {
    return guarded([&]() {
        if (suite == nullptr || report_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const tabkit::SuiteConfig config = config_from_json(config_json);
        const tabkit::SuiteReport report = tabkit::run_suite(suite, config);
        nlohmann::json checks = nlohmann::json::array();
        for (const tabkit::CheckResult& check : report.checks) {
            checks.push_back(nlohmann::json{
                {"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
        }
        const nlohmann::json doc{
            {"suite", report.suite}, {"pass", report.pass}, {"checks", checks}};
        *report_json = copy_string(doc.dump());
        if (!report.pass) {
            g_last_error = "suite " + report.suite + " failed";
            return TK_E_VERIFY_FAILED;
        }
        return TK_OK;
    });
}

tk_status tk_verify_bijection(const char* w_json, int max_len, int labels,
                              char** report_json) {
    return guarded([&]() {
        if (w_json == nullptr || report_json == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const tabkit::Permutation w =
            tabkit::io::permutation_from_json(tabkit::io::parse(w_json));
        const tabkit::BijectionReport report = tabkit::verify_bijection(w, max_len, labels);
        *report_json = copy_string(tabkit::io::to_json(report).dump());
        if (!report.ok()) {
            g_last_error = report.first_failure;
            return TK_E_VERIFY_FAILED;
        }
        return TK_OK;
    });
}

tk_status tk_enumerate(const char* what, const char* config_json, char** jsonl_out) {
    return guarded([&]() {
        if (what == nullptr || jsonl_out == nullptr) {
            tabkit::fail(tabkit::errc::invalid_argument, "null argument");
        }
        const nlohmann::json config =
            (config_json == nullptr || *config_json == '\0')
                ? nlohmann::json::object()
                : tabkit::io::parse(config_json);
        if (!config.is_object()) tabkit::fail(tabkit::errc::parse, "config must be an object");

        auto int_field = [&config](const char* key, int fallback) {
            if (!config.contains(key)) return fallback;
            if (!config[key].is_number_integer()) {
                tabkit::fail(tabkit::errc::parse, std::string(key) + " must be an integer");
            }
            return config[key].get<int>();
        };

        std::string lines;
        const std::string kind(what);
        if (kind == "hecke-words") {
            if (!config.contains("w")) tabkit::fail(tabkit::errc::parse, "missing \"w\"");
            const auto w = tabkit::io::permutation_from_json(config["w"]);
            const int max_len = int_field("max_len", w.coxeter_length());
            for (const tabkit::Word& word : tabkit::enumerate_hecke_words(w, max_len)) {
                lines += tabkit::io::to_json(word).dump();
                lines += '\n';
            }
        } else if (kind == "dec-tableaux") {
            if (!config.contains("w")) tabkit::fail(tabkit::errc::parse, "missing \"w\"");
            const auto w = tabkit::io::permutation_from_json(config["w"]);
            const int max_cells = int_field("max_cells", 2 * w.coxeter_length());
            for (const tabkit::DecreasingTableau& t :
                 tabkit::enumerate_dec_tableaux(w, max_cells)) {
                lines += tabkit::io::to_json(t).dump();
                lines += '\n';
            }
        } else if (kind == "svt") {
            if (!config.contains("shape")) tabkit::fail(tabkit::errc::parse, "missing \"shape\"");
            const auto shape = tabkit::io::partition_from_json(config["shape"]);
            const int vars = int_field("vars", 3);
            const int max_weight = int_field("max_weight", shape.total() + 2);
            tabkit::for_each_svt(shape, vars, max_weight,
                                 [&lines](const tabkit::SetValuedTableau& t) {
                                     lines += tabkit::io::to_json(t).dump();
                                     lines += '\n';
                                 });
        } else {
            tabkit::fail(tabkit::errc::invalid_argument, "unknown enumeration: " + kind);
        }
        *jsonl_out = copy_string(lines);
        return TK_OK;
    });
}

}  // extern "C"
