// tabkit command-line front end.  Thin shell over the C API: parse flags,
// hand JSON through, map statuses to exit codes (0 ok, 1 domain/verify
// failure, 2 malformed input).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tabkit.h"

namespace {

int exit_code_for(tk_status status) {
    switch (status) {
        case TK_OK:
            return 0;
        case TK_E_PARSE:
        case TK_E_LENGTH_MISMATCH:
        case TK_E_NOT_WEAKLY_DECREASING:
        case TK_E_EQUAL_LABEL_NOT_INCREASING:
        case TK_E_LETTER_OUT_OF_RANGE:
        case TK_E_NOT_A_PERMUTATION:
        case TK_E_NOT_A_PARTITION_SHAPE:
        case TK_E_ROW_NOT_DECREASING:
        case TK_E_COLUMN_NOT_DECREASING:
        case TK_E_EMPTY_CELL:
        case TK_E_ROW_ORDER_VIOLATION:
        case TK_E_COLUMN_ORDER_VIOLATION:
        case TK_E_INVALID_ARGUMENT:
            return 2;
        default:
            return 1;
    }
}

int report_failure(tk_status status) {
    std::cerr << tk_status_name(status);
    const char* detail = tk_last_error();
    if (detail != nullptr && *detail != '\0') std::cerr << ": " << detail;
    std::cerr << '\n';
    return exit_code_for(status);
}

std::string read_input(const std::string& arg) {
    if (arg.empty() || arg == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    return arg;
}

int emit(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return 0;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) {
        std::cerr << "cannot write " << out_path << '\n';
        return 1;
    }
    out << text << '\n';
    return 0;
}

int emit_and_free(char* text, const std::string& out_path) {
    const int rc = emit(text == nullptr ? "" : text, out_path);
    tk_string_free(text);
    return rc;
}

// Accepts "3142" or "3,1,4,2" and renders the one-line JSON array.
bool one_line_json(const std::string& text, std::string& out) {
    std::vector<int> images;
    if (text.find(',') != std::string::npos) {
        std::stringstream stream(text);
        std::string piece;
        while (std::getline(stream, piece, ',')) {
            try {
                images.push_back(std::stoi(piece));
            } catch (...) {
                return false;
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') return false;
            images.push_back(c - '0');
        }
    }
    out = "[";
    for (std::size_t k = 0; k < images.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(images[k]);
    }
    out += "]";
    return true;
}

struct SuiteFlags {
    int sn = 4;
    int vars = 3;
    int max_deg = 6;
    int max_len = 6;
    int max_entry = 5;
    int max_rows = 4;
    int max_cols = 4;
    int pairs = 1000;
    long long seed = 20240915;
    int jobs = 1;

    std::string to_json() const {
        std::ostringstream out;
        out << "{\"sn\":" << sn << ",\"vars\":" << vars << ",\"max_deg\":" << max_deg
            << ",\"max_len\":" << max_len << ",\"max_entry\":" << max_entry
            << ",\"max_rows\":" << max_rows << ",\"max_cols\":" << max_cols
            << ",\"pairs\":" << pairs << ",\"seed\":" << seed << ",\"jobs\":" << jobs << "}";
        return out.str();
    }
};

void add_suite_flags(CLI::App* cmd, SuiteFlags& flags) {
    cmd->add_option("--sn", flags.sn, "symmetric group degree for sweeps");
    cmd->add_option("--vars", flags.vars, "variable bound");
    cmd->add_option("--max-deg", flags.max_deg, "degree bound");
    cmd->add_option("--max-len", flags.max_len, "word length bound");
    cmd->add_option("--max-entry", flags.max_entry, "corpus entry bound");
    cmd->add_option("--max-rows", flags.max_rows, "corpus row bound");
    cmd->add_option("--max-cols", flags.max_cols, "corpus column bound");
    cmd->add_option("--pairs", flags.pairs, "random pair count");
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--jobs", flags.jobs, "parallel workers for sweeps");
}

int run_suite_command(const std::string& suite, const SuiteFlags& flags,
                      const std::string& out_path) {
    char* report = nullptr;
    const tk_status status = tk_verify_suite(suite.c_str(), flags.to_json().c_str(), &report);
    if (status != TK_OK && status != TK_E_VERIFY_FAILED) {
        tk_string_free(report);
        return report_failure(status);
    }
    const int emit_rc = emit_and_free(report, out_path);
    if (emit_rc != 0) return emit_rc;
    if (status == TK_E_VERIFY_FAILED) {
        std::cerr << "suite " << suite << ": FAIL\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"row insertion on decreasing tableaux and expansion verification"};
    app.require_subcommand(1);

    std::string tableau_arg;
    std::string input_arg;
    std::string out_path;
    std::string w_arg;
    std::string suite = "examples";
    std::string what;
    std::string shape_arg;
    std::string identity = "G";
    int value = 0;
    int row = 0;
    int col = 0;
    int alpha = 0;
    int max_cells = 12;
    int max_weight = 8;
    bool with_trace = false;
    bool increasing = false;
    SuiteFlags flags;

    auto* cmd_insert = app.add_subcommand("insert", "insert a value into a decreasing tableau");
    cmd_insert->add_option("tableau", tableau_arg, "tableau JSON or - for stdin")->required();
    cmd_insert->add_option("value", value, "positive value to insert")->required();
    cmd_insert->add_flag("--trace", with_trace, "include the case trace");
    cmd_insert->add_option("--out", out_path, "write the outcome to a file");

    auto* cmd_reverse =
        app.add_subcommand("reverse", "reverse insertion at a removable cell");
    cmd_reverse->add_option("tableau", tableau_arg, "tableau JSON or - for stdin")->required();
    cmd_reverse->add_option("row", row, "cell row (1-based)")->required();
    cmd_reverse->add_option("col", col, "cell column (1-based)")->required();
    cmd_reverse->add_option("alpha", alpha, "removal bit, 0 or 1")->required();
    cmd_reverse->add_flag("--trace", with_trace, "include the case trace");
    cmd_reverse->add_option("--out", out_path, "write the outcome to a file");

    auto* cmd_path = app.add_subcommand("path", "bumping path of a removable cell");
    cmd_path->add_option("tableau", tableau_arg, "tableau JSON or - for stdin")->required();
    cmd_path->add_option("row", row, "cell row (1-based)")->required();
    cmd_path->add_option("col", col, "cell column (1-based)")->required();
    cmd_path->add_option("--out", out_path, "write the path to a file");

    auto* cmd_rsk =
        app.add_subcommand("rsk", "map a compatible pair to a tableau pair");
    cmd_rsk->add_option("pair", input_arg, "pair JSON; stdin when omitted");
    cmd_rsk->add_flag("--increasing", increasing, "order-reversed flavor");
    cmd_rsk->add_option("--out", out_path, "write the tableau pair to a file");

    auto* cmd_unrsk =
        app.add_subcommand("unrsk", "recover the compatible pair of a tableau pair");
    cmd_unrsk->add_option("tableaux", input_arg, "{\"P\":..,\"Q\":..}; stdin when omitted");
    cmd_unrsk->add_flag("--increasing", increasing, "order-reversed flavor");
    cmd_unrsk->add_option("--out", out_path, "write the pair to a file");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify
        ->add_option("--suite", suite, "examples|roundtrip|pieri|eg|expansion")
        ->required();
    add_suite_flags(cmd_verify, flags);
    cmd_verify->add_option("--out", out_path, "write the report to a file");

    auto* cmd_eg_check = app.add_subcommand("eg-check", "corpus sweep of the reduced-case"
                                                        " agreement and evacuation");
    add_suite_flags(cmd_eg_check, flags);
    cmd_eg_check->add_option("--out", out_path, "write the report to a file");

    auto* cmd_expansion =
        app.add_subcommand("verify-expansion", "check one expansion identity");
    cmd_expansion->add_option("--w", w_arg, "permutation, e.g. 3214 or 3,2,1,4")->required();
    cmd_expansion->add_option("--vars", flags.vars, "variable bound");
    cmd_expansion->add_option("--max-deg", flags.max_deg, "degree bound");
    cmd_expansion->add_option("--identity", identity, "G or F");
    cmd_expansion->add_option("--out", out_path, "write the report to a file");

    auto* cmd_enumerate = app.add_subcommand("enumerate", "stream an enumeration as JSON lines");
    cmd_enumerate->add_option("--what", what, "hecke-words|dec-tableaux|svt")->required();
    cmd_enumerate->add_option("--w", w_arg, "permutation for word/tableau enumerations");
    cmd_enumerate->add_option("--max-len", flags.max_len, "word length bound");
    cmd_enumerate->add_option("--max-cells", max_cells, "tableau cell bound");
    cmd_enumerate->add_option("--shape", shape_arg, "partition, e.g. 2,2,1");
    cmd_enumerate->add_option("--vars", flags.vars, "label bound");
    cmd_enumerate->add_option("--max-weight", max_weight, "total value bound for svt");
    cmd_enumerate->add_option("--out", out_path, "write the stream to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_insert->parsed()) {
        tk_tableau* tableau = nullptr;
        tk_status status = tk_tableau_from_json(read_input(tableau_arg).c_str(), &tableau);
        if (status != TK_OK) return report_failure(status);
        char* outcome = nullptr;
        status = tk_insert(tableau, value, with_trace ? 1 : 0, &outcome);
        tk_tableau_free(tableau);
        if (status != TK_OK) return report_failure(status);
        return emit_and_free(outcome, out_path);
    }

    if (cmd_reverse->parsed()) {
        tk_tableau* tableau = nullptr;
        tk_status status = tk_tableau_from_json(read_input(tableau_arg).c_str(), &tableau);
        if (status != TK_OK) return report_failure(status);
        char* outcome = nullptr;
        status = tk_reverse_insert(tableau, row, col, alpha, with_trace ? 1 : 0, &outcome);
        tk_tableau_free(tableau);
        if (status != TK_OK) return report_failure(status);
        return emit_and_free(outcome, out_path);
    }

    if (cmd_path->parsed()) {
        tk_tableau* tableau = nullptr;
        tk_status status = tk_tableau_from_json(read_input(tableau_arg).c_str(), &tableau);
        if (status != TK_OK) return report_failure(status);
        char* path = nullptr;
        status = tk_bumping_path(tableau, row, col, &path);
        tk_tableau_free(tableau);
        if (status != TK_OK) return report_failure(status);
        return emit_and_free(path, out_path);
    }

    if (cmd_rsk->parsed()) {
        char* tableaux = nullptr;
        const tk_status status =
            tk_rsk(read_input(input_arg).c_str(), increasing ? 1 : 0, &tableaux);
        if (status != TK_OK) return report_failure(status);
        return emit_and_free(tableaux, out_path);
    }

    if (cmd_unrsk->parsed()) {
        char* pair = nullptr;
        const tk_status status =
            tk_unrsk(read_input(input_arg).c_str(), increasing ? 1 : 0, &pair);
        if (status != TK_OK) return report_failure(status);
        return emit_and_free(pair, out_path);
    }

    if (cmd_verify->parsed()) return run_suite_command(suite, flags, out_path);
    if (cmd_eg_check->parsed()) return run_suite_command("eg", flags, out_path);

    if (cmd_expansion->parsed()) {
        std::string w_json;
        if (!one_line_json(w_arg, w_json)) {
            std::cerr << "cannot parse permutation: " << w_arg << '\n';
            return 2;
        }
        char* report = nullptr;
        const tk_status status = tk_verify_expansion(
            w_json.c_str(), flags.vars, flags.max_deg, identity.empty() ? 'G' : identity[0],
            &report);
        if (status != TK_OK && status != TK_E_VERIFY_FAILED) {
            tk_string_free(report);
            return report_failure(status);
        }
        const int emit_rc = emit_and_free(report, out_path);
        if (emit_rc != 0) return emit_rc;
        if (status == TK_E_VERIFY_FAILED) {
            std::cerr << "expansion check: FAIL\n";
            return 1;
        }
        return 0;
    }

    if (cmd_enumerate->parsed()) {
        std::ostringstream config;
        config << "{";
        bool first = true;
        auto field = [&](const std::string& key, const std::string& value_text) {
            if (!first) config << ",";
            config << "\"" << key << "\":" << value_text;
            first = false;
        };
        if (!w_arg.empty()) {
            std::string w_json;
            if (!one_line_json(w_arg, w_json)) {
                std::cerr << "cannot parse permutation: " << w_arg << '\n';
                return 2;
            }
            field("w", w_json);
        }
        if (cmd_enumerate->count("--max-len") > 0) field("max_len", std::to_string(flags.max_len));
        if (cmd_enumerate->count("--max-cells") > 0)
            field("max_cells", std::to_string(max_cells));
        if (cmd_enumerate->count("--max-weight") > 0)
            field("max_weight", std::to_string(max_weight));
        if (cmd_enumerate->count("--vars") > 0) field("vars", std::to_string(flags.vars));
        if (!shape_arg.empty()) {
            std::string shape_json;
            if (!one_line_json(shape_arg, shape_json)) {
                std::cerr << "cannot parse shape: " << shape_arg << '\n';
                return 2;
            }
            field("shape", shape_json);
        }
        config << "}";
        char* lines = nullptr;
        const tk_status status = tk_enumerate(what.c_str(), config.str().c_str(), &lines);
        if (status != TK_OK) return report_failure(status);
        // The stream already ends with a newline per line.
        if (out_path.empty()) {
            std::cout << (lines == nullptr ? "" : lines);
            tk_string_free(lines);
            return 0;
        }
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) {
            tk_string_free(lines);
            std::cerr << "cannot write " << out_path << '\n';
            return 1;
        }
        out << (lines == nullptr ? "" : lines);
        tk_string_free(lines);
        return 0;
    }

    return 2;
}
