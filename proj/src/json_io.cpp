#include "tabkit/json_io.hpp"

#include <utility>

namespace tabkit::io {

using nlohmann::json;

json to_json(const Word& w) { return json(w.letters()); }

json to_json(const Permutation& w) { return json(w.images()); }

json to_json(const Partition& shape) { return json(shape.parts()); }

json to_json(const CompatiblePair& cp) {
    return json{{"a", cp.a().letters()}, {"i", cp.i().letters()}};
}

json rows_to_json(const std::vector<std::vector<int>>& rows) {
    return json{{"rows", rows}};
}

json to_json(const DecreasingTableau& t) { return rows_to_json(t.rows()); }

json to_json(const SetValuedTableau& t) { return json{{"rows", t.rows()}}; }

json to_json(const ReverseSetValuedTableau& t) { return json{{"rows", t.rows()}}; }

json to_json(const BumpingPath& path) {
    json out = json::array();
    for (const BumpingStep& step : path.steps) {
        out.push_back(json{{"row", step.cell.row}, {"col", step.cell.col}, {"value", step.value}});
    }
    return out;
}

json to_json(const std::vector<CaseLabel>& trace) {
    json out = json::array();
    for (CaseLabel label : trace) out.push_back(std::string(case_label_name(label)));
    return out;
}

json to_json(const TruncatedPolynomial& poly) {
    json terms = json::array();
    for (const auto& [exponents, coeff] : poly.terms()) {
        terms.push_back(json{{"exponents", exponents}, {"coeff", coeff}});
    }
    return json{{"vars", poly.var_count()},
                {"max_deg", poly.degree_bound()},
                {"terms", std::move(terms)}};
}

json to_json(const ExpansionReport& report) {
    json shapes = json::array();
    for (const auto& [shape, count] : report.shape_multiplicities) {
        shapes.push_back(json{{"shape", shape.parts()}, {"count", count}});
    }
    return json{{"identity", std::string(1, report.identity)},
                {"w", report.w.images()},
                {"vars", report.var_count},
                {"max_deg", report.degree_bound},
                {"equal", report.equal},
                {"counts",
                 json{{"compatible_pairs", report.counts.compatible_pairs},
                      {"tableaux", report.counts.tableaux}}},
                {"shape_multiplicities", std::move(shapes)},
                {"lhs", to_json(report.lhs)},
                {"rhs", to_json(report.rhs)}};
}

json to_json(const BijectionReport& report) {
    return json{{"w", report.w.images()},
                {"max_len", report.max_len},
                {"labels", report.label_bound},
                {"pairs_checked", report.pairs_checked},
                {"fiber_pairs_checked", report.fiber_pairs_checked},
                {"injective", report.injective},
                {"weights_preserved", report.weights_preserved},
                {"shapes_match", report.shapes_match},
                {"lands_in_dec_w", report.lands_in_dec_w},
                {"roundtrip_ok", report.roundtrip_ok},
                {"surjective", report.surjective},
                {"dual_ok", report.dual_ok},
                {"ok", report.ok()},
                {"first_failure", report.first_failure}};
}

json insert_outcome_json(const InsertOutcome& outcome, bool with_trace) {
    json out{{"tableau", to_json(outcome.tableau)},
             {"cell", json{{"row", outcome.cell.row}, {"col", outcome.cell.col}}},
             {"alpha", outcome.alpha}};
    if (with_trace) out["trace"] = to_json(outcome.trace);
    return out;
}

json reverse_outcome_json(const ReverseOutcome& outcome, bool with_trace) {
    json out{{"tableau", to_json(outcome.tableau)},
             {"m", outcome.ejected},
             {"alphas", outcome.alphas}};
    if (with_trace) out["trace"] = to_json(outcome.trace);
    return out;
}

json pair_json(const TableauPair& pair) {
    return json{{"P", to_json(pair.insertion)}, {"Q", to_json(pair.recording)}};
}

json pair_json(const IncreasingTableauPair& pair) {
    return json{{"P", rows_to_json(pair.insertion)}, {"Q", to_json(pair.recording)}};
}

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(errc::parse, "malformed JSON");
    return doc;
}

namespace {

std::vector<int> int_array(const json& doc, const char* what) {
    if (!doc.is_array()) fail(errc::parse, std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(doc.size());
    for (const auto& v : doc) {
        if (!v.is_number_integer()) {
            fail(errc::parse, std::string(what) + " must contain integers");
        }
        const auto wide = v.get<long long>();
        if (wide < -2147483648LL || wide > 2147483647LL) {
            fail(errc::parse, std::string(what) + " entry out of range");
        }
        out.push_back(static_cast<int>(wide));
    }
    return out;
}

}  // namespace

Word word_from_json(const json& doc) { return Word(int_array(doc, "word")); }

Permutation permutation_from_json(const json& doc) {
    return Permutation::one_line(int_array(doc, "permutation"));
}

Partition partition_from_json(const json& doc) {
    return Partition(int_array(doc, "partition"));
}

CompatiblePair pair_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("i")) {
        fail(errc::parse, "compatible pair must be an object with \"a\" and \"i\"");
    }
    return CompatiblePair(word_from_json(doc["a"]), word_from_json(doc["i"]));
}

std::vector<std::vector<int>> rows_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        fail(errc::parse, "tableau must be an object with a \"rows\" array");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& row : doc["rows"]) {
        rows.push_back(int_array(row, "tableau row"));
    }
    return rows;
}

DecreasingTableau tableau_from_json(const json& doc) {
    return DecreasingTableau::from_rows(rows_from_json(doc));
}

namespace {

SetRows set_rows_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        fail(errc::parse, "tableau must be an object with a \"rows\" array");
    }
    SetRows rows;
    for (const auto& row : doc["rows"]) {
        if (!row.is_array()) fail(errc::parse, "tableau row must be an array");
        std::vector<CellSet> cells;
        for (const auto& cell : row) {
            cells.push_back(int_array(cell, "cell set"));
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

SetValuedTableau svt_from_json(const json& doc) {
    return SetValuedTableau::from_rows(set_rows_from_json(doc));
}

ReverseSetValuedTableau rsvt_from_json(const json& doc) {
    return ReverseSetValuedTableau::from_rows(set_rows_from_json(doc));
}

}  // namespace tabkit::io
