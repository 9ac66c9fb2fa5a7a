#pragma once

#include <string>

#include <json.hpp>

#include "tabkit/eg.hpp"
#include "tabkit/expansions.hpp"
#include "tabkit/insertion.hpp"

namespace tabkit::io {

// Encodings are fixed wire formats: Word and Permutation are plain integer
// arrays, a compatible pair is {"a":[...],"i":[...]}, tableaux are
// {"rows":[...]} with set cells as strictly increasing arrays.

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const Permutation& w);
nlohmann::json to_json(const Partition& shape);
nlohmann::json to_json(const CompatiblePair& cp);
nlohmann::json to_json(const DecreasingTableau& t);
nlohmann::json to_json(const SetValuedTableau& t);
nlohmann::json to_json(const ReverseSetValuedTableau& t);
nlohmann::json to_json(const BumpingPath& path);
nlohmann::json to_json(const std::vector<CaseLabel>& trace);
nlohmann::json to_json(const TruncatedPolynomial& poly);
nlohmann::json to_json(const ExpansionReport& report);
nlohmann::json to_json(const BijectionReport& report);

nlohmann::json rows_to_json(const std::vector<std::vector<int>>& rows);

nlohmann::json insert_outcome_json(const InsertOutcome& outcome, bool with_trace);
nlohmann::json reverse_outcome_json(const ReverseOutcome& outcome, bool with_trace);
nlohmann::json pair_json(const TableauPair& pair);
nlohmann::json pair_json(const IncreasingTableauPair& pair);

/// Parses a JSON document; malformed input raises errc::parse.
nlohmann::json parse(const std::string& text);

Word word_from_json(const nlohmann::json& doc);
Permutation permutation_from_json(const nlohmann::json& doc);
Partition partition_from_json(const nlohmann::json& doc);
CompatiblePair pair_from_json(const nlohmann::json& doc);
DecreasingTableau tableau_from_json(const nlohmann::json& doc);
std::vector<std::vector<int>> rows_from_json(const nlohmann::json& doc);
SetValuedTableau svt_from_json(const nlohmann::json& doc);
ReverseSetValuedTableau rsvt_from_json(const nlohmann::json& doc);

}  // namespace tabkit::io
