#include <doctest.h>

#include "tabkit/json_io.hpp"
#include "tabkit/verify.hpp"

using namespace tabkit;

TEST_CASE("wire formats are the documented ones") {
    CHECK(io::to_json(Word({2, 4, 1, 3, 1})).dump() == "[2,4,1,3,1]");
    CHECK(io::to_json(Permutation::one_line({3, 1, 5, 2, 4})).dump() == "[3,1,5,2,4]");
    CHECK(io::to_json(Partition({2, 2, 1})).dump() == "[2,2,1]");
    CHECK(io::to_json(CompatiblePair(Word({1}), Word({2}))).dump() == "{\"a\":[1],\"i\":[2]}");
    CHECK(io::to_json(DecreasingTableau::from_rows({{4, 2}, {3, 1}, {1}})).dump() ==
          "{\"rows\":[[4,2],[3,1],[1]]}");
    CHECK(io::to_json(validate_svt({{{1}, {2}}, {{2}, {3}}, {{3}}})).dump() ==
          "{\"rows\":[[[1],[2]],[[2],[3]],[[3]]]}");

    const BumpingPath path =
        bumping_path(DecreasingTableau::from_rows({{2, 1}, {1}}), Cell{2, 1});
    CHECK(io::to_json(path).dump() ==
          "[{\"col\":1,\"row\":2,\"value\":1},{\"col\":1,\"row\":1,\"value\":2}]");

    CHECK(io::to_json(std::vector<CaseLabel>{CaseLabel::DR, CaseLabel::IR2, CaseLabel::T2})
              .dump() == "[\"DR\",\"IR2\",\"T2\"]");
}

TEST_CASE("parse rejects malformed documents") {
    CHECK_THROWS_WITH_AS(io::parse("{"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_AS(io::word_from_json(io::parse("{\"x\":1}")), Error);
    CHECK_THROWS_AS(io::word_from_json(io::parse("[1,\"two\"]")), Error);
    CHECK_THROWS_AS(io::tableau_from_json(io::parse("{\"rose\":[[1]]}")), Error);
    CHECK_THROWS_AS(io::pair_from_json(io::parse("{\"a\":[1]}")), Error);
}

TEST_CASE("decode validates domain rules") {
    CHECK_THROWS_WITH_AS(io::word_from_json(io::parse("[0]")),
                         doctest::Contains("LetterOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(io::permutation_from_json(io::parse("[1,1]")),
                         doctest::Contains("NotAPermutation"), Error);
    CHECK_THROWS_WITH_AS(io::tableau_from_json(io::parse("{\"rows\":[[1,2]]}")),
                         doctest::Contains("RowNotDecreasing"), Error);
    CHECK_THROWS_WITH_AS(io::svt_from_json(io::parse("{\"rows\":[[[2],[1]]]}")),
                         doctest::Contains("RowOrderViolation"), Error);
}

TEST_CASE("decode then encode is the identity on valid documents") {
    const std::vector<std::string> fixtures = {
        "[2,4,1,3,1]",
        "{\"rows\":[[7,6,3,2],[5,2,1],[3,1]]}",
        "{\"rows\":[[[1],[2]],[[2],[3]],[[3]]]}",
        "{\"rows\":[]}",
    };
    CHECK(io::to_json(io::word_from_json(io::parse(fixtures[0]))).dump() == fixtures[0]);
    CHECK(io::to_json(io::tableau_from_json(io::parse(fixtures[1]))).dump() == fixtures[1]);
    CHECK(io::to_json(io::svt_from_json(io::parse(fixtures[2]))).dump() == fixtures[2]);
    CHECK(io::to_json(io::tableau_from_json(io::parse(fixtures[3]))).dump() == fixtures[3]);
}

TEST_CASE("random pairs survive the JSON round trip") {
    for (const CompatiblePair& cp : random_compatible_pairs(3, 200, 7, 5)) {
        const auto doc = io::to_json(cp);
        CHECK(io::pair_from_json(io::parse(doc.dump())) == cp);
        const TableauPair pair = correspond(cp);
        const auto tdoc = io::to_json(pair.insertion);
        const auto qdoc = io::to_json(pair.recording);
        CHECK(io::tableau_from_json(io::parse(tdoc.dump())) == pair.insertion);
        CHECK(io::svt_from_json(io::parse(qdoc.dump())) == pair.recording);
    }
}

TEST_CASE("outcome documents") {
    const InsertOutcome out = insert(DecreasingTableau{}, 1);
    CHECK(io::insert_outcome_json(out, true).dump() ==
          "{\"alpha\":1,\"cell\":{\"col\":1,\"row\":1},\"tableau\":{\"rows\":[[1]]},"
          "\"trace\":[\"T1\"]}");
    CHECK_FALSE(io::insert_outcome_json(out, false).contains("trace"));

    const ReverseOutcome back =
        reverse_insert(DecreasingTableau::from_rows({{1}}), Cell{1, 1}, 1);
    const auto doc = io::reverse_outcome_json(back, true);
    CHECK(doc["m"] == 1);
    CHECK(doc["tableau"]["rows"].empty());
    CHECK(doc["trace"] == nlohmann::json::array({"INIT_REMOVE"}));
}
