#include <doctest.h>

#include <string>
#include <vector>

#include "outstanding/commands.hpp"
#include "outstanding/templates.hpp"

using namespace outstanding;
using nlohmann::json;

namespace {

void check_round_trip(const OutputRecord& record) {
    const OutputRecord via_json = OutputRecord::from_json(record.to_json());
    CHECK(via_json.kind == record.kind);
    CHECK(via_json.inputs == record.inputs);
    CHECK(via_json.payload == record.payload);

    const OutputRecord via_tsv = OutputRecord::from_tsv(record.to_tsv());
    CHECK(via_tsv.kind == record.kind);
    CHECK(via_tsv.inputs == record.inputs);
    CHECK(via_tsv.payload == record.payload);
}

}  // namespace

TEST_CASE("multiset command") {
    const OutputRecord gf = cmd_multiset("strong", "2,1", "gf");
    CHECK(gf.kind == "multiset.gf");
    CHECK(gf.payload.at("coeffs") == json::array({"0", "1", "2"}));

    const OutputRecord weak = cmd_multiset("weak", "3", "gf");
    CHECK(weak.payload.at("coeffs") == json::array({"0", "0", "0", "1"}));

    CHECK(cmd_multiset("strong", "2,1", "mean").payload.at("value") == "5/3");
    CHECK(cmd_multiset("weak", "2,1", "mean").payload.at("value") == "2");

    const OutputRecord gap = cmd_multiset("", "2,1", "gap");
    CHECK(gap.payload.at("gap") == "1/3");
    CHECK(gap.payload.at("bound") == "5/2");

    const OutputRecord darroch = cmd_multiset("", "2,1", "darroch");
    CHECK(darroch.payload.at("mode") == 2);
    CHECK(darroch.payload.at("mean") == "5/3");
    CHECK(darroch.payload.at("ok") == true);
}

TEST_CASE("multiset command usage errors") {
    CHECK_THROWS_AS(cmd_multiset("strong", "", "gf"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_multiset("strong", "2,0", "gf"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_multiset("strong", "2,-1", "gf"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_multiset("strong", "2,x", "gf"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_multiset("median", "2,1", "gf"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_multiset("strong", "2,1", "mode"), std::invalid_argument);
}

TEST_CASE("words command") {
    CHECK(cmd_words("weak", 2, 2, "gf").payload.at("coeffs") == json::array({"0", "1", "3"}));
    CHECK(cmd_words("strong", 1, 4, "gf").payload.at("coeffs") == json::array({"0", "4"}));
    CHECK(cmd_words("weak", 3, 2, "mean").payload.at("value") == "19/8");
    CHECK_THROWS_AS(cmd_words("weak", 0, 2, "gf"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_words("weak", 2, 2, "gap"), std::invalid_argument);
}

TEST_CASE("template command") {
    CHECK(cmd_template("perm", "YN*YY", std::nullopt, "prob").payload.at("value") == "1/40");
    CHECK(cmd_template("perm", "YN*YY", 5, "count").payload.at("value") == "3");
    CHECK(cmd_template("word", "S*s", 3, "count").payload.at("value") == "22");
    CHECK(cmd_template("word", "o", 5, "count").payload.at("value") == "0");

    const OutputRecord gf = cmd_template("word", "S*s", std::nullopt, "gf");
    CHECK(gf.payload.at("coeffs") == json::array({"0", "1", "3"}));
    CHECK(gf.payload.at("pole_order") == 4);

    // the zero generating function still carries its degree-0 coefficient
    const OutputRecord zero = cmd_template("word", "o", std::nullopt, "gf");
    CHECK(zero.payload.at("coeffs") == json::array({"0"}));

    CHECK_THROWS_AS(cmd_template("word", "S*s", std::nullopt, "prob"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_template("perm", "YN*YY", std::nullopt, "gf"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_template("perm", "YN*YY", std::nullopt, "count"), std::invalid_argument);
    CHECK_THROWS_AS(cmd_template("word", "S*s", std::nullopt, "count"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(cmd_template("word", "SOW", 3, "count"),
                         "invalid template letter 'O' at position 2 (expected one of S W * s o)",
                         TemplateParseError);
}

TEST_CASE("oracle commands") {
    CHECK(cmd_oracle_multiset("strong", "2,1", std::nullopt).payload.at("coeffs") ==
          json::array({"0", "1", "2"}));
    CHECK(cmd_oracle_words("weak", 2, 2, std::nullopt).payload.at("coeffs") ==
          json::array({"0", "1", "3"}));
    CHECK(cmd_oracle_perm_template("YN*YY", 5, std::nullopt).payload.at("value") == "3");
    CHECK(cmd_oracle_word_template("S*s", 2, std::nullopt).payload.at("value") == "7");
    CHECK_THROWS_AS(cmd_oracle_multiset("strong", "6,6", std::nullopt), std::invalid_argument);
    CHECK(cmd_oracle_multiset("strong", "6,6", 12).payload.at("coeffs").size() == 3);
}

TEST_CASE("verify command") {
    const OutputRecord quick = cmd_verify("gauss", std::nullopt);
    CHECK(quick.kind == "verify");
    CHECK(quick.payload.at("passed") == true);
    for (const auto& suite : quick.payload.at("suites")) {
        CHECK(suite.at("failures").empty());
        CHECK(suite.at("cases").get<long long>() > 0);
    }
    const OutputRecord capped = cmd_verify("oracle", 5);
    CHECK(capped.payload.at("passed") == true);
    CHECK(capped.inputs.at("cap") == "5");
    CHECK_THROWS_AS(cmd_verify("everything", std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(cmd_verify("oracle", 99), std::invalid_argument);
}

TEST_CASE("records round-trip through JSON and TSV") {
    check_round_trip(cmd_multiset("strong", "2,1", "gf"));
    check_round_trip(cmd_multiset("weak", "3", "gf"));
    check_round_trip(cmd_multiset("strong", "2,1", "mean"));
    check_round_trip(cmd_multiset("", "2,1", "gap"));
    check_round_trip(cmd_multiset("", "2,1", "darroch"));
    check_round_trip(cmd_words("weak", 3, 2, "gf"));
    check_round_trip(cmd_words("strong", 3, 2, "mean"));
    check_round_trip(cmd_template("perm", "YN*YY", std::nullopt, "prob"));
    check_round_trip(cmd_template("word", "S*s", 3, "count"));
    check_round_trip(cmd_template("word", "S*s", std::nullopt, "gf"));
    check_round_trip(cmd_oracle_multiset("strong", "2,1", std::nullopt));
    check_round_trip(cmd_oracle_perm_template("YN*YY", 5, std::nullopt));
    check_round_trip(cmd_verify("gauss", std::nullopt));
    check_round_trip(cmd_verify("all", 4));

    // a verify record with failures keeps its counterexamples through TSV
    OutputRecord failing;
    failing.kind = "verify";
    failing.inputs = {{"suite", "oracle"}};
    failing.payload = {
        {"passed", false},
        {"suites",
         json::array({{{"name", "oracle"},
                       {"cases", 7},
                       {"failures", json::array({{{"case", "multiset mult=2,1 strong-gf"},
                                                  {"detail", "[0 1 2] vs oracle [0 2 1]"}},
                                                 {{"case", "words n=2 k=2 weak-gf"},
                                                  {"detail", "sum 15 vs 16"}}})}}})}};
    check_round_trip(failing);
}
