#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "acb3/errors.hpp"
#include "acb3/families.hpp"
#include "acb3/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace acb3;

namespace {

const std::string kExampleDoc = R"({
  "mode": "exact",
  "structure_constants": [
    {"i": 0, "j": 1, "coefficients": {"1": "-1", "2": "-3"}},
    {"i": 0, "j": 2, "coefficients": {"1": "-3", "2": "1"}}
  ]
})";

}  // namespace

TEST_CASE("documents parse into structure constants") {
    InputDocument doc = parse_input_document(kExampleDoc);
    CHECK(doc.mode == Mode::Exact);
    StructureConstants c = to_structure_constants(doc);
    CHECK(c == construct_example({Rational(1), Rational(3)}));
}

TEST_CASE("bare integers and fraction strings both work") {
    InputDocument doc = parse_input_document(R"({
      "structure_constants": [
        {"i": 1, "j": 2, "coefficients": {"0": 2, "1": "29/8"}}
      ]
    })");
    StructureConstants c = to_structure_constants(doc);
    CHECK(c.get(0, 1, 2) == 2);
    CHECK(c.get(1, 1, 2) == Rational(29, 8));
    CHECK(c.get(0, 2, 1) == -2);  // antisymmetry
}

TEST_CASE("emit produces canonical documents that re-parse identically") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        StructureConstants c = random_lie_algebra(seed, Rational(4));
        InputDocument doc = document_from_constants(c, Mode::Exact, Rational(0));
        std::string text = emit_input_document(doc);
        InputDocument back = parse_input_document(text);
        CHECK(back == doc);
        CHECK(to_structure_constants(back) == c);
    }
}

TEST_CASE("float-mode documents carry a tolerance") {
    InputDocument doc = parse_input_document(R"({
      "mode": "float",
      "tolerance": "1e-9",
      "structure_constants": [
        {"i": 0, "j": 1, "coefficients": {"1": 0.5}}
      ]
    })");
    CHECK(doc.mode == Mode::Float);
    CHECK(doc.tolerance == Rational(1, 1000000000));
    // Float literals embed as their exact binary64 value.
    CHECK(to_structure_constants(doc).get(1, 0, 1) == Rational(1, 2));
    CHECK(tolerance_of(doc).eps == Rational(1, 1000000000));

    InputDocument round = parse_input_document(emit_input_document(doc));
    CHECK(round == doc);

    InputDocument no_tol = parse_input_document(R"({
      "mode": "float",
      "structure_constants": []
    })");
    CHECK(tolerance_of(no_tol).eps == Rational(1, 1000000000));  // default
}

TEST_CASE("exact mode rejects what it cannot represent faithfully") {
    // Float literal coefficients would silently commit to binary rounding.
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [
        {"i": 0, "j": 1, "coefficients": {"1": 0.5}}
      ]
    })"),
                    ParseError);
    // Tolerance is meaningless without float mode.
    CHECK_THROWS_AS(parse_input_document(R"({
      "mode": "exact",
      "tolerance": "1e-9",
      "structure_constants": []
    })"),
                    ParseError);
}

TEST_CASE("structural validation of the document") {
    CHECK_THROWS_AS(parse_input_document("not json"), ParseError);
    CHECK_THROWS_AS(parse_input_document("{}"), ParseError);  // missing list
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [{"i": 1, "j": 0, "coefficients": {"0": 1}}]
    })"),
                    ParseError);  // i < j required
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [{"i": 1, "j": 1, "coefficients": {"0": 1}}]
    })"),
                    ParseError);  // diagonal pair
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [
        {"i": 0, "j": 1, "coefficients": {"0": 1}},
        {"i": 0, "j": 1, "coefficients": {"0": 2}}
      ]
    })"),
                    ParseError);  // duplicate pair
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [{"i": 0, "j": 3, "coefficients": {"0": 1}}]
    })"),
                    ParseError);  // index out of range
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [{"i": 0, "j": 1, "coefficients": {"3": 1}}]
    })"),
                    ParseError);  // coefficient key out of range
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [{"i": 0, "j": 1, "coefficients": {"0": "1/0"}}]
    })"),
                    ParseError);  // zero denominator
    CHECK_THROWS_AS(parse_input_document(R"({
      "mode": "approximate",
      "structure_constants": []
    })"),
                    ParseError);  // unknown mode
    CHECK_THROWS_AS(parse_input_document(R"({
      "structure_constants": [], "extra": 1
    })"),
                    ParseError);  // unknown key
}

TEST_CASE("analysis report renders machine-readable JSON") {
    StructureConstants c = construct_example({Rational(1), Rational(3)});
    AnalysisReport rep = analyze(c, exact_tolerance());
    CHECK(rep.lie_algebra);

    nlohmann::json j = nlohmann::json::parse(render_json(rep));
    CHECK(j["lie_algebra"] == true);
    CHECK(j["classification"]["membership"] ==
          nlohmann::json::array({"F9", "F10"}));
    CHECK(j["classification"]["parameters"]["mu"] == "1");
    CHECK(j["classification"]["parameters"]["nu"] == "-6");
    CHECK(j["curvature"]["tau"] == "-2");
    CHECK(j["curvature"]["tau_star"] == "-12");
    CHECK(j["curvature"]["flat"] == false);
    CHECK(j["curvature"]["r3_defect"] == "0");
    CHECK(j["template_check"].is_null());
    CHECK(j["documented_discrepancies"].is_array());
    CHECK(!j["documented_discrepancies"].empty());

    nlohmann::json subset = nlohmann::json::parse(render_json(rep, false));
    CHECK(!subset.contains("curvature"));
    CHECK(subset["classification"]["parameters"]["mu"] == "1");
}

TEST_CASE("analysis report renders sorted nonzero pretty text") {
    StructureConstants f10 =
        construct_class_family({ClassId::F10, Rational(3), Rational(0)});
    AnalysisReport rep = analyze(f10, exact_tolerance());
    std::string pretty = render_pretty(rep);
    CHECK(pretty.find("lie algebra: yes") != std::string::npos);
    CHECK(pretty.find("membership: F10") != std::string::npos);
    CHECK(pretty.find("flat: true") != std::string::npos);

    StructureConstants f8 =
        construct_class_family({ClassId::F8, Rational(2), Rational(0)});
    std::string full = render_pretty(analyze(f8, exact_tolerance()));
    CHECK(full.find("tau = -8") != std::string::npos);
    CHECK(full.find("k12 = 4") != std::string::npos);

    std::string subset = render_pretty(analyze(f8, exact_tolerance()), false);
    CHECK(subset.find("membership: F8") != std::string::npos);
    CHECK(subset.find("tau =") == std::string::npos);

    // Entries appear sorted by index tuple: F_011 precedes F_022.
    std::string example = render_pretty(
        analyze(construct_example({Rational(1), Rational(3)}), exact_tolerance()));
    auto first = example.find("F_011");
    auto second = example.find("F_022");
    CHECK(first != std::string::npos);
    CHECK(second != std::string::npos);
    CHECK(first < second);
}

TEST_CASE("non-Lie input yields a jacobi-only report") {
    StructureConstants bad;
    bad.set(0, 0, 1, Rational(1));
    bad.set(1, 1, 2, Rational(1));
    AnalysisReport rep = analyze(bad, exact_tolerance());
    CHECK(!rep.lie_algebra);
    nlohmann::json j = nlohmann::json::parse(render_json(rep));
    CHECK(j["lie_algebra"] == false);
    CHECK(j.contains("jacobi_defect"));
    CHECK(!j.contains("curvature"));
    std::string pretty = render_pretty(rep);
    CHECK(pretty.find("lie algebra: no") != std::string::npos);
    CHECK(pretty.find("jacobi defect") != std::string::npos);
}

TEST_CASE("emitted documents keep only nonzero coefficients in pair order") {
    StructureConstants c;
    c.set(2, 1, 2, Rational(-6, 8));
    c.set(0, 0, 2, Rational(5));
    InputDocument doc = document_from_constants(c, Mode::Exact, Rational(0));
    REQUIRE(doc.entries.size() == 2);
    CHECK(doc.entries[0].i == 0);
    CHECK(doc.entries[0].j == 2);
    CHECK(doc.entries[1].i == 1);
    CHECK(doc.entries[1].j == 2);
    std::string text = emit_input_document(doc);
    CHECK(text.find("-3/4") != std::string::npos);  // canonical lowest terms
    CHECK(text.find("\"mode\": \"exact\"") != std::string::npos);
    CHECK(text.find("tolerance") == std::string::npos);
}
