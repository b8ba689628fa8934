#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "mixorder/errors.hpp"
#include "mixorder/io.hpp"

using namespace mixorder;

namespace {

const std::filesystem::path scenarios = std::filesystem::path(MIXORDER_SOURCE_DIR) / "scenarios";

std::string minimal() {
    return R"({"baseline": {"kind": "exponential", "params": [1]}, "model_variant": "vary_alpha",
               "common": 0.5, "matrix_a": {"p": [0.6, 0.4], "theta": [0.3, 0.4]}})";
}

std::string error_of(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const FormatError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("bundled scenarios round-trip") {
    for (int k = 1; k <= 7; ++k) {
        CAPTURE(k);
        const Scenario s = load_scenario(scenarios / ("example" + std::to_string(k) + ".json"));
        const Scenario again = scenario_from_json(scenario_to_json(s));
        CHECK(again == s);
        CHECK(s.theorem == paper_example_theorem(k));
        // same constants as the canned scenario, up to the last bit of the grid bounds
        const Scenario canned = paper_example_scenario(k);
        CHECK(s.a == canned.a);
        CHECK(s.chain == canned.chain);
        CHECK(s.matrix_b() == canned.matrix_b());
        CHECK(s.baseline == canned.baseline);
    }
}

TEST_CASE("defaults and minimal documents") {
    const Scenario s = parse_scenario(minimal());
    CHECK(s.chain.empty());
    CHECK_FALSE(s.b);
    CHECK(s.grid == GridSpec{});
    CHECK(s.matrix_b() == s.a);
}

TEST_CASE("errors name the offending key") {
    CHECK(error_of("{").find("malformed JSON") != std::string::npos);
    CHECK(error_of(R"({"baseline": {}})").find("baseline.kind") != std::string::npos);

    Json doc = Json::parse(minimal());
    doc["extra"] = 1;
    CHECK(error_of(doc.dump()).find("unknown key 'extra'") != std::string::npos);

    doc = Json::parse(minimal());
    doc["matrix_a"]["q"] = {1, 2};
    CHECK(error_of(doc.dump()).find("matrix_a.q") != std::string::npos);

    doc = Json::parse(minimal());
    doc.erase("common");
    CHECK(error_of(doc.dump()).find("missing key 'common'") != std::string::npos);

    doc = Json::parse(minimal());
    doc["matrix_a"]["p"] = {0.6, 0.5};
    CHECK(error_of(doc.dump()).find("common") != std::string::npos);

    doc = Json::parse(minimal());
    doc["chain"] = Json::array({Json{{"omega", 0.5}, {"permutation", {1, 1}}}});
    CHECK(error_of(doc.dump()).find("chain[0]") != std::string::npos);

    doc = Json::parse(minimal());
    doc["chain"] = Json::array({Json{{"omega", 0.5}, {"permutation", {0, 1}}}});
    CHECK(error_of(doc.dump()).find("chain[0].permutation") != std::string::npos);

    doc = Json::parse(minimal());
    doc["grid"] = Json{{"points", -3}};
    CHECK(error_of(doc.dump()).find("grid.points") != std::string::npos);

    doc = Json::parse(minimal());
    doc["baseline"]["kind"] = "gamma";
    CHECK(error_of(doc.dump()).find("baseline") != std::string::npos);

    doc = Json::parse(minimal());
    doc["theorem_id"] = "T9";
    CHECK(error_of(doc.dump()).find("theorem_id") != std::string::npos);

    CHECK_THROWS_AS(load_scenario(scenarios / "missing.json"), FormatError);
}

TEST_CASE("grid size from the environment") {
    ::setenv("MIXORDER_GRID_POINTS", "101", 1);
    CHECK(default_grid_points() == 101);
    CHECK(parse_scenario(minimal()).grid.points == 101);
    ::setenv("MIXORDER_GRID_POINTS", "12x", 1);
    CHECK_THROWS_AS(default_grid_points(), FormatError);
    ::setenv("MIXORDER_GRID_POINTS", "0", 1);
    CHECK_THROWS_AS(default_grid_points(), FormatError);
    ::unsetenv("MIXORDER_GRID_POINTS");
    CHECK(default_grid_points() == 2001);
}

TEST_CASE("report serialization") {
    const Json doc = report_to_json(verify_paper_example(1));
    CHECK(doc["theorem_id"] == "T1i");
    CHECK(doc["conclusion"]["relation"] == "<=");
    CHECK(doc["conclusion"]["witness_t_leq"].is_null());
    CHECK(doc["scenario"]["chain"][0]["permutation"] == Json::array({2, 1}));
    CHECK(doc["consistent"] == true);
    CHECK(findings_to_json({}).dump() == "[]");
}

TEST_CASE("number formatting and atomic writes") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1234567.0) == "1234567");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_number(2.5e-20) == "2.5e-20");

    const auto dir = std::filesystem::temp_directory_path() / "mixorder_io_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "out.txt";
    write_file_atomic(file, "a,b\n1,2\n");
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "a,b\n1,2\n");
    CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
    CHECK_THROWS_AS(write_file_atomic(dir / "no" / "such" / "dir.txt", "x"), FormatError);
    std::filesystem::remove_all(dir);
}
