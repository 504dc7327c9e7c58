#include <doctest.h>

#include "galocus/report_io.hpp"

using namespace galocus;

TEST_CASE("format parsing") {
    CHECK(parse_output_format("table") == OutputFormat::Table);
    CHECK(parse_output_format("csv") == OutputFormat::Csv);
    CHECK(parse_output_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_output_format("yaml"), std::invalid_argument);
}

TEST_CASE("table lists every dimension with explicit zeros") {
    const std::string table = render_table(component_census(JClass::J1728, 4));
    CHECK(table ==
          "Galois subspace components  (N = 3, n = 4, j = 1728)\n"
          "dimension  count\n"
          "        0     14\n"
          "        1      0\n"
          "        2      1\n"
          "Total number: 15\n");
}

TEST_CASE("csv emits only nonzero records, ascending dimension") {
    CHECK(render_csv(component_census(JClass::Generic, 3)) ==
          "dimension,count,group_order\n"
          "1,1,2\n");
    CHECK(render_csv(component_census(JClass::J1728, 4)) ==
          "dimension,count,group_order\n"
          "0,14,4\n"
          "2,1,2\n");
}

TEST_CASE("json round-trips the census report exactly") {
    for (JClass j : {JClass::Generic, JClass::J0, JClass::J1728}) {
        for (std::uint64_t n = 3; n <= 24; ++n) {
            const CensusReport report = component_census(j, n);
            const CensusReport parsed = parse_json_report(render_json(report));
            CHECK(parsed == report);
        }
    }
}

TEST_CASE("json carries the schema fields and nulls for dimension 0") {
    const std::string text = render_json(component_census(JClass::J0, 3));
    CHECK(text.find("\"schema\":1") != std::string::npos);
    CHECK(text.find("\"n\":3") != std::string::npos);
    CHECK(text.find("\"N\":2") != std::string::npos);
    CHECK(text.find("\"j\":\"0\"") != std::string::npos);
    CHECK(text.find("\"fiber_dim\":null") != std::string::npos);
    CHECK(text.find("\"base\":null") != std::string::npos);
    CHECK(text.find("\"base\":\"E/H\"") != std::string::npos);
    CHECK(text.find("\"total\":4") != std::string::npos);
}

TEST_CASE("parse_json_report rejects malformed input") {
    CHECK_THROWS_AS(parse_json_report("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json_report("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json_report("{\"schema\":2}"), std::invalid_argument);
}

TEST_CASE("rendering is deterministic") {
    const CensusReport report = component_census(JClass::J0, 12);
    for (OutputFormat f : {OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json}) {
        CHECK(render(report, f) == render(report, f));
    }
}
