#include "adc/io.hpp"
#include "adc/shapes.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace adc;

TEST_CASE("serialization matches the golden interval") {
    CHECK(serialize_adc(cube(1)) == slurp(std::string(GOLDEN_DIR) + "/cube1.json"));
    CHECK(export_dot(cube(1)) == slurp(std::string(GOLDEN_DIR) + "/cube1.dot"));
}

TEST_CASE("round trips") {
    for (const BasedADC& a : {unit(), cube(2), oriental(2), globe(3),
                              theta(parse_theta("s(s(*) v s(*))")), two_loop()}) {
        std::string text = serialize_adc(a);
        BasedADC back = parse_adc(text);
        CHECK(back == canonicalize(a));
        CHECK(serialize_adc(back) == text);  // serialize o parse o serialize = serialize
        CHECK(back.validate().ok());
    }
    // globes are already built in canonical (degree) order
    CHECK(parse_adc(serialize_adc(globe(2))) == globe(2));
}

TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS_AS(parse_adc("not json"), InvalidArgument);
    CHECK_THROWS_AS(parse_adc("{}"), InvalidArgument);
    std::string dangling = R"({
      "name": "bad", "max_degree": 1,
      "basis": [{"label": "x", "degree": 0}, {"label": "e", "degree": 1}],
      "differential": [{"from": "e", "terms": [{"coef": 1, "to": "ghost"}]}],
      "augmentation": [{"from": "x", "coef": 1}]
    })";
    try {
        parse_adc(dangling);
        FAIL("expected a parse error");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("dot export keeps cycles visible") {
    std::string dot = export_dot(two_loop());
    CHECK(dot.find("\"x\" -> \"a\"") != std::string::npos);
    CHECK(dot.find("\"a\" -> \"y\"") != std::string::npos);
    CHECK(dot.find("\"y\" -> \"b\"") != std::string::npos);
    CHECK(dot.find("\"b\" -> \"x\"") != std::string::npos);
}

TEST_CASE("empty complex") {
    BasedADC e("empty");
    CHECK(parse_adc(serialize_adc(e)) == e);
    CHECK(export_dot(e) == "digraph basis_order {\n}\n");
}
