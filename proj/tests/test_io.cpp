#include "loopcross/io.hpp"

#include "doctest.h"
#include "loopcross/constructions.hpp"

using namespace loopcross;

TEST_CASE("multigraph instances round-trip byte for byte") {
  Instance inst = Instance::of(gen_loose_extremal(4));
  std::string once = instance_to_json(inst);
  std::string twice = instance_to_json(instance_from_json(once));
  CHECK(once == twice);
}

TEST_CASE("loop family instances round-trip byte for byte") {
  Instance inst = Instance::of(gen_winding_loops(2));
  std::string once = instance_to_json(inst);
  Instance back = instance_from_json(once);
  CHECK(instance_to_json(back) == once);
  REQUIRE(back.loops.has_value());
  CHECK(back.loops->loops.size() == 5);
  CHECK(back.loops->windings == inst.loops->windings);
}

TEST_CASE("schema and rational format errors") {
  CHECK_THROWS_AS(instance_from_json("{"), ParseError);
  CHECK_THROWS_AS(instance_from_json("{\"version\":1,\"kind\":\"nope\"}"), SchemaError);
  CHECK_THROWS_AS(instance_from_json("{\"version\":1}"), SchemaError);
  std::string zero_den = R"({"version":1,"kind":"loops","punctures":[["1/1","0/1"]],
    "basepoint":["0/1","-1/0"],"curves":[]})";
  CHECK_THROWS_AS(instance_from_json(zero_den), RationalFormatError);
  std::string bad_label = R"({"version":1,"kind":"multigraph",
    "vertices":[{"label":"u","point":["0/1","0/1"]}],
    "edges":[{"id":"e","u":"u","v":"ghost","closed":false,
              "points":[["0/1","0/1"],["1/1","0/1"]]}]})";
  CHECK_THROWS_AS(instance_from_json(bad_label), SchemaError);
}

TEST_CASE("svg export is deterministic and one path per curve") {
  Instance inst = Instance::of(gen_elementary_loops(3, 3));
  SvgOptions opts;
  std::string svg1 = instance_to_svg(inst, opts);
  std::string svg2 = instance_to_svg(inst, opts);
  CHECK(svg1 == svg2);
  std::size_t paths = 0, at = 0;
  while ((at = svg1.find("<path", at)) != std::string::npos) {
    ++paths;
    at += 5;
  }
  CHECK(paths == 8);
  // an empty family still renders a valid canvas
  LoopFamily empty{PuncturedPlane({{Rational(0), Rational(0)}}, {Rational(1), Rational(-1)}),
                   {},
                   {}};
  std::string blank = instance_to_svg(Instance::of(std::move(empty)));
  CHECK(blank.find("<svg") != std::string::npos);
  CHECK(blank.find("</svg>") != std::string::npos);
}
