#include <doctest.h>

#include "bifree/errors.hpp"
#include "bifree/spec_file.hpp"

using namespace bifree;

namespace {

const char* kTwoPairs = R"({
  "pairs": [
    {"id": "p0", "left_generators": ["x"], "right_generators": ["w"], "max_degree": 4,
     "cumulants": {"x x": 1, "x w": 1, "w x": 1, "w w": 1}},
    {"id": 1, "left_generators": ["y"], "right_generators": [], "max_degree": 2,
     "moments": {"y": "-1/2", "y y": 3},
     "theta_moments": {"y": 2, "y y": 5}}
  ],
  "perturbations": {"x y": "1/3"}
})";

}  // namespace

TEST_CASE("loading a spec") {
  const auto spec = parse_spec(kTwoPairs);
  CHECK(spec.pures.size() == 2);
  CHECK(spec.alphabet.pair_name(1) == "1");
  CHECK(spec.alphabet.letter("w").side == Side::kRight);
  CHECK_FALSE(spec.has_theta());
  const auto d = spec.distribution();
  CHECK(d.moment(spec.alphabet.parse_word("w x")) == 1);
  CHECK(d.moment(spec.alphabet.parse_word("y")) == Rational(-1, 2));
  CHECK(d.moment(spec.alphabet.parse_word("x y")) == Rational(1, 3));
  CHECK(spec.pures[1].theta(spec.alphabet.parse_word("y y")) == 5);
  CHECK_THROWS_AS(spec.conditional_distribution(), ModeError);
}

TEST_CASE("malformed specs") {
  CHECK_THROWS_AS(parse_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"pairs": [], "extra": 1})"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"pairs": [{"id": "a", "left_generators": ["x"], "right_generators": [],
                                           "max_degree": 1}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"pairs": [{"id": "a", "left_generators": ["x"], "right_generators": [],
                                           "max_degree": 1, "moments": {}, "cumulants": {}}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"pairs": [{"id": "a", "left_generators": ["x"], "right_generators": ["x"],
                                           "max_degree": 1, "moments": {}}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"pairs": [{"id": "a", "left_generators": ["x"], "right_generators": [],
                                           "max_degree": 1, "moments": {"x": 0.5}}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"pairs": [{"id": "a", "left_generators": ["x"], "right_generators": [],
                                           "max_degree": 1, "moments": {"x": "1/0"}}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"pairs": [{"id": "a", "left_generators": ["x"], "right_generators": [],
                                           "max_degree": 1, "moments": {"q": 1}}]})"),
                  ParseError);
  CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), ParseError);
}
