#include "bfss/dataset.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "bfss/decision.hpp"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(BFSS_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("the car dataset file parses and feeds the decision tables") {
  const auto data = bfss::parse_dataset(slurp("cars_section8.json"));
  CHECK(data.universe()->size() == 4);
  CHECK(data.size() == 5);

  const auto chosen = bfss::restrict_to(data, {"e1", "e2", "e5"});
  const auto [pos, neg] = bfss::value_tables(chosen);
  CHECK(pos.cells[2][0] == bfss::Degree::parse("0.8"));  // c3 under e1
  CHECK(pos.cells[2][1] == bfss::Degree::parse("0.4"));
  CHECK(pos.cells[2][2] == bfss::Degree::parse("0.6"));
  CHECK(neg.cells[0][0] == bfss::Degree::parse("-0.5"));  // c1 row
  CHECK(neg.cells[0][1] == bfss::Degree::parse("-0.5"));
  CHECK(neg.cells[0][2] == bfss::Degree::parse("0"));
}

TEST_CASE("parse and serialize round-trip") {
  const auto text = slurp("union_cars_f.json");
  const auto parsed = bfss::parse_dataset(text);

  // Shipped files are canonical already.
  CHECK(bfss::serialize_dataset(parsed) == text);

  // parse . serialize is the identity on soft sets.
  CHECK(bfss::parse_dataset(bfss::serialize_dataset(parsed)) == parsed);

  // serialize . parse . serialize = serialize.
  const auto once = bfss::serialize_dataset(parsed);
  CHECK(bfss::serialize_dataset(bfss::parse_dataset(once)) == once);
}

TEST_CASE("order is preserved from the document") {
  const auto parsed = bfss::parse_dataset(R"({
    "universe": ["z", "a"],
    "parameters": ["e2", "e1"],
    "values": {
      "e1": {"z": {"pos": "0.1", "neg": "0"}, "a": {"pos": "0.2", "neg": "0"}},
      "e2": {"z": {"pos": "0.3", "neg": "0"}, "a": {"pos": "0.4", "neg": "0"}}
    }
  })");
  CHECK(parsed.universe()->objects() == std::vector<std::string>{"z", "a"});
  CHECK(parsed.params().names() == std::vector<std::string>{"e2", "e1"});
  CHECK(parsed.value(std::size_t{0}).at(0) == bfss::grade("0.3", "0"));
}

TEST_CASE("numbers on the 1e-4 grid are accepted") {
  const auto parsed = bfss::parse_dataset(R"({
    "universe": ["a"],
    "parameters": ["e1"],
    "values": {"e1": {"a": {"pos": 0.4, "neg": -1}}}
  })");
  CHECK(parsed.value(std::size_t{0}).at(0) == bfss::grade("0.4", "-1"));

  CHECK_THROWS_WITH_AS(bfss::parse_dataset(R"({
    "universe": ["a"],
    "parameters": ["e1"],
    "values": {"e1": {"a": {"pos": 0.00005, "neg": 0}}}
  })"),
                       doctest::Contains("values.e1.a.pos"), bfss::ValidationError);
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(bfss::parse_dataset("{"), bfss::ParseError);
  CHECK_THROWS_AS(bfss::parse_dataset(""), bfss::ParseError);
  CHECK_THROWS_AS(bfss::parse_dataset("[1,2]"), bfss::ValidationError);
}

TEST_CASE("validation errors name the offending path") {
  using doctest::Contains;
  using bfss::ValidationError;

  CHECK_THROWS_WITH_AS(bfss::parse_dataset(slurp("invalid_range.json")),
                       Contains("values.e1.c1.pos"), ValidationError);
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(slurp("invalid_duplicate_object.json")),
                       Contains("duplicate object id 'c1'"), ValidationError);

  const char* missing_param = R"({
    "universe": ["a"], "parameters": ["e1", "e2"],
    "values": {"e1": {"a": {"pos": "0", "neg": "0"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(missing_param), Contains("missing parameter 'e2'"),
                       ValidationError);

  const char* unknown_param = R"({
    "universe": ["a"], "parameters": ["e1"],
    "values": {
      "e1": {"a": {"pos": "0", "neg": "0"}},
      "e9": {"a": {"pos": "0", "neg": "0"}}
    }
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(unknown_param), Contains("values.e9"),
                       ValidationError);

  const char* missing_object = R"({
    "universe": ["a", "b"], "parameters": ["e1"],
    "values": {"e1": {"a": {"pos": "0", "neg": "0"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(missing_object), Contains("missing object 'b'"),
                       ValidationError);

  const char* unknown_object = R"({
    "universe": ["a"], "parameters": ["e1"],
    "values": {"e1": {"a": {"pos": "0", "neg": "0"}, "zz": {"pos": "0", "neg": "0"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(unknown_object), Contains("values.e1.zz"),
                       ValidationError);

  const char* bad_cell = R"({
    "universe": ["a"], "parameters": ["e1"],
    "values": {"e1": {"a": {"pos": "0"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(bad_cell), Contains("missing 'neg'"), ValidationError);

  const char* stray_key = R"({
    "universe": ["a"], "parameters": ["e1"],
    "values": {"e1": {"a": {"pos": "0", "neg": "0", "mid": "0"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(stray_key), Contains("unknown key 'mid'"),
                       ValidationError);

  const char* positive_neg = R"({
    "universe": ["a"], "parameters": ["e1"],
    "values": {"e1": {"a": {"pos": "0", "neg": "0.2"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(positive_neg), Contains("values.e1.a"),
                       ValidationError);

  const char* stray_top = R"({
    "universe": ["a"], "parameters": ["e1"], "extra": 1,
    "values": {"e1": {"a": {"pos": "0", "neg": "0"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(stray_top), Contains("unknown key 'extra'"),
                       ValidationError);

  const char* dup_param = R"({
    "universe": ["a"], "parameters": ["e1", "e1"],
    "values": {"e1": {"a": {"pos": "0", "neg": "0"}}}
  })";
  CHECK_THROWS_WITH_AS(bfss::parse_dataset(dup_param), Contains("duplicate parameter 'e1'"),
                       ValidationError);
}
