#include <doctest.h>

#include <random>
#include <sstream>

#include "metafib/serialization.hpp"
#include "test_support.hpp"

using namespace metafib;
using metafib::testing::make_ints;

namespace {

LinearRecurrence order3_example() {
  return LinearRecurrence(make_ints({1, 0, 2}), make_ints({30, 40, 60}));
}

std::string render(SequenceFormat format, Index n0, const std::vector<Int>& values) {
  std::ostringstream out;
  write_sequence(out, format, n0, values);
  return out.str();
}

}  // namespace

TEST_CASE("integer json encoding") {
  CHECK(int_to_json(Int(42)).is_number_integer());
  CHECK(int_to_json(Int(-7)).get<std::int64_t>() == -7);

  const Int big("123456789012345678901234567890123456789");
  const json encoded = int_to_json(big);
  REQUIRE(encoded.is_string());
  CHECK(int_from_json(encoded, "value") == big);

  CHECK(int_from_json(json(17), "value") == 17);
  CHECK(int_from_json(json("-99"), "value") == -99);
  CHECK_THROWS_WITH_AS(int_from_json(json(1.5), "value"), doctest::Contains("floating-point"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(int_from_json(json("12x"), "value"), doctest::Contains("decimal"),
                       std::invalid_argument);
  CHECK_THROWS_AS(int_from_json(json::array(), "value"), std::invalid_argument);

  // A huge bare number literal parses as a lossy double and must be refused.
  const json lossy = json::parse("123456789012345678901234567890");
  CHECK_THROWS_AS(int_from_json(lossy, "value"), std::invalid_argument);
}

TEST_CASE("linear recurrence json round trip") {
  const LinearRecurrence rec = order3_example();
  const json j = to_json(rec);
  CHECK(j["k"] == 3);
  const LinearRecurrence back = linear_recurrence_from_json(j);
  CHECK(back.coeffs() == rec.coeffs());
  CHECK(back.initial() == rec.initial());

  CHECK_THROWS_WITH_AS(
      linear_recurrence_from_json(json::parse(R"({"k":2,"coeffs":[1,0,2],"initial":[1,1]})")),
      doctest::Contains("does not match k"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(linear_recurrence_from_json(json::parse(R"({"coeffs":[1,1]})")),
                       doctest::Contains("missing"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      linear_recurrence_from_json(json::parse(R"({"k":2,"coeffs":[1,0],"initial":[1,1]})")),
      doctest::Contains("at least 2"), std::invalid_argument);
}

TEST_CASE("nested spec json round trip") {
  const json j = json::parse(R"({"n0":1,"coeffs":[1,1],"initial":[1,1]})");
  const NestedSpec spec = nested_spec_from_json(j);
  CHECK(spec.rec.n0() == 1);
  CHECK(spec.init.start() == 1);
  CHECK(spec.init.values() == make_ints({1, 1}));
  CHECK(to_json(spec) == j);
}

TEST_CASE("construction bundle json round trip") {
  const Construction c = build(order3_example());
  const json j = to_json(c);
  CHECK(j["s"] == 6);
  CHECK(j["h"] == 17);
  const Construction back = construction_from_json(j);
  CHECK(to_json(back) == j);

  json corrupt_s = j;
  corrupt_s["s"] = 4;
  CHECK_THROWS_WITH_AS(construction_from_json(corrupt_s), doctest::Contains("quasi-period"),
                       std::invalid_argument);

  json corrupt_h = j;
  corrupt_h["h"] = 16;
  CHECK_THROWS_WITH_AS(construction_from_json(corrupt_h), doctest::Contains("h+1"),
                       std::invalid_argument);
}

TEST_CASE("report json shapes") {
  const Construction c = build(order3_example());
  const json pass = to_json(check_theorem(c, 100));
  CHECK(pass["pass"] == true);
  CHECK(pass["checked"] == 100);
  CHECK(pass["first_mismatch"].is_null());
  CHECK(pass["death"].is_null());

  TheoremReport failed;
  failed.pass = false;
  failed.checked = 6;
  failed.first_mismatch = Mismatch{6, q_slot(6, 3), Int(40), Int(30)};
  failed.death = Death{9, 8, Int(0), Int(9)};
  const json j = to_json(failed);
  CHECK(j["first_mismatch"]["n"] == 6);
  CHECK(j["first_mismatch"]["parity"] == "even");
  CHECK(j["first_mismatch"]["m"] == 1);
  CHECK(j["first_mismatch"]["j"] == 0);
  CHECK(j["first_mismatch"]["expected"] == 40);
  CHECK(j["death"]["offset"] == 8);

  const json trace = to_json(trace_case(c, 18));
  CHECK(trace["pattern_ok"] == true);
  CHECK(trace["violation"].is_null());
  CHECK(trace["parity"] == "even");
  REQUIRE(trace["terms"].size() == 3);
  CHECK(trace["terms"][1]["class"] == "vanishes-negative");
  CHECK(trace["terms"][0]["landed"]["m"] == 2);
}

TEST_CASE("b-file output is exact") {
  const std::vector<Int> q = make_ints({1, 1, 2, 3, 3, 4, 5, 5, 6, 6});
  CHECK(render(SequenceFormat::BFile, 1, q) ==
        "1 1\n2 1\n3 2\n4 3\n5 3\n6 4\n7 5\n8 5\n9 6\n10 6\n");
  CHECK(render(SequenceFormat::BFile, 0, {}).empty());
}

TEST_CASE("csv output is exact") {
  const std::vector<Int> q = make_ints({1, 1, 2});
  CHECK(render(SequenceFormat::Csv, 1, q) == "n,value\n1,1\n2,1\n3,2\n");
  CHECK(render(SequenceFormat::Csv, 0, {}) == "n,value\n");
}

TEST_CASE("json sequence output carries n0 and exact values") {
  const std::vector<Int> values = {Int(5), Int("123456789012345678901234567890")};
  const std::string text = render(SequenceFormat::Json, 3, values);
  const json j = json::parse(text);
  CHECK(j["n0"] == 3);
  CHECK(j["values"][0] == 5);
  CHECK(j["values"][1] == "123456789012345678901234567890");
}

TEST_CASE("sequence readers parse and detect all three formats") {
  const std::vector<Int> values = {Int(7), Int(0), Int("99999999999999999999999999")};
  for (SequenceFormat format : {SequenceFormat::BFile, SequenceFormat::Csv, SequenceFormat::Json}) {
    const std::string text = render(format, 5, values);
    SequenceFormat detected = SequenceFormat::BFile;
    const Sequence seq = read_sequence(text, std::nullopt, &detected);
    CHECK(detected == format);
    CHECK(seq.n0 == 5);
    CHECK(seq.values == values);
  }
}

TEST_CASE("b-file reader tolerates comments and validates indices") {
  const Sequence seq = read_sequence("# a comment\n\n0 30\n1 18\n2 30\n", std::nullopt, nullptr);
  CHECK(seq.n0 == 0);
  CHECK(seq.values == make_ints({30, 18, 30}));

  CHECK_THROWS_WITH_AS(read_sequence("0 30\n2 18\n", std::nullopt, nullptr),
                       doctest::Contains("consecutive"), std::invalid_argument);
  CHECK_THROWS_AS(read_sequence("0 30 40\n", std::nullopt, nullptr), std::invalid_argument);
  CHECK_THROWS_AS(read_sequence("x 30\n", SequenceFormat::BFile, nullptr), std::invalid_argument);
  CHECK(read_sequence("", std::nullopt, nullptr).values.empty());
}

TEST_CASE("csv reader requires the header") {
  CHECK_THROWS_WITH_AS(read_sequence("0,30\n1,18\n", std::nullopt, nullptr),
                       doctest::Contains("header"), std::invalid_argument);
  const Sequence seq = read_sequence("n,value\n4,16\n5,32\n", std::nullopt, nullptr);
  CHECK(seq.n0 == 4);
  CHECK(seq.values == make_ints({16, 32}));
}

TEST_CASE("json reader accepts a bare array") {
  const Sequence seq = read_sequence("[1, 2, \"3\"]", std::nullopt, nullptr);
  CHECK(seq.n0 == 0);
  CHECK(seq.values == make_ints({1, 2, 3}));
  CHECK_THROWS_WITH_AS(read_sequence("{\"values\": [1]}", std::nullopt, nullptr),
                       doctest::Contains("n0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(read_sequence("{bad json", std::nullopt, nullptr),
                       doctest::Contains("not valid JSON"), std::invalid_argument);
}

TEST_CASE("format names") {
  CHECK(sequence_format_from_name("bfile") == SequenceFormat::BFile);
  CHECK(sequence_format_from_name("csv") == SequenceFormat::Csv);
  CHECK(sequence_format_from_name("json") == SequenceFormat::Json);
  CHECK_THROWS_AS(sequence_format_from_name("xml"), std::invalid_argument);
}
