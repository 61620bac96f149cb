#include <filesystem>
#include <fstream>
#include <sstream>

#include "cob2/errors.hpp"
#include "cob2/io.hpp"
#include "doctest.h"

using namespace cob2;

namespace {

const FieldSpec kQ = FieldSpec::rational();

FieldValue q(long a, long b = 1) { return FieldValue::from_rational(kQ, mpq_class(a, b)); }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr const char* kTruncated2NoDelta = R"({
  "field": "rational",
  "dim": 2,
  "mu": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
  "unit": [1, 0],
  "counit": [0, 1]
})";

}  // namespace

TEST_CASE("algebra json round trip") {
  for (const auto& [name, a] : registry()) {
    INFO(name);
    const auto text = algebra_to_json(a);
    const auto back = algebra_from_json(text);
    CHECK(back == a);
    CHECK(back.labels == a.labels);
    CHECK(algebra_to_json(back) == text);
  }
}

TEST_CASE("missing delta is derived") {
  const auto a = algebra_from_json(kTruncated2NoDelta);
  CHECK(a == truncated_poly(2));
}

TEST_CASE("rational strings and prime fields") {
  const auto a = algebra_from_json(R"({"field": "rational", "dim": 1, "mu": [[[1]]],
                                       "unit": [1], "counit": ["1/3"]})");
  CHECK(a.counit[0] == q(1, 3));
  CHECK(a.delta[0] == q(3));

  const auto b = algebra_from_json(R"({"field": {"prime": 7}, "dim": 1, "mu": [[[1]]],
                                       "unit": [1], "counit": [3]})");
  CHECK(b.field == FieldSpec::prime(7));
  CHECK(b.delta[0] == FieldValue::integer(FieldSpec::prime(7), 5));  // 3 * 5 = 15 = 1
}

TEST_CASE("field override") {
  const auto a = algebra_from_json(kTruncated2NoDelta, FieldSpec::prime(5));
  CHECK(a == truncated_poly(2, FieldSpec::prime(5)));
  const auto c2 = algebra_to_json(group_algebra(cyclic(2)));
  CHECK_THROWS_AS(algebra_from_json(c2, FieldSpec::prime(2)), FieldError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(algebra_from_json("not json"), FormatError);
  CHECK_THROWS_AS(algebra_from_json("[]"), FormatError);
  CHECK_THROWS_AS(algebra_from_json(R"({"field": "rational", "dim": 2})"), FormatError);
  CHECK_THROWS_AS(algebra_from_json(R"({"field": "complex", "dim": 1, "mu": [[[1]]],
                                        "unit": [1], "counit": [1]})"),
                  FormatError);
  CHECK_THROWS_AS(algebra_from_json(R"({"field": "rational", "dim": 2, "mu": [[[1]]],
                                        "unit": [1, 0], "counit": [0, 1]})"),
                  FormatError);
  CHECK_THROWS_AS(algebra_from_json(R"({"field": "rational", "dim": 1, "mu": [[["x"]]],
                                        "unit": [1], "counit": [1]})"),
                  Error);
  CHECK_THROWS_AS(algebra_from_json(R"({"field": "rational", "dim": 1, "mu": [[[1]]],
                                        "unit": [1], "counit": [0]})"),
                  DegeneratePairing);
}

TEST_CASE("matrix serialization") {
  ExactMatrix m(kQ, 2, 2);
  m(0, 0) = q(1, 2);
  m(1, 1) = q(-3);
  CHECK(matrix_to_json(m) == R"({"rows":2,"cols":2,"entries":[["1/2","0"],["0","-3"]]})");
  CHECK(matrix_to_csv(m) == "1/2,0\n0,-3\n");
  ExactMatrix z(kQ, 1, 1);
  CHECK(matrix_to_json(z) == R"({"rows":1,"cols":1,"entries":[["0"]]})");
}

TEST_CASE("shipped data files match the registry") {
  const std::filesystem::path dir = std::filesystem::path(COB2_DATA_DIR) / "algebras";
  for (const auto& [name, a] : registry()) {
    INFO(name);
    const auto path = dir / (name + ".json");
    REQUIRE(std::filesystem::exists(path));
    CHECK(algebra_from_json(read_file(path)) == a);
  }
}
