#include <algorithm>
#include <random>

#include "cob2/errors.hpp"
#include "cob2/group.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cob2;

namespace {

std::vector<std::size_t> sorted_class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("cyclic groups") {
  const auto c5 = cyclic(5);
  CHECK(c5.order() == 5);
  CHECK(c5.is_abelian());
  CHECK(c5.multiply(3, 4) == 2);
  CHECK(c5.inverse(2) == 3);
  CHECK(cyclic(1).order() == 1);
  CHECK_THROWS_AS(cyclic(0), InvalidGroupTable);
}

TEST_CASE("builtin groups") {
  const auto s3 = builtin("S3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(builtin("D4").order() == 8);
  CHECK_FALSE(builtin("D4").is_abelian());
  CHECK(builtin("Q8").order() == 8);
  CHECK_FALSE(builtin("Q8").is_abelian());
  CHECK_THROWS_AS(builtin("A5"), UnknownGroupName);
}

TEST_CASE("group_by_name") {
  CHECK(group_by_name("C4").order() == 4);
  const auto k = group_by_name("C2xC2");
  CHECK(k.order() == 4);
  CHECK(k.is_abelian());
  CHECK(sorted_class_sizes(k) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(group_by_name("S3xC2").order() == 12);
  CHECK_THROWS_AS(group_by_name("C0"), Error);
  CHECK_THROWS_AS(group_by_name("Z7"), UnknownGroupName);
}

TEST_CASE("product") {
  const auto g = product(cyclic(2), cyclic(3));
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  // (1, 2) * (1, 2) = (0, 1)
  CHECK(g.multiply(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
}

TEST_CASE("conjugacy classes") {
  CHECK(sorted_class_sizes(builtin("S3")) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sorted_class_sizes(builtin("Q8")) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(sorted_class_sizes(builtin("D4")) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  for (const char* name : {"S3", "D4", "Q8"}) {
    const auto g = builtin(name);
    const auto classes = conjugacy_classes(g);
    CHECK(classes.front() == std::vector<std::size_t>{g.identity()});
    auto oracle = testing::class_sizes_by_closure(g);
    std::sort(oracle.begin(), oracle.end());
    CHECK(sorted_class_sizes(g) == oracle);
  }
}

TEST_CASE("corrupted tables are rejected") {
  const std::vector<FiniteGroup> groups = {builtin("S3"), builtin("Q8"), cyclic(5)};
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    const auto& g = groups[n % groups.size()];
    auto table = g.table();
    const std::size_t pos = rng() % table.size();
    const std::size_t shift = 1 + rng() % (g.order() - 1);
    table[pos] = (table[pos] + shift) % g.order();
    CHECK_THROWS_AS(FiniteGroup(g.order(), table, g.identity()), InvalidGroupTable);
  }
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1}, 0), InvalidGroupTable);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 2}, 0), InvalidGroupTable);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 0}, 1), InvalidGroupTable);
}

TEST_CASE("group json round trip") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    const auto g = builtin(name);
    const auto back = group_from_json(group_to_json(g));
    CHECK(back.table() == g.table());
    CHECK(back.identity() == g.identity());
    CHECK(back.names() == g.names());
  }
  CHECK_THROWS_AS(group_from_json("{"), FormatError);
  CHECK_THROWS_AS(group_from_json(R"({"order": 2})"), FormatError);
  CHECK_THROWS_AS(group_from_json(R"({"order": 2, "table": [[0,1],[1,1]], "identity": 0})"),
                  InvalidGroupTable);
}
