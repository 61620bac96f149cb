#include "cob2/dw_oracle.hpp"
#include "cob2/errors.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cob2;

namespace {

FieldValue q(long a, long b = 1) {
  return FieldValue::from_rational(FieldSpec::rational(), mpq_class(a, b));
}

}  // namespace

TEST_CASE("genus zero counts the empty product") {
  for (const char* name : {"C3", "S3", "Q8"}) {
    CHECK(commutator_count(group_by_name(name), 0) == 1);
  }
}

TEST_CASE("abelian groups") {
  CHECK(commutator_count(cyclic(3), 1) == 9);
  CHECK(commutator_count(cyclic(2), 2) == 16);
  CHECK(commutator_count(group_by_name("C2xC2"), 2) == 256);
}

TEST_CASE("genus one counts commuting pairs") {
  for (const char* name : {"S3", "D4", "Q8", "C4"}) {
    const auto g = group_by_name(name);
    CHECK(commutator_count(g, 1) == testing::commuting_pairs(g));
  }
  CHECK(commutator_count(builtin("S3"), 1) == 18);
  CHECK(commutator_count(builtin("Q8"), 1) == 40);
}

TEST_CASE("dw_partition") {
  CHECK(dw_partition(cyclic(2), 0) == q(1, 2));
  CHECK(dw_partition(cyclic(2), 2) == q(8));
  CHECK(dw_partition(builtin("S3"), 1) == q(3));
}

TEST_CASE("enumeration budget") {
  // 8^10 > 1e8
  CHECK_THROWS_AS(commutator_count(builtin("Q8"), 5), EnumerationTooLarge);
  CHECK_NOTHROW(commutator_count(builtin("Q8"), 3));
}
