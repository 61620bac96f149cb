#include <algorithm>

#include "cob2/errors.hpp"
#include "cob2/frobenius.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cob2;

namespace {

const FieldSpec kQ = FieldSpec::rational();

FieldValue q(long a, long b = 1) { return FieldValue::from_rational(kQ, mpq_class(a, b)); }

ExactMatrix rational_matrix(std::size_t r, std::size_t c, std::vector<std::vector<long long>> rows) {
  ExactMatrix m(kQ, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = q(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("registry algebras pass every check") {
  const auto reg = registry();
  CHECK(reg.size() == 14);
  for (const auto& [name, a] : reg) {
    INFO(name);
    const auto report = check_all(a);
    CHECK_MESSAGE(report.passed(), report.summary());
  }
}

TEST_CASE("truncated polynomial structure constants match polynomial multiplication") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = truncated_poly(n);
    CHECK(a.dim == n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto expected = testing::truncated_poly_product(n, i, j);
        for (std::size_t k = 0; k < n; ++k) CHECK(a.mu_at(i, j, k) == q(expected[k]));
      }
    }
    CHECK(a.unit[0] == q(1));
    CHECK(a.counit[n - 1] == q(1));
  }
}

TEST_CASE("pairing and copairing of k[x]/(x^2)") {
  const auto a = truncated_poly(2);
  CHECK(pairing(a) == rational_matrix(2, 2, {{0, 1}, {1, 0}}));
  CHECK(copairing(a) == rational_matrix(2, 2, {{0, 1}, {1, 0}}));
  // delta(1) = 1 (x) x + x (x) 1, delta(x) = x (x) x
  CHECK(a.delta_at(0, 0, 1) == q(1));
  CHECK(a.delta_at(0, 1, 0) == q(1));
  CHECK(a.delta_at(0, 0, 0) == q(0));
  CHECK(a.delta_at(0, 1, 1) == q(0));
  CHECK(a.delta_at(1, 1, 1) == q(1));
  CHECK(a.delta_at(1, 0, 0) == q(0));
}

TEST_CASE("group algebra of C2") {
  const auto a = group_algebra(cyclic(2));
  ExactMatrix half(kQ, 2, 2);
  half(0, 0) = q(1, 2);
  half(1, 1) = q(1, 2);
  CHECK(pairing(a) == half);
  CHECK(copairing(a) == rational_matrix(2, 2, {{2, 0}, {0, 2}}));
  CHECK(a.counit[0] == q(1, 2));
  CHECK(a.counit[1] == q(0));
}

TEST_CASE("group algebra preconditions") {
  CHECK_THROWS_AS(group_algebra(builtin("S3")), NonAbelianGroup);
  CHECK_THROWS_AS(group_algebra(cyclic(3), FieldSpec::prime(3)), BadCharacteristic);
  CHECK_THROWS_AS(group_center(builtin("S3"), FieldSpec::prime(2)), BadCharacteristic);
  CHECK(check_all(group_algebra(cyclic(3), FieldSpec::prime(7))).passed());
}

TEST_CASE("group centers") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    INFO(name);
    const auto g = builtin(name);
    const auto z = group_center(g);
    const auto classes = conjugacy_classes(g);
    CHECK(z.dim == classes.size());
    for (std::size_t c = 0; c < z.dim; ++c) {
      for (std::size_t d = 0; d < z.dim; ++d) {
        const auto expected = testing::class_sum_product(g, classes, c, d);
        for (std::size_t k = 0; k < z.dim; ++k) CHECK(z.mu_at(c, d, k) == q(expected[k]));
      }
    }
    CHECK(z.counit[0] == q(1, static_cast<long long>(g.order())));
  }
  CHECK(group_center(builtin("Q8")).dim == 5);
  CHECK(group_center(builtin("S3")).dim == 3);
  // For abelian groups the center is the whole algebra.
  CHECK(group_center(cyclic(4)) == group_algebra(cyclic(4)));
}

TEST_CASE("matrix algebra is Frobenius but not commutative") {
  const auto m = matrix_algebra(2);
  const auto report = check_all(m);
  CHECK_FALSE(report.passed());
  CHECK(report.failed("commutativity"));
  CHECK(report.failed("cocommutativity"));
  CHECK_FALSE(report.failed("associativity"));
  CHECK_FALSE(report.failed("frobenius-left"));
  CHECK_FALSE(report.failed("frobenius-right"));
  CHECK_FALSE(report.failed("snake-identity"));
  CHECK(check_all(matrix_algebra(1)).passed());
}

TEST_CASE("derive_comultiplication") {
  SUBCASE("recovers the registry comultiplication") {
    for (const auto& [name, a] : registry()) {
      INFO(name);
      const auto b = derive_comultiplication(a.field, a.dim, a.mu, a.unit, a.counit);
      CHECK(b.delta == a.delta);
    }
  }
  SUBCASE("dimension one") {
    const auto b = derive_comultiplication(kQ, 1, {q(1)}, {q(1)}, {q(3)});
    CHECK(b.delta == std::vector<FieldValue>{q(1, 3)});
    CHECK(check_all(b).passed());
  }
  SUBCASE("zero counit is degenerate") {
    CHECK_THROWS_AS(derive_comultiplication(kQ, 1, {q(1)}, {q(1)}, {q(0)}), DegeneratePairing);
    auto a = truncated_poly(2);
    std::fill(a.counit.begin(), a.counit.end(), q(0));
    CHECK_THROWS_AS(copairing(a), DegeneratePairing);
    const auto report = check_nondegenerate(a);
    CHECK_FALSE(report.passed());
    CHECK(report.find("snake-identity")->note.find("DegeneratePairing") != std::string::npos);
  }
}

TEST_CASE("single checks name their identities") {
  const auto a = truncated_poly(3);
  CHECK(check_monoid(a).items.size() == 3);
  CHECK(check_comonoid(a).items.size() == 3);
  CHECK(check_frobenius(a).items.size() == 2);
  CHECK(check_commutative(a).items.size() == 2);
  CHECK(check_nondegenerate(a).items.size() == 2);
  CHECK(check_all(a).items.size() == 12);
  CHECK(check_all(a).find("left-counit") != nullptr);
  CHECK(check_all(a).find("no-such-item") == nullptr);
}

TEST_CASE("mutations are detected") {
  for (const auto& [name, a] : registry()) {
    INFO(name);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto m = testing::mutate_one_entry(a, seed);
      CHECK_FALSE(m == a);
      CHECK_FALSE(check_all(m).passed());
    }
  }
}

TEST_CASE("specific mutations hit the expected identity") {
  auto a = truncated_poly(2);
  a.unit[1] = q(1);
  CHECK(check_monoid(a).failed("left-unit"));

  auto b = truncated_poly(2);
  b.counit[0] = q(1);
  CHECK(check_comonoid(b).failed("left-counit"));

  auto c = truncated_poly(3);
  c.mu_at(1, 2, 0) = q(5);
  CHECK(check_commutative(c).failed("commutativity"));
}

TEST_CASE("shape validation") {
  auto a = truncated_poly(2);
  a.mu.pop_back();
  CHECK_THROWS_AS(a.validate_shape(), FormatError);
  auto b = truncated_poly(2);
  b.unit[0] = FieldValue::one(FieldSpec::prime(7));
  CHECK_THROWS_AS(b.validate_shape(), FormatError);
}
