#include "cob2/dw_oracle.hpp"

#include <string>
#include <vector>

#include "cob2/errors.hpp"

namespace cob2 {

namespace {

struct Enumeration {
  const FiniteGroup& group;
  std::vector<std::size_t> commutators;  // [a * n + b] = a b a^-1 b^-1
  std::size_t genus;

  std::uint64_t count(std::size_t level, std::size_t prefix) const {
    if (level == genus) return prefix == group.identity() ? 1 : 0;
    std::uint64_t total = 0;
    for (std::size_t c : commutators) total += count(level + 1, group.multiply(prefix, c));
    return total;
  }
};

}  // namespace

std::uint64_t commutator_count(const FiniteGroup& g, std::size_t genus) {
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < 2 * genus; ++i) {
    tuples *= g.order();
    if (tuples > kEnumerationBudget) {
      throw EnumerationTooLarge("enumerating G^" + std::to_string(2 * genus) + " for |G| = " +
                                std::to_string(g.order()) + " exceeds the budget of " +
                                std::to_string(kEnumerationBudget) + " tuples");
    }
  }
  const std::size_t n = g.order();
  Enumeration e{g, std::vector<std::size_t>(n * n), genus};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      e.commutators[a * n + b] =
          g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
    }
  }
  return e.count(0, g.identity());
}

FieldValue dw_partition(const FiniteGroup& g, std::size_t genus) {
  const std::uint64_t count = commutator_count(g, genus);
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
  return FieldValue::from_rational(FieldSpec::rational(),
                                   mpq_class(num, mpz_class(static_cast<unsigned long>(g.order()))));
}

}  // namespace cob2
