#pragma once

#include <cstddef>
#include <cstdint>

#include "cob2/field.hpp"
#include "cob2/group.hpp"

namespace cob2 {

/// Largest |G|^(2g) the brute-force enumeration accepts.
inline constexpr std::uint64_t kEnumerationBudget = 100'000'000;

/// Number of tuples (a1, b1, ..., ag, bg) in G^(2g) whose product of
/// commutators a b a^-1 b^-1 is the identity, by direct enumeration.
/// Throws EnumerationTooLarge when |G|^(2g) exceeds the budget.
std::uint64_t commutator_count(const FiniteGroup& g, std::size_t genus);

/// Dijkgraaf-Witten invariant of the closed genus-g surface:
/// commutator_count / |G| as an exact rational.
FieldValue dw_partition(const FiniteGroup& g, std::size_t genus);

}  // namespace cob2
