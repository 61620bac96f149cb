#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cob2 {

/// A finite group given by its multiplication table. The table is verified
/// on construction (closure, identity, inverses, associativity).
class FiniteGroup {
 public:
  /// `table` is row-major order x order; table[a * order + b] = a * b.
  /// Throws InvalidGroupTable.
  FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
              std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  /// Element label; defaults to "g<i>".
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool is_abelian() const noexcept;

 private:
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
  std::vector<std::string> names_;
  std::vector<std::size_t> inverses_;
};

/// Z/n, element k written additively. Requires n >= 1.
FiniteGroup cyclic(std::size_t n);
/// Direct product; element (g, h) has index g * |H| + h.
FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
/// "S3", "D4" (order 8) or "Q8". Throws UnknownGroupName.
FiniteGroup builtin(std::string_view name);
/// builtin() names plus "C<n>" and products written "AxB" (e.g. "C2xC2").
FiniteGroup group_by_name(std::string_view name);

/// Conjugation orbits. The identity's class comes first, the rest ordered
/// by smallest member; members sorted ascending.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

/// Group JSON: {"order": n, "table": [[...]...], "identity": i, "names": [...]}.
/// Throws FormatError or InvalidGroupTable.
FiniteGroup group_from_json(std::string_view text);
std::string group_to_json(const FiniteGroup& g);

}  // namespace cob2
