#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace cob2 {

/// The six elementary 2-cobordisms. Cap is the birth of a circle (unit),
/// Cup its death (counit), Merge the pair of pants 2->1, Split 1->2.
enum class Generator : std::uint8_t { Cap, Cup, Id, Merge, Split, Swap };

struct Arity {
  std::size_t inputs;
  std::size_t outputs;
  friend bool operator==(const Arity&, const Arity&) = default;
};

constexpr Arity arity(Generator g) noexcept {
  switch (g) {
    case Generator::Cap: return {0, 1};
    case Generator::Cup: return {1, 0};
    case Generator::Id: return {1, 1};
    case Generator::Merge: return {2, 1};
    case Generator::Split: return {1, 2};
    case Generator::Swap: return {2, 2};
  }
  return {0, 0};
}

/// Keyword used by the text format: cap, cup, id, mu, delta, swap.
std::string_view keyword(Generator g) noexcept;

inline constexpr Generator kAllGenerators[] = {Generator::Cap,   Generator::Cup,
                                               Generator::Id,    Generator::Merge,
                                               Generator::Split, Generator::Swap};

/// Generators placed side by side; the first generator owns the top wires.
class Layer {
 public:
  Layer() = default;
  explicit Layer(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t outputs() const noexcept { return outputs_; }

  friend bool operator==(const Layer& a, const Layer& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Generator> generators_;
  std::size_t inputs_ = 0;
  std::size_t outputs_ = 0;
};

/// A morphism source -> target of the skeleton of the 2-cobordism category,
/// written as layers composed left to right (the first layer consumes the
/// inputs). Immutable once built.
class CobordismWord {
 public:
  /// Empty word on zero circles.
  CobordismWord() = default;
  /// Throws MalformedWord if `layers` is empty, contains an empty layer, or
  /// consecutive layers do not chain.
  explicit CobordismWord(std::vector<Layer> layers);

  /// Zero layers on n circles.
  static CobordismWord empty(std::size_t circles);
  /// One layer of n cylinders (zero layers when n = 0).
  static CobordismWord identity(std::size_t circles);
  static CobordismWord single(Generator g);

  const std::vector<Layer>& layers() const noexcept { return layers_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  /// Largest wire count seen at any layer boundary.
  std::size_t max_width() const noexcept;

  friend bool operator==(const CobordismWord& a, const CobordismWord& b) {
    return a.source_ == b.source_ && a.layers_ == b.layers_;
  }

 private:
  std::vector<Layer> layers_;
  std::size_t source_ = 0;
  std::size_t target_ = 0;
};

/// w1 followed by w2. Throws BoundaryMismatch if w1.target != w2.source.
CobordismWord compose(const CobordismWord& w1, const CobordismWord& w2);

/// Disjoint union; w1's wires sit above w2's. The shorter operand is padded
/// with cylinder layers.
CobordismWord tensor(const CobordismWord& w1, const CobordismWord& w2);

/// One connected component of a cobordism surface.
struct Component {
  std::vector<std::size_t> inputs;   // sorted
  std::vector<std::size_t> outputs;  // sorted
  std::size_t genus = 0;

  bool closed() const noexcept { return inputs.empty() && outputs.empty(); }
  friend bool operator==(const Component&, const Component&) = default;
};

/// Complete invariant of a cobordism up to diffeomorphism relative to the
/// boundary: boundary partition plus genus per connected component.
/// Components are kept in canonical order: by smallest input, then by
/// smallest output for components without inputs, closed ones last by genus.
struct ComponentProfile {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Component> components;

  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

/// Throws InternalInvariantViolation if a component's Euler characteristic
/// is inconsistent with an orientable surface (never for well-formed words).
ComponentProfile decompose_components(const CobordismWord& w);

bool is_equivalent(const CobordismWord& w1, const CobordismWord& w2);

/// Canonical representative of the equivalence class of `w`. Depends only
/// on decompose_components(w), hence idempotent.
CobordismWord normal_form(const CobordismWord& w);
CobordismWord normal_form(const ComponentProfile& profile);

/// Deterministic pseudo-random well-formed word; every layer boundary has at
/// most `max_width` wires. Requires max_width >= 1.
CobordismWord random_word(std::uint64_t seed, std::size_t max_width, std::size_t max_layers);

}  // namespace cob2
