#include "support/generators.hpp"

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "cob2/dsl.hpp"

namespace cob2::testing {

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

const std::vector<std::string_view>& substitutions(Generator g) {
  static const std::array<std::vector<std::string_view>, 6> table = {{
      // Cap
      {"cap ; id", "cap ; delta ; cup | id", "cap ; delta ; id | cup", "cap | cap ; mu"},
      // Cup
      {"id ; cup", "cap | id ; mu ; cup", "delta ; cup | cup"},
      // Id
      {"cap | id ; mu", "id | cap ; mu", "delta ; cup | id", "delta ; id | cup", "id ; id"},
      // Merge
      {"swap ; mu", "id | id ; mu", "mu ; id", "delta | id ; id | mu ; id | cup",
       "id | delta ; mu | id ; cup | id"},
      // Split
      {"delta ; swap", "id ; delta", "cap | id ; id | delta ; mu | id",
       "id | cap ; delta | id ; id | mu"},
      // Swap
      {"swap ; swap ; swap", "id | id ; swap"},
  }};
  return table[static_cast<std::size_t>(g)];
}

std::vector<Generator> ids(std::size_t n) { return std::vector<Generator>(n, Generator::Id); }

// Replaces generator `index` of layer `layer_index` with the word `sub`.
std::vector<Layer> splice(const std::vector<Layer>& layers, std::size_t layer_index,
                          std::size_t index, const CobordismWord& sub) {
  const auto& gens = layers[layer_index].generators();
  std::vector<Generator> above(gens.begin(), gens.begin() + static_cast<long>(index));
  std::vector<Generator> below_gens(gens.begin() + static_cast<long>(index) + 1, gens.end());
  const std::size_t out_above = Layer(above).outputs();
  const std::size_t out_below = Layer(below_gens).outputs();

  std::vector<Layer> result(layers.begin(), layers.begin() + static_cast<long>(layer_index));
  for (std::size_t s = 0; s < sub.layers().size(); ++s) {
    std::vector<Generator> row = s == 0 ? above : ids(out_above);
    const auto& mid = sub.layers()[s].generators();
    row.insert(row.end(), mid.begin(), mid.end());
    const std::vector<Generator> tail = s == 0 ? below_gens : ids(out_below);
    row.insert(row.end(), tail.begin(), tail.end());
    result.emplace_back(std::move(row));
  }
  result.insert(result.end(), layers.begin() + static_cast<long>(layer_index) + 1, layers.end());
  return result;
}

// Applies generator `index` alone first, then the rest of the layer.
std::vector<Layer> split_layer(const std::vector<Layer>& layers, std::size_t layer_index,
                               std::size_t index) {
  const auto& gens = layers[layer_index].generators();
  std::vector<Generator> first;
  std::vector<Generator> second;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i == index) {
      first.push_back(gens[i]);
      const auto out = ids(arity(gens[i]).outputs);
      second.insert(second.end(), out.begin(), out.end());
    } else {
      const auto in = ids(arity(gens[i]).inputs);
      first.insert(first.end(), in.begin(), in.end());
      second.push_back(gens[i]);
    }
  }
  std::vector<Layer> result(layers.begin(), layers.begin() + static_cast<long>(layer_index));
  result.emplace_back(std::move(first));
  result.emplace_back(std::move(second));
  result.insert(result.end(), layers.begin() + static_cast<long>(layer_index) + 1, layers.end());
  return result;
}

}  // namespace

CobordismWord equivalent_variant(const CobordismWord& w, std::uint64_t seed, std::size_t moves) {
  std::mt19937_64 rng(seed);
  CobordismWord current = w;
  for (std::size_t m = 0; m < moves; ++m) {
    const auto& layers = current.layers();
    if (layers.empty()) {
      if (current.source() > 0) current = CobordismWord::identity(current.source());
      continue;
    }
    const std::size_t layer_index = below(rng, layers.size());
    const Layer& layer = layers[layer_index];
    const std::size_t kind = below(rng, 6);
    if (kind == 0 && layer.size() >= 2) {
      current = CobordismWord(split_layer(layers, layer_index, below(rng, layer.size())));
    } else if (kind == 1 && layer.outputs() > 0) {
      std::vector<Layer> next = layers;
      next.insert(next.begin() + static_cast<long>(layer_index) + 1, Layer(ids(layer.outputs())));
      current = CobordismWord(std::move(next));
    } else {
      const std::size_t index = below(rng, layer.size());
      const auto& options = substitutions(layer.generators()[index]);
      const CobordismWord sub = parse(options[below(rng, options.size())]);
      current = CobordismWord(splice(layers, layer_index, index, sub));
    }
  }
  return current;
}

FrobeniusAlgebraData mutate_one_entry(const FrobeniusAlgebraData& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FrobeniusAlgebraData m = a;
  const std::size_t total = m.mu.size() + m.unit.size() + m.delta.size() + m.counit.size();
  std::size_t pick = below(rng, total);
  const FieldValue one = FieldValue::one(a.field);
  for (auto* tensor : {&m.mu, &m.unit, &m.delta, &m.counit}) {
    if (pick < tensor->size()) {
      (*tensor)[pick] += one;
      return m;
    }
    pick -= tensor->size();
  }
  return m;
}

CobordismWord random_word_from(std::uint64_t seed, std::size_t source, std::size_t max_width,
                               std::size_t max_layers) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    CobordismWord w = random_word(seed * 7919 + attempt, max_width, max_layers);
    if (w.source() == source) return w;
  }
}

}  // namespace cob2::testing
