#include "cob2/cobordism.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "cob2/errors.hpp"

namespace cob2 {

std::string_view keyword(Generator g) noexcept {
  switch (g) {
    case Generator::Cap: return "cap";
    case Generator::Cup: return "cup";
    case Generator::Id: return "id";
    case Generator::Merge: return "mu";
    case Generator::Split: return "delta";
    case Generator::Swap: return "swap";
  }
  return "?";
}

Layer::Layer(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (Generator g : generators_) {
    inputs_ += arity(g).inputs;
    outputs_ += arity(g).outputs;
  }
}

CobordismWord::CobordismWord(std::vector<Layer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw MalformedWord("a word needs at least one layer; use CobordismWord::empty");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i].empty()) throw MalformedWord("layer " + std::to_string(i + 1) + " is empty");
    if (i > 0 && layers_[i - 1].outputs() != layers_[i].inputs()) {
      throw MalformedWord("layer " + std::to_string(i + 1) + " needs " +
                          std::to_string(layers_[i].inputs()) + " inputs, gets " +
                          std::to_string(layers_[i - 1].outputs()));
    }
  }
  source_ = layers_.front().inputs();
  target_ = layers_.back().outputs();
}

CobordismWord CobordismWord::empty(std::size_t circles) {
  CobordismWord w;
  w.source_ = circles;
  w.target_ = circles;
  return w;
}

CobordismWord CobordismWord::identity(std::size_t circles) {
  if (circles == 0) return empty(0);
  return CobordismWord({Layer(std::vector<Generator>(circles, Generator::Id))});
}

CobordismWord CobordismWord::single(Generator g) { return CobordismWord({Layer({g})}); }

std::size_t CobordismWord::max_width() const noexcept {
  std::size_t width = source_;
  for (const auto& layer : layers_) width = std::max(width, layer.outputs());
  return width;
}

CobordismWord compose(const CobordismWord& w1, const CobordismWord& w2) {
  if (w1.target() != w2.source()) throw BoundaryMismatch(w1.target(), w2.source());
  if (w1.layers().empty()) return w2.layers().empty() ? CobordismWord::empty(w1.source()) : w2;
  if (w2.layers().empty()) return w1;
  std::vector<Layer> layers = w1.layers();
  layers.insert(layers.end(), w2.layers().begin(), w2.layers().end());
  return CobordismWord(std::move(layers));
}

CobordismWord tensor(const CobordismWord& w1, const CobordismWord& w2) {
  const std::size_t depth = std::max(w1.layers().size(), w2.layers().size());
  if (depth == 0) return CobordismWord::empty(w1.source() + w2.source());

  // An operand with no layers is padded by cylinders on its source circles.
  auto layer_at = [](const CobordismWord& w, std::size_t i) -> std::vector<Generator> {
    if (i < w.layers().size()) return w.layers()[i].generators();
    return std::vector<Generator>(w.target(), Generator::Id);
  };

  std::vector<Layer> layers;
  layers.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<Generator> gens = layer_at(w1, i);
    const std::vector<Generator> lower = layer_at(w2, i);
    gens.insert(gens.end(), lower.begin(), lower.end());
    layers.emplace_back(std::move(gens));
  }
  return CobordismWord(std::move(layers));
}

namespace {

class DisjointSets {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Sort key realizing the canonical component order.
std::pair<int, std::size_t> component_key(const Component& c) {
  if (!c.inputs.empty()) return {0, c.inputs.front()};
  if (!c.outputs.empty()) return {1, c.outputs.front()};
  return {2, c.genus};
}

}  // namespace

ComponentProfile decompose_components(const CobordismWord& w) {
  DisjointSets sets;
  std::vector<long long> chi;  // Euler characteristic contribution per node
  auto add_node = [&](long long contribution) {
    chi.push_back(contribution);
    return sets.add();
  };

  std::vector<std::size_t> input_nodes;
  std::vector<std::size_t> wires;
  for (std::size_t i = 0; i < w.source(); ++i) {
    input_nodes.push_back(add_node(0));
    wires.push_back(input_nodes.back());
  }

  for (const Layer& layer : w.layers()) {
    std::vector<std::size_t> next;
    next.reserve(layer.outputs());
    std::size_t pos = 0;
    for (Generator g : layer.generators()) {
      switch (g) {
        case Generator::Id:
          next.push_back(wires[pos++]);
          break;
        case Generator::Swap:
          next.push_back(wires[pos + 1]);
          next.push_back(wires[pos]);
          pos += 2;
          break;
        case Generator::Cap:
          next.push_back(add_node(1));
          break;
        case Generator::Cup: {
          const std::size_t n = add_node(1);
          sets.unite(n, wires[pos++]);
          break;
        }
        case Generator::Merge: {
          const std::size_t n = add_node(-1);
          sets.unite(n, wires[pos]);
          sets.unite(n, wires[pos + 1]);
          pos += 2;
          next.push_back(n);
          break;
        }
        case Generator::Split: {
          const std::size_t n = add_node(-1);
          sets.unite(n, wires[pos++]);
          next.push_back(n);
          next.push_back(n);
          break;
        }
      }
    }
    wires = std::move(next);
  }

  std::vector<std::size_t> output_nodes;
  for (std::size_t j = 0; j < w.target(); ++j) {
    output_nodes.push_back(add_node(0));
    sets.unite(output_nodes.back(), wires[j]);
  }

  struct Accumulator {
    Component component;
    long long chi = 0;
    bool used = false;
  };
  std::vector<Accumulator> by_root(chi.size());
  for (std::size_t node = 0; node < chi.size(); ++node) {
    auto& acc = by_root[sets.find(node)];
    acc.used = true;
    acc.chi += chi[node];
  }
  for (std::size_t i = 0; i < input_nodes.size(); ++i) {
    by_root[sets.find(input_nodes[i])].component.inputs.push_back(i);
  }
  for (std::size_t j = 0; j < output_nodes.size(); ++j) {
    by_root[sets.find(output_nodes[j])].component.outputs.push_back(j);
  }

  ComponentProfile profile{w.source(), w.target(), {}};
  for (auto& acc : by_root) {
    if (!acc.used) continue;
    const long long boundary =
        static_cast<long long>(acc.component.inputs.size() + acc.component.outputs.size());
    const long long twice_genus = 2 - acc.chi - boundary;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw InternalInvariantViolation("component with Euler characteristic " +
                                       std::to_string(acc.chi) + " and " +
                                       std::to_string(boundary) + " boundary circles");
    }
    acc.component.genus = static_cast<std::size_t>(twice_genus / 2);
    profile.components.push_back(std::move(acc.component));
  }
  std::stable_sort(profile.components.begin(), profile.components.end(),
                   [](const Component& a, const Component& b) {
                     return component_key(a) < component_key(b);
                   });
  return profile;
}

bool is_equivalent(const CobordismWord& w1, const CobordismWord& w2) {
  if (w1.source() != w2.source() || w1.target() != w2.target()) return false;
  return decompose_components(w1) == decompose_components(w2);
}

namespace {

// Connected genus-g surface with m inputs and n outputs: a left comb of
// merges, g handles, then a right comb of splits.
CobordismWord component_word(std::size_t m, std::size_t n, std::size_t genus) {
  std::vector<Layer> layers;
  if (m == 0) {
    layers.emplace_back(std::vector<Generator>{Generator::Cap});
  } else {
    for (std::size_t width = m; width >= 2; --width) {
      std::vector<Generator> gens{Generator::Merge};
      gens.insert(gens.end(), width - 2, Generator::Id);
      layers.emplace_back(std::move(gens));
    }
  }
  for (std::size_t h = 0; h < genus; ++h) {
    layers.emplace_back(std::vector<Generator>{Generator::Split});
    layers.emplace_back(std::vector<Generator>{Generator::Merge});
  }
  if (n == 0) {
    layers.emplace_back(std::vector<Generator>{Generator::Cup});
  } else {
    for (std::size_t width = 1; width < n; ++width) {
      std::vector<Generator> gens(width - 1, Generator::Id);
      gens.push_back(Generator::Split);
      layers.emplace_back(std::move(gens));
    }
  }
  if (layers.empty()) layers.emplace_back(std::vector<Generator>{Generator::Id});
  return CobordismWord(std::move(layers));
}

// Odd-even transposition sort of `keys`; every round that moves something
// becomes one layer of parallel swaps.
std::vector<Layer> sorting_swaps(std::vector<std::size_t> keys) {
  std::vector<Layer> layers;
  const std::size_t n = keys.size();
  if (n < 2) return layers;
  for (std::size_t round = 0; !std::is_sorted(keys.begin(), keys.end()); ++round) {
    std::vector<Generator> gens;
    bool moved = false;
    std::size_t i = 0;
    if (round % 2 == 1) {
      gens.push_back(Generator::Id);
      i = 1;
    }
    for (; i < n; i += 2) {
      if (i + 1 < n && keys[i] > keys[i + 1]) {
        std::swap(keys[i], keys[i + 1]);
        gens.push_back(Generator::Swap);
        moved = true;
      } else {
        gens.push_back(Generator::Id);
        if (i + 1 < n) gens.push_back(Generator::Id);
      }
    }
    if (moved) layers.emplace_back(std::move(gens));
  }
  return layers;
}

}  // namespace

CobordismWord normal_form(const ComponentProfile& profile) {
  CobordismWord body = CobordismWord::empty(0);
  std::vector<std::size_t> input_order;
  std::vector<std::size_t> output_order;
  for (const Component& c : profile.components) {
    body = tensor(body, component_word(c.inputs.size(), c.outputs.size(), c.genus));
    input_order.insert(input_order.end(), c.inputs.begin(), c.inputs.end());
    output_order.insert(output_order.end(), c.outputs.begin(), c.outputs.end());
  }
  if (input_order.size() != profile.source || output_order.size() != profile.target) {
    throw InternalInvariantViolation("component profile does not partition the boundary");
  }

  // Input wire i starts at position i and must end at its slot in input_order.
  std::vector<std::size_t> slot(profile.source);
  for (std::size_t p = 0; p < input_order.size(); ++p) slot[input_order[p]] = p;

  std::vector<Layer> layers = sorting_swaps(slot);
  layers.insert(layers.end(), body.layers().begin(), body.layers().end());
  const std::vector<Layer> tail = sorting_swaps(output_order);
  layers.insert(layers.end(), tail.begin(), tail.end());

  if (layers.empty()) return CobordismWord::empty(profile.source);
  return CobordismWord(std::move(layers));
}

CobordismWord normal_form(const CobordismWord& w) { return normal_form(decompose_components(w)); }

namespace {

struct WeightedChoice {
  Generator generator;
  unsigned weight;
};

}  // namespace

CobordismWord random_word(std::uint64_t seed, std::size_t max_width, std::size_t max_layers) {
  if (max_width == 0) throw MalformedWord("random_word needs max_width >= 1");
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto below = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::size_t width = below(max_width + 1);
  if (max_layers == 0) return CobordismWord::empty(width);
  const std::size_t depth = 1 + below(max_layers);

  std::vector<Layer> layers;
  for (std::size_t l = 0; l < depth; ++l) {
    std::vector<Generator> gens;
    if (width == 0) {
      gens.assign(1 + below(max_width), Generator::Cap);
    } else {
      std::size_t remaining = width;
      std::size_t out = 0;
      while (remaining > 0) {
        std::vector<WeightedChoice> options;
        if (out + 1 <= max_width) options.push_back({Generator::Id, 4});
        options.push_back({Generator::Cup, 1});
        if (out + 2 <= max_width) options.push_back({Generator::Split, 2});
        if (remaining >= 2 && out + 1 <= max_width) options.push_back({Generator::Merge, 3});
        if (remaining >= 2 && out + 2 <= max_width) options.push_back({Generator::Swap, 2});
        if (out + 1 <= max_width) options.push_back({Generator::Cap, 1});
        unsigned total = 0;
        for (const auto& o : options) total += o.weight;
        std::size_t pick = below(total);
        Generator g = options.back().generator;
        for (const auto& o : options) {
          if (pick < o.weight) {
            g = o.generator;
            break;
          }
          pick -= o.weight;
        }
        gens.push_back(g);
        remaining -= arity(g).inputs;
        out += arity(g).outputs;
      }
    }
    layers.emplace_back(std::move(gens));
    width = layers.back().outputs();
  }
  return CobordismWord(std::move(layers));
}

}  // namespace cob2
