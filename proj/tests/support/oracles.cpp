#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cob2::testing {

namespace {

struct Branch {
  std::vector<std::size_t> labels;
  FieldValue weight;
};

// All nonzero images of a single generator applied to basis labels `in`.
std::vector<Branch> generator_branches(Generator g, const std::vector<std::size_t>& in,
                                       const FrobeniusAlgebraData& a) {
  const std::size_t d = a.dim;
  const FieldSpec f = a.field;
  std::vector<Branch> out;
  switch (g) {
    case Generator::Id:
      out.push_back({{in[0]}, FieldValue::one(f)});
      break;
    case Generator::Swap:
      out.push_back({{in[1], in[0]}, FieldValue::one(f)});
      break;
    case Generator::Cap:
      for (std::size_t k = 0; k < d; ++k) {
        if (!a.unit[k].is_zero()) out.push_back({{k}, a.unit[k]});
      }
      break;
    case Generator::Cup:
      if (!a.counit[in[0]].is_zero()) out.push_back({{}, a.counit[in[0]]});
      break;
    case Generator::Merge:
      for (std::size_t k = 0; k < d; ++k) {
        const FieldValue& c = a.mu[(in[0] * d + in[1]) * d + k];
        if (!c.is_zero()) out.push_back({{k}, c});
      }
      break;
    case Generator::Split:
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const FieldValue& c = a.delta[(in[0] * d + i) * d + j];
          if (!c.is_zero()) out.push_back({{i, j}, c});
        }
      }
      break;
  }
  return out;
}

std::size_t encode(const std::vector<std::size_t>& labels, std::size_t d) {
  std::size_t index = 0;
  for (std::size_t l : labels) index = index * d + l;
  return index;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

ExactMatrix state_sum_evaluate(const CobordismWord& w, const FrobeniusAlgebraData& a) {
  const std::size_t d = a.dim;
  const FieldSpec f = a.field;
  ExactMatrix result(f, ipow(d, w.target()), ipow(d, w.source()));

  std::function<void(std::size_t, const std::vector<std::size_t>&, const FieldValue&, std::size_t)>
      walk;
  walk = [&](std::size_t layer_index, const std::vector<std::size_t>& labels,
             const FieldValue& weight, std::size_t column) {
    if (layer_index == w.layers().size()) {
      result(encode(labels, d), column) += weight;
      return;
    }
    const Layer& layer = w.layers()[layer_index];
    // Expand generator by generator.
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, const FieldValue&)>
        expand;
    expand = [&](std::size_t gen_index, std::size_t pos, std::vector<std::size_t>& next,
                 const FieldValue& acc) {
      if (gen_index == layer.size()) {
        walk(layer_index + 1, next, acc, column);
        return;
      }
      const Generator g = layer.generators()[gen_index];
      const std::size_t n_in = arity(g).inputs;
      const std::vector<std::size_t> in(labels.begin() + static_cast<long>(pos),
                                        labels.begin() + static_cast<long>(pos + n_in));
      for (const Branch& b : generator_branches(g, in, a)) {
        const std::size_t mark = next.size();
        next.insert(next.end(), b.labels.begin(), b.labels.end());
        expand(gen_index + 1, pos + n_in, next, acc * b.weight);
        next.resize(mark);
      }
    };
    std::vector<std::size_t> next;
    expand(0, 0, next, weight);
  };

  for (std::size_t column = 0; column < result.cols(); ++column) {
    std::vector<std::size_t> labels(w.source());
    std::size_t rest = column;
    for (std::size_t i = w.source(); i-- > 0;) {
      labels[i] = rest % d;
      rest /= d;
    }
    walk(0, labels, FieldValue::one(f), column);
  }
  return result;
}

std::vector<long long> truncated_poly_product(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<long long> p(n, 0), q(n, 0), r(2 * n, 0);
  p[i] = 1;
  q[j] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) r[a + b] += p[a] * q[b];
  }
  r.resize(n);
  return r;
}

std::vector<long long> class_sum_product(const FiniteGroup& g,
                                         const std::vector<std::vector<std::size_t>>& classes,
                                         std::size_t c, std::size_t d) {
  std::vector<long long> element_coeffs(g.order(), 0);
  for (std::size_t x : classes[c]) {
    for (std::size_t y : classes[d]) ++element_coeffs[g.multiply(x, y)];
  }
  std::vector<long long> out;
  for (const auto& cls : classes) {
    const long long v = element_coeffs[cls.front()];
    for (std::size_t x : cls) {
      if (element_coeffs[x] != v) throw std::logic_error("product is not central");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> class_sizes_by_closure(const FiniteGroup& g) {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<std::size_t> cls{x};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t y : std::set<std::size_t>(cls)) {
        for (std::size_t h = 0; h < g.order(); ++h) {
          // h y h^-1 with the inverse found by search.
          std::size_t hinv = 0;
          while (g.multiply(h, hinv) != g.identity()) ++hinv;
          grew |= cls.insert(g.multiply(g.multiply(h, y), hinv)).second;
        }
      }
    }
    classes.insert(cls);
  }
  std::vector<std::size_t> sizes;
  for (const auto& cls : classes) sizes.push_back(cls.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::size_t commuting_pairs(const FiniteGroup& g) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) count += g.multiply(a, b) == g.multiply(b, a);
  }
  return count;
}

}  // namespace cob2::testing
