#include "cob2/evaluator.hpp"

#include <limits>
#include <utility>

#include "cob2/dsl.hpp"

namespace cob2 {

InvalidAlgebra::InvalidAlgebra(CheckReport report)
    : Error("algebra is not a commutative Frobenius algebra:\n" + report.summary()),
      report_(std::move(report)) {}

EvalTooLarge::EvalTooLarge(std::size_t layer, std::size_t entries, std::size_t limit)
    : Error("layer " + std::to_string(layer) + " needs " +
            (entries == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                : std::to_string(entries)) +
            " dense entries, limit is " + std::to_string(limit)),
      layer_(layer) {}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

std::size_t generator_slot(Generator g) { return static_cast<std::size_t>(g); }

}  // namespace

Tqft::Tqft(FrobeniusAlgebraData algebra, EvalConfig config) : Tqft(std::move(algebra), config, true) {}

Tqft Tqft::unchecked(FrobeniusAlgebraData algebra, EvalConfig config) {
  return Tqft(std::move(algebra), config, false);
}

Tqft::Tqft(FrobeniusAlgebraData algebra, EvalConfig config, bool verify)
    : algebra_(std::move(algebra)), config_(config) {
  algebra_.validate_shape();
  if (config_.max_tensor_entries == 0) throw Error("max_tensor_entries must be at least 1");
  if (verify) {
    CheckReport report = check_all(algebra_);
    if (!report.passed()) throw InvalidAlgebra(std::move(report));
  }
  const std::size_t d = algebra_.dim;
  const FieldSpec f = algebra_.field;
  auto keep = [](SparseMap& m, std::size_t r, std::size_t c, const FieldValue& v) {
    if (!v.is_zero()) m.entries.push_back({r, c, v});
  };

  SparseMap cap{d, 1, {}};
  SparseMap cup{1, d, {}};
  SparseMap id{d, d, {}};
  SparseMap merge{d, d * d, {}};
  SparseMap split{d * d, d, {}};
  SparseMap swap{d * d, d * d, {}};
  for (std::size_t k = 0; k < d; ++k) {
    keep(cap, k, 0, algebra_.unit[k]);
    keep(cup, 0, k, algebra_.counit[k]);
    keep(id, k, k, FieldValue::one(f));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      keep(swap, j * d + i, i * d + j, FieldValue::one(f));
      for (std::size_t k = 0; k < d; ++k) {
        keep(merge, k, i * d + j, algebra_.mu_at(i, j, k));
        keep(split, i * d + j, k, algebra_.delta_at(k, i, j));
      }
    }
  }
  generators_[generator_slot(Generator::Cap)] = std::move(cap);
  generators_[generator_slot(Generator::Cup)] = std::move(cup);
  generators_[generator_slot(Generator::Id)] = std::move(id);
  generators_[generator_slot(Generator::Merge)] = std::move(merge);
  generators_[generator_slot(Generator::Split)] = std::move(split);
  generators_[generator_slot(Generator::Swap)] = std::move(swap);
}

ExactMatrix Tqft::generator_matrix(Generator g) const {
  const SparseMap& m = generators_[generator_slot(g)];
  ExactMatrix out(algebra_.field, m.rows, m.cols);
  for (const auto& e : m.entries) out(e.row, e.col) = e.value;
  return out;
}

// Kronecker product of the generators' sparse matrices, top wire most
// significant.
Tqft::SparseMap Tqft::layer_map(const Layer& layer) const {
  SparseMap acc{1, 1, {{0, 0, FieldValue::one(algebra_.field)}}};
  for (Generator g : layer.generators()) {
    const SparseMap& m = generators_[generator_slot(g)];
    SparseMap next{acc.rows * m.rows, acc.cols * m.cols, {}};
    next.entries.reserve(acc.entries.size() * m.entries.size());
    for (const auto& a : acc.entries) {
      for (const auto& b : m.entries) {
        next.entries.push_back({a.row * m.rows + b.row, a.col * m.cols + b.col, a.value * b.value});
      }
    }
    acc = std::move(next);
  }
  return acc;
}

ExactMatrix Tqft::operator()(const CobordismWord& w) const {
  const std::size_t d = algebra_.dim;
  const std::size_t limit = config_.max_tensor_entries;
  const std::size_t source_states = saturating_pow(d, w.source());
  // The running product starts as the identity on the source states; an
  // oversized start is charged to the first layer (layer 0 for a bare identity).
  const std::size_t start = saturating_mul(source_states, source_states);
  if (start > limit) throw EvalTooLarge(w.layers().empty() ? 0 : 1, start, limit);

  ExactMatrix acc = ExactMatrix::identity(algebra_.field, source_states);
  for (std::size_t l = 0; l < w.layers().size(); ++l) {
    const Layer& layer = w.layers()[l];
    const std::size_t in_states = saturating_pow(d, layer.inputs());
    const std::size_t out_states = saturating_pow(d, layer.outputs());
    const std::size_t dense = saturating_mul(in_states, out_states);
    if (dense > limit) throw EvalTooLarge(l + 1, dense, limit);
    const std::size_t running = saturating_mul(out_states, source_states);
    if (running > limit) throw EvalTooLarge(l + 1, running, limit);

    const SparseMap map = layer_map(layer);
    ExactMatrix next(algebra_.field, out_states, source_states);
    for (const auto& e : map.entries) {
      for (std::size_t j = 0; j < source_states; ++j) {
        const FieldValue& x = acc(e.col, j);
        if (!x.is_zero()) next(e.row, j).add_product(e.value, x);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

ExactMatrix Tqft::handle_operator() const {
  const std::size_t d = algebra_.dim;
  ExactMatrix h(algebra_.field, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const FieldValue& c = algebra_.delta_at(k, i, j);
        if (c.is_zero()) continue;
        for (std::size_t m = 0; m < d; ++m) h(m, k).add_product(c, algebra_.mu_at(i, j, m));
      }
    }
  }
  return h;
}

FieldValue Tqft::genus_invariant(std::size_t genus) const {
  const std::size_t d = algebra_.dim;
  const ExactMatrix power = handle_operator().pow(genus);
  FieldValue z = FieldValue::zero(algebra_.field);
  for (std::size_t i = 0; i < d; ++i) {
    if (algebra_.counit[i].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k) {
      z.add_product(algebra_.counit[i], power(i, k) * algebra_.unit[k]);
    }
  }
  return z;
}

ExactMatrix evaluate(const CobordismWord& w, const FrobeniusAlgebraData& a,
                     const EvalConfig& config) {
  return Tqft(a, config)(w);
}

FieldValue genus_invariant(std::size_t genus, const FrobeniusAlgebraData& a,
                           const EvalConfig& config) {
  return Tqft(a, config).genus_invariant(genus);
}

const std::vector<Relation>& relation_table() {
  static const std::vector<Relation> table = [] {
    const std::pair<const char*, std::pair<const char*, const char*>> rows[] = {
        {"identity-cap", {"cap ; id", "cap"}},
        {"identity-cup", {"id ; cup", "cup"}},
        {"identity-merge-before", {"id | id ; mu", "mu"}},
        {"identity-merge-after", {"mu ; id", "mu"}},
        {"identity-split-before", {"id ; delta", "delta"}},
        {"identity-split-after", {"delta ; id | id", "delta"}},
        {"unit-left", {"cap | id ; mu", "id"}},
        {"unit-right", {"id | cap ; mu", "id"}},
        {"counit-left", {"delta ; cup | id", "id"}},
        {"counit-right", {"delta ; id | cup", "id"}},
        {"associativity", {"mu | id ; mu", "id | mu ; mu"}},
        {"coassociativity", {"delta ; delta | id", "delta ; id | delta"}},
        {"commutativity", {"swap ; mu", "mu"}},
        {"cocommutativity", {"delta ; swap", "delta"}},
        {"frobenius-left", {"delta | id ; id | mu", "mu ; delta"}},
        {"frobenius-right", {"id | delta ; mu | id", "mu ; delta"}},
    };
    std::vector<Relation> out;
    for (const auto& [name, sides] : rows) out.push_back({name, parse(sides.first), parse(sides.second)});
    return out;
  }();
  return table;
}

CheckReport check_relations(const FrobeniusAlgebraData& a, const EvalConfig& config) {
  const Tqft z = Tqft::unchecked(a, config);
  CheckReport report;
  for (const Relation& rel : relation_table()) {
    CheckItem item{rel.name, {}, {}};
    const ExactMatrix lhs = z(rel.lhs);
    const ExactMatrix rhs = z(rel.rhs);
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      for (std::size_t c = 0; c < lhs.cols(); ++c) {
        if (!(lhs(r, c) == rhs(r, c))) item.violations.push_back({{r, c}, lhs(r, c), rhs(r, c)});
      }
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

FrobeniusAlgebraData extract_algebra(const Evaluator& z) {
  const ExactMatrix id = z(CobordismWord::single(Generator::Id));
  const ExactMatrix cap = z(CobordismWord::single(Generator::Cap));
  const ExactMatrix cup = z(CobordismWord::single(Generator::Cup));
  const ExactMatrix merge = z(CobordismWord::single(Generator::Merge));
  const ExactMatrix split = z(CobordismWord::single(Generator::Split));
  const std::size_t d = id.rows();
  const FieldSpec f = id.field();

  FrobeniusAlgebraData a;
  a.field = f;
  a.dim = d;
  a.mu.assign(d * d * d, FieldValue::zero(f));
  a.delta.assign(d * d * d, FieldValue::zero(f));
  for (std::size_t k = 0; k < d; ++k) {
    a.unit.push_back(cap(k, 0));
    a.counit.push_back(cup(0, k));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        a.mu_at(i, j, k) = merge(k, i * d + j);
        a.delta_at(k, i, j) = split(i * d + j, k);
      }
    }
  }
  a.validate_shape();
  return a;
}

}  // namespace cob2
