#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cob2/cobordism.hpp"
#include "cob2/errors.hpp"
#include "cob2/frobenius.hpp"
#include "cob2/matrix.hpp"

namespace cob2 {

struct EvalConfig {
  /// Largest dense size d^inputs * d^outputs allowed for a single layer map
  /// (and for the running product).
  std::size_t max_tensor_entries = std::size_t{1} << 20;
};

class InvalidAlgebra : public Error {
 public:
  explicit InvalidAlgebra(CheckReport report);
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

class EvalTooLarge : public Error {
 public:
  /// `layer` is 1-based.
  EvalTooLarge(std::size_t layer, std::size_t entries, std::size_t limit);
  std::size_t layer() const noexcept { return layer_; }

 private:
  std::size_t layer_;
};

/// The 2D TQFT determined by a commutative Frobenius algebra A: sends n
/// circles to A^(x)n and a word to the d^target x d^source matrix obtained by
/// composing its layer maps. Each layer map is the Kronecker product of its
/// generators' matrices: Cap -> unit, Cup -> counit, Id -> identity,
/// Merge -> mu, Split -> delta, Swap -> the factor swap.
class Tqft {
 public:
  /// Throws InvalidAlgebra unless check_all(algebra) passes.
  explicit Tqft(FrobeniusAlgebraData algebra, EvalConfig config = {});

  /// Skips the axiom check; only tensor shapes are validated. Used to probe
  /// broken algebras, e.g. by check_relations.
  static Tqft unchecked(FrobeniusAlgebraData algebra, EvalConfig config = {});

  const FrobeniusAlgebraData& algebra() const noexcept { return algebra_; }
  const EvalConfig& config() const noexcept { return config_; }
  std::size_t dim() const noexcept { return algebra_.dim; }

  /// Throws EvalTooLarge.
  ExactMatrix operator()(const CobordismWord& w) const;
  ExactMatrix generator_matrix(Generator g) const;

  /// eps(H^g(eta(1))) with the handle operator H = mu . delta.
  FieldValue genus_invariant(std::size_t genus) const;
  /// H as a d x d matrix.
  ExactMatrix handle_operator() const;

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    FieldValue value;
  };
  struct SparseMap {
    std::size_t rows;
    std::size_t cols;
    std::vector<Entry> entries;
  };

  Tqft(FrobeniusAlgebraData algebra, EvalConfig config, bool verify);
  SparseMap layer_map(const Layer& layer) const;

  FrobeniusAlgebraData algebra_;
  EvalConfig config_;
  std::array<SparseMap, 6> generators_;
};

ExactMatrix evaluate(const CobordismWord& w, const FrobeniusAlgebraData& a,
                     const EvalConfig& config = {});

/// Invariant of the closed genus-g surface, via the d x d handle operator.
FieldValue genus_invariant(std::size_t genus, const FrobeniusAlgebraData& a,
                           const EvalConfig& config = {});

struct Relation {
  std::string name;
  CobordismWord lhs;
  CobordismWord rhs;
};

/// Every equation among generators that holds in the 2-cobordism category
/// (identity, unit/counit, (co)associativity, (co)commutativity, Frobenius).
const std::vector<Relation>& relation_table();

/// Evaluates both sides of every relation; one report item per relation.
/// Works on any shape-valid algebra so that broken ones can be diagnosed.
CheckReport check_relations(const FrobeniusAlgebraData& a, const EvalConfig& config = {});

using Evaluator = std::function<ExactMatrix(const CobordismWord&)>;

/// Reads mu, unit, delta and counit back from a functor by evaluating the
/// single-generator words.
FrobeniusAlgebraData extract_algebra(const Evaluator& z);

}  // namespace cob2
