#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cob2/errors.hpp"
#include "cob2/field.hpp"
#include "cob2/group.hpp"
#include "cob2/matrix.hpp"

namespace cob2 {

/// Structure constants of a finite-dimensional algebra with a coalgebra
/// structure, in a fixed basis e_0 .. e_{d-1}:
///
///   mu(e_i, e_j) = sum_k mu[i][j][k] e_k      unit  = eta(1)
///   delta(e_k)   = sum_ij delta[k][i][j] e_i (x) e_j   counit[i] = eps(e_i)
///
/// Nothing beyond shapes is validated here; see check_all().
struct FrobeniusAlgebraData {
  FieldSpec field{};
  std::size_t dim = 0;
  std::vector<FieldValue> mu;      // dim^3, index (i * dim + j) * dim + k
  std::vector<FieldValue> unit;    // dim
  std::vector<FieldValue> delta;   // dim^3, index (k * dim + i) * dim + j
  std::vector<FieldValue> counit;  // dim
  std::vector<std::string> labels;

  const FieldValue& mu_at(std::size_t i, std::size_t j, std::size_t k) const {
    return mu[(i * dim + j) * dim + k];
  }
  FieldValue& mu_at(std::size_t i, std::size_t j, std::size_t k) {
    return mu[(i * dim + j) * dim + k];
  }
  const FieldValue& delta_at(std::size_t k, std::size_t i, std::size_t j) const {
    return delta[(k * dim + i) * dim + j];
  }
  FieldValue& delta_at(std::size_t k, std::size_t i, std::size_t j) {
    return delta[(k * dim + i) * dim + j];
  }

  /// Throws FormatError if tensor sizes or entry fields are inconsistent.
  void validate_shape() const;

  /// Structure tensors and field only; labels are ignored.
  friend bool operator==(const FrobeniusAlgebraData& a, const FrobeniusAlgebraData& b) {
    return a.field == b.field && a.dim == b.dim && a.mu == b.mu && a.unit == b.unit &&
           a.delta == b.delta && a.counit == b.counit;
  }
};

/// One failed coordinate of an identity: lhs != rhs at `coords`.
struct Violation {
  std::vector<std::size_t> coords;
  FieldValue lhs;
  FieldValue rhs;
};

struct CheckItem {
  std::string name;
  std::vector<Violation> violations;
  /// Set when the identity could not even be evaluated (e.g. singular pairing).
  std::string note;

  bool passed() const noexcept { return violations.empty() && note.empty(); }
};

/// Outcome of one or more identity checks; one item per identity.
struct CheckReport {
  std::vector<CheckItem> items;

  bool passed() const noexcept;
  /// Null if no item of that name was checked.
  const CheckItem* find(std::string_view name) const noexcept;
  bool failed(std::string_view name) const noexcept;
  std::vector<std::string> failed_names() const;
  void append(const CheckReport& other);
  /// Human-readable summary, one line per item.
  std::string summary() const;
};

class DerivedStructureInvalid : public Error {
 public:
  explicit DerivedStructureInvalid(CheckReport report);
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

/// associativity, left-unit, right-unit.
CheckReport check_monoid(const FrobeniusAlgebraData& a);
/// coassociativity, left-counit, right-counit.
CheckReport check_comonoid(const FrobeniusAlgebraData& a);
/// frobenius-left: (id x mu)(delta x id) = delta mu;
/// frobenius-right: (mu x id)(id x delta) = delta mu.
CheckReport check_frobenius(const FrobeniusAlgebraData& a);
/// commutativity (mu swap = mu) and cocommutativity (swap delta = delta).
CheckReport check_commutative(const FrobeniusAlgebraData& a);
/// snake-identity (pairing against its inverse) and
/// copairing-matches-delta-unit (the copairing equals delta(eta(1))).
CheckReport check_nondegenerate(const FrobeniusAlgebraData& a);
CheckReport check_all(const FrobeniusAlgebraData& a);

/// beta[i][j] = eps(mu(e_i, e_j)).
ExactMatrix pairing(const FrobeniusAlgebraData& a);
/// Inverse of pairing(a). Throws DegeneratePairing.
ExactMatrix copairing(const FrobeniusAlgebraData& a);

/// Completes (mu, unit, counit) with the unique compatible comultiplication
/// delta(a) = sum_ij theta[i][j] (a e_i) (x) e_j. Throws DegeneratePairing,
/// or DerivedStructureInvalid if the result fails the comonoid or Frobenius
/// checks.
FrobeniusAlgebraData derive_comultiplication(FieldSpec field, std::size_t dim,
                                             std::vector<FieldValue> mu,
                                             std::vector<FieldValue> unit,
                                             std::vector<FieldValue> counit,
                                             std::vector<std::string> labels = {});

/// k[x]/(x^n) with eps(x^(n-1)) = 1 and eps(x^k) = 0 below.
FrobeniusAlgebraData truncated_poly(std::size_t n, FieldSpec field = FieldSpec::rational());
/// Group algebra of an abelian group with eps(g) = [g = e] / |G|.
/// Throws NonAbelianGroup or BadCharacteristic.
FrobeniusAlgebraData group_algebra(const FiniteGroup& g, FieldSpec field = FieldSpec::rational());
/// Center of the group algebra in the basis of conjugacy-class sums, with
/// eps(z_C) = [C = {e}] / |G|. Throws BadCharacteristic.
FrobeniusAlgebraData group_center(const FiniteGroup& g, FieldSpec field = FieldSpec::rational());
/// Full n x n matrix algebra with the trace form: Frobenius but not
/// commutative for n >= 2. Basis E_ab has index a * n + b.
FrobeniusAlgebraData matrix_algebra(std::size_t n, FieldSpec field = FieldSpec::rational());

/// The reference set of commutative Frobenius algebras, keyed by name.
std::vector<std::pair<std::string, FrobeniusAlgebraData>> registry();

}  // namespace cob2
