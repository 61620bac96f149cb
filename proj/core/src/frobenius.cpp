#include "cob2/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace cob2 {

void FrobeniusAlgebraData::validate_shape() const {
  if (dim == 0) throw FormatError("algebra dimension must be at least 1");
  const std::size_t cube = dim * dim * dim;
  auto check = [&](const std::vector<FieldValue>& values, std::size_t expected, const char* what) {
    if (values.size() != expected) {
      throw FormatError(std::string(what) + " has " + std::to_string(values.size()) +
                        " entries, expected " + std::to_string(expected));
    }
    for (const auto& v : values) {
      if (v.field() != field) {
        throw FormatError(std::string(what) + " has an entry outside " + field.to_string());
      }
    }
  };
  check(mu, cube, "mu");
  check(unit, dim, "unit");
  check(delta, cube, "delta");
  check(counit, dim, "counit");
  if (!labels.empty() && labels.size() != dim) {
    throw FormatError("expected " + std::to_string(dim) + " basis labels");
  }
}

bool CheckReport::passed() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed(); });
}

const CheckItem* CheckReport::find(std::string_view name) const noexcept {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

bool CheckReport::failed(std::string_view name) const noexcept {
  const CheckItem* item = find(name);
  return item != nullptr && !item->passed();
}

std::vector<std::string> CheckReport::failed_names() const {
  std::vector<std::string> names;
  for (const auto& item : items) {
    if (!item.passed()) names.push_back(item.name);
  }
  return names;
}

void CheckReport::append(const CheckReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  for (const auto& item : items) {
    out << item.name << ": ";
    if (item.passed()) {
      out << "pass\n";
      continue;
    }
    out << "FAIL";
    if (!item.note.empty()) out << " (" << item.note << ")";
    if (!item.violations.empty()) {
      const Violation& v = item.violations.front();
      out << " (" << item.violations.size() << " coordinate"
          << (item.violations.size() == 1 ? "" : "s") << ", first at [";
      for (std::size_t i = 0; i < v.coords.size(); ++i) out << (i ? "," : "") << v.coords[i];
      out << "]: " << v.lhs << " != " << v.rhs << ")";
    }
    out << "\n";
  }
  return out.str();
}

DerivedStructureInvalid::DerivedStructureInvalid(CheckReport report)
    : Error("derived comultiplication is invalid:\n" + report.summary()),
      report_(std::move(report)) {}

namespace {

FieldValue kronecker_delta(FieldSpec f, std::size_t a, std::size_t b) {
  return a == b ? FieldValue::one(f) : FieldValue::zero(f);
}

void compare(CheckItem& item, std::vector<std::size_t> coords, FieldValue lhs, FieldValue rhs) {
  if (!(lhs == rhs)) item.violations.push_back({std::move(coords), std::move(lhs), std::move(rhs)});
}

}  // namespace

CheckReport check_monoid(const FrobeniusAlgebraData& a) {
  a.validate_shape();
  const std::size_t d = a.dim;
  const FieldSpec f = a.field;
  CheckItem assoc{"associativity", {}, {}};
  CheckItem left{"left-unit", {}, {}};
  CheckItem right{"right-unit", {}, {}};

  // (e_i e_j) e_l versus e_i (e_j e_l), coefficient of e_m.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = 0; m < d; ++m) {
          FieldValue lhs = FieldValue::zero(f);
          FieldValue rhs = FieldValue::zero(f);
          for (std::size_t k = 0; k < d; ++k) {
            lhs.add_product(a.mu_at(i, j, k), a.mu_at(k, l, m));
            rhs.add_product(a.mu_at(j, l, k), a.mu_at(i, k, m));
          }
          compare(assoc, {i, j, l, m}, std::move(lhs), std::move(rhs));
        }
      }
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t m = 0; m < d; ++m) {
      FieldValue l = FieldValue::zero(f);
      FieldValue r = FieldValue::zero(f);
      for (std::size_t k = 0; k < d; ++k) {
        l.add_product(a.unit[k], a.mu_at(k, j, m));
        r.add_product(a.unit[k], a.mu_at(j, k, m));
      }
      compare(left, {j, m}, std::move(l), kronecker_delta(f, j, m));
      compare(right, {j, m}, std::move(r), kronecker_delta(f, j, m));
    }
  }
  return {{std::move(assoc), std::move(left), std::move(right)}};
}

CheckReport check_comonoid(const FrobeniusAlgebraData& a) {
  a.validate_shape();
  const std::size_t d = a.dim;
  const FieldSpec f = a.field;
  CheckItem coassoc{"coassociativity", {}, {}};
  CheckItem left{"left-counit", {}, {}};
  CheckItem right{"right-counit", {}, {}};

  // Coefficient of e_i (x) e_j (x) e_l in (delta x id) delta(e_k) and (id x delta) delta(e_k).
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
          FieldValue lhs = FieldValue::zero(f);
          FieldValue rhs = FieldValue::zero(f);
          for (std::size_t x = 0; x < d; ++x) {
            lhs.add_product(a.delta_at(k, x, l), a.delta_at(x, i, j));
            rhs.add_product(a.delta_at(k, i, x), a.delta_at(x, j, l));
          }
          compare(coassoc, {k, i, j, l}, std::move(lhs), std::move(rhs));
        }
      }
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t m = 0; m < d; ++m) {
      FieldValue l = FieldValue::zero(f);
      FieldValue r = FieldValue::zero(f);
      for (std::size_t x = 0; x < d; ++x) {
        l.add_product(a.counit[x], a.delta_at(k, x, m));
        r.add_product(a.delta_at(k, m, x), a.counit[x]);
      }
      compare(left, {k, m}, std::move(l), kronecker_delta(f, k, m));
      compare(right, {k, m}, std::move(r), kronecker_delta(f, k, m));
    }
  }
  return {{std::move(coassoc), std::move(left), std::move(right)}};
}

CheckReport check_frobenius(const FrobeniusAlgebraData& a) {
  a.validate_shape();
  const std::size_t d = a.dim;
  const FieldSpec f = a.field;
  CheckItem left{"frobenius-left", {}, {}};
  CheckItem right{"frobenius-right", {}, {}};

  // Coefficient of e_p (x) e_q in the image of e_i (x) e_j.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
          FieldValue middle = FieldValue::zero(f);
          FieldValue l = FieldValue::zero(f);
          FieldValue r = FieldValue::zero(f);
          for (std::size_t x = 0; x < d; ++x) {
            middle.add_product(a.mu_at(i, j, x), a.delta_at(x, p, q));
            l.add_product(a.delta_at(i, p, x), a.mu_at(x, j, q));
            r.add_product(a.delta_at(j, x, q), a.mu_at(i, x, p));
          }
          compare(left, {i, j, p, q}, std::move(l), middle);
          compare(right, {i, j, p, q}, std::move(r), std::move(middle));
        }
      }
    }
  }
  return {{std::move(left), std::move(right)}};
}

CheckReport check_commutative(const FrobeniusAlgebraData& a) {
  a.validate_shape();
  const std::size_t d = a.dim;
  CheckItem comm{"commutativity", {}, {}};
  CheckItem cocomm{"cocommutativity", {}, {}};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        compare(comm, {i, j, k}, a.mu_at(j, i, k), a.mu_at(i, j, k));
        compare(cocomm, {k, i, j}, a.delta_at(k, j, i), a.delta_at(k, i, j));
      }
    }
  }
  return {{std::move(comm), std::move(cocomm)}};
}

ExactMatrix pairing(const FrobeniusAlgebraData& a) {
  a.validate_shape();
  ExactMatrix beta(a.field, a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) beta(i, j).add_product(a.mu_at(i, j, k), a.counit[k]);
    }
  }
  return beta;
}

ExactMatrix copairing(const FrobeniusAlgebraData& a) {
  auto theta = pairing(a).inverse();
  if (!theta) throw DegeneratePairing("the pairing eps(mu(-, -)) is singular");
  return std::move(*theta);
}

CheckReport check_nondegenerate(const FrobeniusAlgebraData& a) {
  const std::size_t d = a.dim;
  const FieldSpec f = a.field;
  CheckItem snake{"snake-identity", {}, {}};
  CheckItem matches{"copairing-matches-delta-unit", {}, {}};
  const ExactMatrix beta = pairing(a);
  const auto theta = beta.inverse();
  if (!theta) {
    snake.note = "DegeneratePairing: the pairing is singular";
    matches.note = "no copairing exists";
    return {{std::move(snake), std::move(matches)}};
  }
  // (beta x id)(id x theta)(e_i) = sum_jk beta[i][j] theta[j][k] e_k.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      FieldValue v = FieldValue::zero(f);
      for (std::size_t j = 0; j < d; ++j) v.add_product(beta(i, j), (*theta)(j, k));
      compare(snake, {i, k}, std::move(v), kronecker_delta(f, i, k));
    }
  }
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      FieldValue v = FieldValue::zero(f);
      for (std::size_t k = 0; k < d; ++k) v.add_product(a.unit[k], a.delta_at(k, p, q));
      compare(matches, {p, q}, std::move(v), (*theta)(p, q));
    }
  }
  return {{std::move(snake), std::move(matches)}};
}

CheckReport check_all(const FrobeniusAlgebraData& a) {
  CheckReport report = check_monoid(a);
  report.append(check_comonoid(a));
  report.append(check_frobenius(a));
  report.append(check_commutative(a));
  report.append(check_nondegenerate(a));
  return report;
}

FrobeniusAlgebraData derive_comultiplication(FieldSpec field, std::size_t dim,
                                             std::vector<FieldValue> mu,
                                             std::vector<FieldValue> unit,
                                             std::vector<FieldValue> counit,
                                             std::vector<std::string> labels) {
  FrobeniusAlgebraData a{field,
                         dim,
                         std::move(mu),
                         std::move(unit),
                         std::vector<FieldValue>(dim * dim * dim, FieldValue::zero(field)),
                         std::move(counit),
                         std::move(labels)};
  a.validate_shape();
  const ExactMatrix theta = copairing(a);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t p = 0; p < dim; ++p) {
        const FieldValue& m = a.mu_at(k, i, p);
        if (m.is_zero()) continue;
        for (std::size_t q = 0; q < dim; ++q) a.delta_at(k, p, q).add_product(theta(i, q), m);
      }
    }
  }
  CheckReport report = check_comonoid(a);
  report.append(check_frobenius(a));
  if (!report.passed()) throw DerivedStructureInvalid(std::move(report));
  return a;
}

FrobeniusAlgebraData truncated_poly(std::size_t n, FieldSpec field) {
  if (n == 0) throw FormatError("truncated polynomial algebra needs n >= 1");
  const FieldValue zero = FieldValue::zero(field);
  const FieldValue one = FieldValue::one(field);
  std::vector<FieldValue> mu(n * n * n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) mu[(i * n + j) * n + i + j] = one;
  }
  std::vector<FieldValue> unit(n, zero);
  unit[0] = one;
  std::vector<FieldValue> counit(n, zero);
  counit[n - 1] = one;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k));
  }
  return derive_comultiplication(field, n, std::move(mu), std::move(unit), std::move(counit),
                                 std::move(labels));
}

namespace {

void require_coprime(const FiniteGroup& g, FieldSpec field) {
  if (!field.is_rational() && g.order() % field.characteristic() == 0) {
    throw BadCharacteristic("characteristic " + std::to_string(field.characteristic()) +
                            " divides the group order " + std::to_string(g.order()));
  }
}

FieldValue inverse_order(const FiniteGroup& g, FieldSpec field) {
  return FieldValue::integer(field, static_cast<long long>(g.order())).inverse();
}

}  // namespace

FrobeniusAlgebraData group_algebra(const FiniteGroup& g, FieldSpec field) {
  if (!g.is_abelian()) throw NonAbelianGroup("group algebra of a non-abelian group is not commutative");
  require_coprime(g, field);
  const std::size_t n = g.order();
  const FieldValue zero = FieldValue::zero(field);
  std::vector<FieldValue> mu(n * n * n, zero);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) mu[(x * n + y) * n + g.multiply(x, y)] = FieldValue::one(field);
  }
  std::vector<FieldValue> unit(n, zero);
  unit[g.identity()] = FieldValue::one(field);
  std::vector<FieldValue> counit(n, zero);
  counit[g.identity()] = inverse_order(g, field);
  return derive_comultiplication(field, n, std::move(mu), std::move(unit), std::move(counit),
                                 g.names());
}

FrobeniusAlgebraData group_center(const FiniteGroup& g, FieldSpec field) {
  require_coprime(g, field);
  const auto classes = conjugacy_classes(g);
  const std::size_t d = classes.size();
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t x : classes[c]) class_of[x] = c;
  }
  // z_C z_D = sum_E #{(c, d) in C x D : c d = rep(E)} z_E with rep(E) = min E.
  std::vector<long long> counts(d * d * d, 0);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t dd = 0; dd < d; ++dd) {
      for (std::size_t x : classes[c]) {
        for (std::size_t y : classes[dd]) {
          const std::size_t xy = g.multiply(x, y);
          if (xy == classes[class_of[xy]].front()) ++counts[(c * d + dd) * d + class_of[xy]];
        }
      }
    }
  }
  std::vector<FieldValue> mu;
  mu.reserve(counts.size());
  for (long long v : counts) mu.push_back(FieldValue::integer(field, v));
  std::vector<FieldValue> unit(d, FieldValue::zero(field));
  unit[0] = FieldValue::one(field);
  std::vector<FieldValue> counit(d, FieldValue::zero(field));
  counit[0] = inverse_order(g, field);
  std::vector<std::string> labels;
  for (const auto& cls : classes) labels.push_back("z[" + g.name(cls.front()) + "]");
  return derive_comultiplication(field, d, std::move(mu), std::move(unit), std::move(counit),
                                 std::move(labels));
}

FrobeniusAlgebraData matrix_algebra(std::size_t n, FieldSpec field) {
  if (n == 0) throw FormatError("matrix algebra needs n >= 1");
  const std::size_t d = n * n;
  const FieldValue zero = FieldValue::zero(field);
  const FieldValue one = FieldValue::one(field);
  std::vector<FieldValue> mu(d * d * d, zero);
  // E_ab E_cd = [b = c] E_ad.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t dd = 0; dd < n; ++dd) {
        const std::size_t left = a * n + b, right = b * n + dd, out = a * n + dd;
        mu[(left * d + right) * d + out] = one;
      }
    }
  }
  std::vector<FieldValue> unit(d, zero);
  std::vector<FieldValue> counit(d, zero);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    unit[a * n + a] = one;
    counit[a * n + a] = one;
    for (std::size_t b = 0; b < n; ++b) {
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  return derive_comultiplication(field, d, std::move(mu), std::move(unit), std::move(counit),
                                 std::move(labels));
}

std::vector<std::pair<std::string, FrobeniusAlgebraData>> registry() {
  std::vector<std::pair<std::string, FrobeniusAlgebraData>> out;
  const FieldSpec f7 = FieldSpec::prime(7);
  for (std::size_t n = 2; n <= 4; ++n) {
    out.emplace_back("truncated_poly_" + std::to_string(n), truncated_poly(n));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    out.emplace_back("truncated_poly_" + std::to_string(n) + "_f7", truncated_poly(n, f7));
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    out.emplace_back("group_algebra_c" + std::to_string(n), group_algebra(cyclic(n)));
  }
  out.emplace_back("group_algebra_c2xc2", group_algebra(product(cyclic(2), cyclic(2))));
  out.emplace_back("group_center_s3", group_center(builtin("S3")));
  out.emplace_back("group_center_d4", group_center(builtin("D4")));
  out.emplace_back("group_center_q8", group_center(builtin("Q8")));
  return out;
}

}  // namespace cob2
