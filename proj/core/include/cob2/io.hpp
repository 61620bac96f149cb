#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cob2/frobenius.hpp"
#include "cob2/matrix.hpp"

namespace cob2 {

/// Reads an algebra document:
///
///   {"field": "rational" | {"prime": p}, "dim": d,
///    "mu": [[[v..]..]..], "unit": [v..], "delta": [[[v..]..]..],
///    "counit": [v..], "labels": [s..]}
///
/// Values are JSON integers or strings "n" / "a/b". "delta" and "labels"
/// are optional; a missing delta is derived from mu, unit and counit.
/// `field_override` replaces the declared field, mapping every value into
/// it. Throws FormatError, FieldError, DegeneratePairing or
/// DerivedStructureInvalid.
FrobeniusAlgebraData algebra_from_json(std::string_view text,
                                       std::optional<FieldSpec> field_override = std::nullopt);

/// Inverse of algebra_from_json; always writes delta. Values are strings.
std::string algebra_to_json(const FrobeniusAlgebraData& a);

/// {"rows": r, "cols": c, "entries": [["a/b", ...], ...]}
std::string matrix_to_json(const ExactMatrix& m);
/// One line per row, entries separated by commas.
std::string matrix_to_csv(const ExactMatrix& m);

}  // namespace cob2
