#pragma once

// Text and JSON formats for polynomials, matrices and point sets.
//
// Polynomial text: terms joined by '+' / '-', each an optional coefficient
// ("3", "-1/2") followed by factors "x<k>" or "x<k>^<e>", optionally separated
// by '*'. Whitespace is ignored; '#' starts a comment running to end of line.

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waring/qmatrix.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

/// Without nvars the variable count is the largest index used (at least 1).
/// With nvars, an index beyond it is a ParseError ("inconsistent variable count").
SparsePoly parse_poly(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);
/// Canonical form in grlex order, e.g. "2 x1^3 - 6 x1 x2^2"; "0" for zero.
std::string serialize_poly(const SparsePoly& p);

nlohmann::json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);

/// Accepts either the text grammar or a JSON object with "n" and "terms".
SparsePoly parse_poly_any(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

/// Space-separated coordinates, e.g. "1 -2 1/3".
std::string format_point(const Vector& v);
/// One row per line.
std::string format_matrix(const QMatrix& m);
/// Linear form "x1 - 2 x3"; "0" for the zero vector.
std::string format_linear_form(const Vector& coeffs);

}  // namespace waring
