#pragma once

// JSON readers and writers for fields, point sets, curves, ideals and
// certificates. All parse failures raise ParseError.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genpos/conductor.hpp"
#include "genpos/pointset.hpp"
#include "genpos/tangent_cone.hpp"

namespace genpos {

inline constexpr const char* kToolVersion = "0.1.0";

/// "Q", "GF(p)", "p", or {"p": p}.
Field parse_field(const nlohmann::json& j);
Field parse_field_text(const std::string& text);
nlohmann::json field_to_json(const Field& field);

/// Coordinates may be JSON integers or scalar text.
Scalar parse_scalar(const nlohmann::json& j, const Field& field);

/// { "r": int, "field": ..., "points": [[coords]] }. `field` overrides the
/// document's field when given.
PointSet parse_point_set(const nlohmann::json& j, const std::optional<Field>& field = std::nullopt);
nlohmann::json point_set_to_json(const PointSet& points);

/// { "r": int, "field": ..., "branches": [[poly in t]], "parametrization": [poly in t] }
BranchCurve parse_curve(const nlohmann::json& j, const std::optional<Field>& field = std::nullopt);
nlohmann::json curve_to_json(const BranchCurve& curve);

/// { "vars": int, "field": ..., "gens": [poly strings] }; field defaults to Q.
Ideal parse_ideal(const nlohmann::json& j, const std::optional<Field>& field = std::nullopt);

nlohmann::json polynomials_to_json(const std::vector<Polynomial>& polys);
nlohmann::json genericity_to_json(const GenericityCertificate& cert);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_json(const nlohmann::json& j);

}  // namespace genpos
