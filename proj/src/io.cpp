#include "genpos/io.hpp"

#include <fstream>
#include <sstream>

#include "genpos/errors.hpp"

namespace genpos {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field \"") + what + "\" has the wrong type");
  }
}

Field document_field(const json& j, const std::optional<Field>& override_field) {
  if (override_field) return *override_field;
  return j.contains("field") ? parse_field(j.at("field")) : Field::rationals();
}

std::vector<Polynomial> parse_t_polys(const json& list, const Field& field, const char* what) {
  if (!list.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array");
  std::vector<Polynomial> out;
  for (const auto& s : list) out.push_back(Polynomial::parse(get_as<std::string>(s, what), 1, field, {"t"}));
  return out;
}

json t_polys_to_json(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string({"t"}));
  return out;
}

}  // namespace

Field parse_field_text(const std::string& text) {
  if (text == "Q" || text == "QQ") return Field::rationals();
  std::string digits = text;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("unknown field \"" + text + "\"; expected Q, GF(p) or p");
  }
  try {
    return Field::prime(std::stoull(digits));
  } catch (const std::out_of_range&) {
    throw ParseError("field modulus out of range: " + text);
  }
}

Field parse_field(const json& j) {
  if (j.is_string()) return parse_field_text(j.get<std::string>());
  if (j.is_number_unsigned()) return Field::prime(j.get<std::uint64_t>());
  if (j.is_object() && j.contains("p")) {
    const Field f = Field::prime(get_as<std::uint64_t>(j.at("p"), "p"));
    if (j.contains("roots_of_unity")) {
      FieldSpec{f, get_as<std::vector<unsigned>>(j.at("roots_of_unity"), "roots_of_unity")}.validate();
    }
    return f;
  }
  throw ParseError("field must be \"Q\", \"GF(p)\" or {\"p\": p}");
}

json field_to_json(const Field& field) {
  if (field.is_rational()) return "Q";
  return json{{"p", field.modulus()}};
}

Scalar parse_scalar(const json& j, const Field& field) {
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw ParseError("coordinate must be an integer or scalar text");
}

PointSet parse_point_set(const json& j, const std::optional<Field>& field) {
  const Field f = document_field(j, field);
  const auto r = get_as<unsigned>(require(j, "r"), "r");
  const json& pts = require(j, "points");
  if (!pts.is_array()) throw ParseError("\"points\" must be an array");
  std::vector<std::vector<Scalar>> coords;
  for (const auto& p : pts) {
    if (!p.is_array()) throw ParseError("each point must be an array of coordinates");
    std::vector<Scalar> row;
    for (const auto& c : p) row.push_back(parse_scalar(c, f));
    coords.push_back(std::move(row));
  }
  return PointSet(r, f, std::move(coords));
}

json point_set_to_json(const PointSet& points) {
  json pts = json::array();
  for (const auto& p : points.points()) {
    json row = json::array();
    for (const auto& c : p) row.push_back(c.coefficient_text());
    pts.push_back(row);
  }
  return json{{"r", points.r()}, {"field", field_to_json(points.field())}, {"points", pts}};
}

BranchCurve parse_curve(const json& j, const std::optional<Field>& field) {
  const Field f = document_field(j, field);
  const auto r = get_as<unsigned>(require(j, "r"), "r");
  std::vector<std::vector<Polynomial>> branches;
  const json& list = require(j, "branches");
  if (!list.is_array()) throw ParseError("\"branches\" must be an array");
  for (const auto& b : list) branches.push_back(parse_t_polys(b, f, "branches"));
  std::optional<std::vector<Polynomial>> param;
  if (j.contains("parametrization")) param = parse_t_polys(j.at("parametrization"), f, "parametrization");
  return BranchCurve(r, f, std::move(branches), std::move(param));
}

json curve_to_json(const BranchCurve& curve) {
  json branches = json::array();
  for (const auto& b : curve.branches()) branches.push_back(t_polys_to_json(b.components));
  json out{{"r", curve.r()}, {"field", field_to_json(curve.field())}, {"branches", branches}};
  if (curve.parametrization()) out["parametrization"] = t_polys_to_json(*curve.parametrization());
  return out;
}

Ideal parse_ideal(const json& j, const std::optional<Field>& field) {
  const Field f = document_field(j, field);
  const auto n = get_as<std::size_t>(require(j, "vars"), "vars");
  if (n == 0) throw ParseError("\"vars\" must be positive");
  std::vector<Polynomial> gens;
  const json& list = require(j, "gens");
  if (!list.is_array()) throw ParseError("\"gens\" must be an array");
  for (const auto& g : list) gens.push_back(Polynomial::parse(get_as<std::string>(g, "gens"), n, f));
  return Ideal(n, f, std::move(gens));
}

json polynomials_to_json(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

json genericity_to_json(const GenericityCertificate& cert) {
  json out{{"generic", cert.generic}, {"t", cert.t}, {"hilbert", cert.hilbert}};
  if (cert.failing_degree) out["failing_degree"] = *cert.failing_degree;
  if (cert.witness) out["witness"] = cert.witness->to_string();
  if (!cert.generic) out["failing_subset"] = cert.failing_subset;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string canonical_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace genpos
