// JSON documents cross the boundary as strings; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "genpos/cli.hpp"
#include "genpos/conductor.hpp"
#include "genpos/errors.hpp"
#include "genpos/io.hpp"
#include "genpos/pointset.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

std::optional<genpos::Field> field_arg(const std::optional<std::string>& field) {
  if (!field) return std::nullopt;
  return genpos::parse_field_text(*field);
}

json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw genpos::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generic position, tangent cones and conductors";
  m.attr("__version__") = genpos::kToolVersion;

  static py::exception<genpos::ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const genpos::ResourceError& e) {
      py::set_error(resource_error, (e.budget() + ": " + e.what()).c_str());
    } catch (const genpos::Error& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const json::exception& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("nu", [](std::uint64_t e, unsigned r) { return genpos::nu(e, r); }, py::arg("e"), py::arg("r"));

  m.def(
      "hilbert_function",
      [](const std::string& points, std::uint32_t max_degree, std::optional<std::string> field) {
        const auto x = genpos::parse_point_set(parse_doc(points), field_arg(field));
        return genpos::hilbert_profile(x, max_degree).values;
      },
      py::arg("points"), py::arg("max_degree"), py::arg("field") = py::none());

  m.def(
      "points_check",
      [](const std::string& points, std::optional<std::size_t> t, std::uint64_t subset_budget, unsigned jobs,
         std::optional<std::string> field) {
        const auto x = genpos::parse_point_set(parse_doc(points), field_arg(field));
        py::gil_scoped_release release;
        const auto cert = t ? genpos::is_generic_t_position(x, *t, subset_budget, jobs) : genpos::is_generic_position(x);
        return genpos::genericity_to_json(cert).dump();
      },
      py::arg("points"), py::arg("t") = py::none(), py::arg("subset_budget") = 20000, py::arg("jobs") = 1,
      py::arg("field") = py::none());

  m.def(
      "conductor",
      [](const std::string& model, std::uint32_t box, std::uint64_t subset_budget, std::optional<std::string> field) {
        const json doc = parse_doc(model);
        genpos::ModelOptions options;
        options.field = field_arg(field);
        options.box = box;
        options.subset_budget = subset_budget;
        py::gil_scoped_release release;
        return genpos::conductor_for_model(doc, options).to_json().dump();
      },
      py::arg("model"), py::arg("box") = 0, py::arg("subset_budget") = 20000, py::arg("field") = py::none());

  m.def(
      "tangent_cone",
      [](const std::string& input, std::size_t e_guess, std::uint32_t degree_bound, std::optional<std::string> field) {
        const json doc = parse_doc(input);
        const auto f = field_arg(field);
        py::gil_scoped_release release;
        return genpos::tangent_cone_report(doc, e_guess, degree_bound, f).dump();
      },
      py::arg("input"), py::arg("e_guess") = 1, py::arg("degree_bound") = 0, py::arg("field") = py::none());

  m.def(
      "semigroup",
      [](const std::vector<std::uint64_t>& gens) {
        const auto s = genpos::semigroup_conductor(gens);
        py::dict d;
        d["generators"] = s.generators;
        d["minimal_generators"] = s.minimal_generators;
        d["gaps"] = s.gaps;
        d["frobenius"] = s.frobenius;
        d["conductor"] = s.conductor;
        d["multiplicity"] = s.multiplicity;
        d["embedding_dimension"] = s.embedding_dimension;
        return d;
      },
      py::arg("generators"));

  m.def(
      "random_points",
      [](std::size_t e, unsigned r, std::uint64_t seed, std::optional<std::string> field) {
        const genpos::Field f = field ? genpos::parse_field_text(*field) : genpos::Field::prime(genpos::kBigPrime);
        std::mt19937_64 rng(seed);
        return genpos::point_set_to_json(genpos::random_point_set(e, r, f, rng)).dump();
      },
      py::arg("e"), py::arg("r"), py::arg("seed") = 1, py::arg("field") = py::none());

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "genpos");
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = genpos::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
