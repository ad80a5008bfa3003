#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hvbox/hvbox.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using Array = py::array_t<double, py::array::c_style>;

// numpy does the rectangularity check; ragged input raises there.
Array as_float_array(const py::object& obj) {
  return py::module_::import("numpy").attr("ascontiguousarray")(obj, "dtype"_a = "float64").cast<Array>();
}

std::vector<hvbox::Point> rows_of(const py::object& obj, const char* what) {
  const Array a = as_float_array(obj);
  if (a.size() == 0) return {};
  if (a.ndim() != 2) throw std::invalid_argument(std::string(what) + " must be a 2-D array");
  const auto view = a.unchecked<2>();
  std::vector<hvbox::Point> rows;
  rows.reserve(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    std::vector<double> c(static_cast<std::size_t>(view.shape(1)));
    for (py::ssize_t m = 0; m < view.shape(1); ++m) c[static_cast<std::size_t>(m)] = view(i, m);
    rows.emplace_back(std::move(c));
  }
  return rows;
}

std::optional<hvbox::Point> point_of(const std::optional<py::object>& obj) {
  if (!obj || obj->is_none()) return std::nullopt;
  const Array a = as_float_array(*obj);
  if (a.ndim() != 1) throw std::invalid_argument("point must be a 1-D array");
  return hvbox::Point(std::vector<double>(a.data(), a.data() + a.size()));
}

Array to_array(const std::vector<double>& values) {
  return Array(static_cast<py::ssize_t>(values.size()), values.data());
}

hvbox::Decomposition bound_decompose(const py::object& points, double alpha,
                                     const std::optional<std::string>& mode,
                                     const std::optional<py::object>& reference,
                                     const std::optional<py::object>& ideal) {
  hvbox::DecomposeConfig config;
  config.alpha = alpha;
  config.reference = point_of(reference);
  config.ideal = point_of(ideal);
  if (mode && *mode != hvbox::to_string(config.mode())) {
    throw std::invalid_argument("mode '" + *mode + "' needs " +
                                (config.reference ? "no reference" : "a reference"));
  }
  // Same filtering as the command line.
  return hvbox::decompose(hvbox::pareto_filter(rows_of(points, "points")), config);
}

Array bound_hvi_batch(const hvbox::Decomposition& decomp, const py::object& candidates) {
  const std::vector<hvbox::Point> ys = rows_of(candidates, "candidates");
  std::vector<double> values;
  {
    py::gil_scoped_release release;
    values = hvbox::hvi_batch(decomp, ys);
  }
  return to_array(values);
}

py::array_t<double> boxes_of(const hvbox::Decomposition& d) {
  const auto k = static_cast<py::ssize_t>(d.boxes().size());
  const auto dim = static_cast<py::ssize_t>(d.dim());
  py::array_t<double> out({k, py::ssize_t{2}, dim});
  auto view = out.mutable_unchecked<3>();
  for (py::ssize_t i = 0; i < k; ++i) {
    const auto& box = d.boxes()[static_cast<std::size_t>(i)];
    for (py::ssize_t m = 0; m < dim; ++m) {
      view(i, 0, m) = box.lower()[static_cast<std::size_t>(m)];
      view(i, 1, m) = box.upper()[static_cast<std::size_t>(m)];
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(hvbox, m) {
  m.doc() = "Approximate box decomposition of the non-dominated space and hypervolume improvement";

  py::class_<hvbox::Decomposition>(m, "Decomposition")
      .def_property_readonly("boxes", &boxes_of, "array of shape (K, 2, M): lower and upper corners")
      .def_property_readonly("h_all", &hvbox::Decomposition::h_all)
      .def_property_readonly("h_tol", &hvbox::Decomposition::h_tol)
      .def_property_readonly("alpha", [](const hvbox::Decomposition& d) { return d.config().alpha; })
      .def_property_readonly("mode", [](const hvbox::Decomposition& d) {
        return std::string(hvbox::to_string(d.config().mode()));
      })
      .def_property_readonly("dim", &hvbox::Decomposition::dim)
      .def_property_readonly("diagnostics", [](const hvbox::Decomposition& d) {
        const auto& g = d.diagnostics();
        py::dict out;
        out["iterations"] = g.iterations;
        out["accepted"] = g.accepted;
        out["pruned_dominated"] = g.pruned_dominated;
        out["pruned_resolution"] = g.pruned_resolution;
        out["pruned_volume"] = g.pruned_volume;
        out["splits"] = g.splits;
        out["max_depth"] = g.max_depth;
        return out;
      })
      .def("__len__", [](const hvbox::Decomposition& d) { return d.boxes().size(); })
      .def("to_json", &hvbox::serialize_decomposition);

  m.def("decompose", &bound_decompose, "points"_a, "alpha"_a = 1e-3, "mode"_a = py::none(),
        "reference"_a = py::none(), "ideal"_a = py::none(),
        "Decompose the space not dominated by the rows of an N x M array.\n\n"
        "Dominated and duplicate rows are dropped first.");
  m.def("hvi_batch", &bound_hvi_batch, "decomposition"_a, "candidates"_a,
        "Hypervolume improvement of each row of a Q x M array.");
  m.def("nondominated_volume", &hvbox::nondominated_volume, "decomposition"_a);
  m.def("from_json", &hvbox::parse_decomposition, "text"_a);
  m.def(
      "oracle_hv",
      [](const py::object& points, const py::object& reference) {
        return hvbox::hv_inclusion_exclusion(rows_of(points, "points"), *point_of(reference));
      },
      "points"_a, "reference"_a, "Brute-force dominated hypervolume (at most 20 points).");
}
