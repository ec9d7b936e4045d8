#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sccore/abacus.hpp"
#include "sccore/analytics.hpp"
#include "sccore/formulas.hpp"
#include "sccore/growth.hpp"
#include "sccore/partition.hpp"
#include "sccore/series.hpp"

namespace py = pybind11;
using namespace sccore;

namespace {

py::object to_py(const BigInt& v) {
  std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const TruncatedSeries& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(to_py(c));
  return out;
}

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

// Reports cross as JSON text; the package decodes them into dicts.
std::string report_json(const ScanReport& r, bool timing) { return to_json(r, timing).dump(); }

Family family_arg(const std::string& name) {
  auto f = family_from_string(name);
  if (!f) throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "'");
  return *f;
}

}  // namespace

PYBIND11_MODULE(_sccore, m) {
  m.doc() = "Self-conjugate t-core partition counts";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());  // message starts with the error code name
    }
  });

  m.def("coefficients", [](const std::string& family, int t, int order) {
    Family f = family_arg(family);
    return to_py(default_store().get(f, family_has_t(f) ? t : 0, order)->truncated(order));
  }, py::arg("family"), py::arg("t") = 0, py::arg("order"));

  m.def("sc_t", [](int t, int n) { return to_py(sc_t_value(t, n)); }, py::arg("t"), py::arg("n"));
  m.def("c_t", [](int t, int n) { return to_py(c_t_value(t, n)); }, py::arg("t"), py::arg("n"));

  m.def("sc_large", [](int t, int n) {
    auto r = sc_large(t, n);
    return py::make_tuple(to_py(r.value), std::string(to_string(r.formula)));
  }, py::arg("t"), py::arg("n"));

  m.def("sc_recursive", [](int t, int n) {
    return to_py(t % 2 == 0 ? sc_even_recursive(t / 2, n) : sc_odd_recursive(t / 2, n));
  }, py::arg("t"), py::arg("n"));

  m.def("zero_set", &zero_set, py::arg("t"), py::arg("n_max"));

  m.def("is_t_core", [](std::vector<int> parts, int t) { return is_t_core(Partition(std::move(parts)), t); },
        py::arg("parts"), py::arg("t"));
  m.def("t_core", [](std::vector<int> parts, int t) { return parts_of(t_core(Partition(std::move(parts)), t)); },
        py::arg("parts"), py::arg("t"));
  m.def("t_quotient", [](std::vector<int> parts, int t) {
    std::vector<std::vector<int>> out;
    const Quotient q = t_quotient(Partition(std::move(parts)), t);
    for (const auto& c : q.components()) out.push_back(parts_of(c));
    return out;
  }, py::arg("parts"), py::arg("t"));
  m.def("assemble", [](std::vector<int> core, const std::vector<std::vector<int>>& quotient, int t) {
    std::vector<Partition> comps;
    for (const auto& q : quotient) comps.emplace_back(q);
    return parts_of(assemble(Partition(std::move(core)), Quotient(std::move(comps)), t));
  }, py::arg("core"), py::arg("quotient"), py::arg("t"));
  m.def("conjugate", [](std::vector<int> parts) { return parts_of(conjugate(Partition(std::move(parts)))); },
        py::arg("parts"));

  m.def("characterization_check", [](int t, int n_max, bool timing) {
    return report_json(characterization_check(t, n_max), timing);
  }, py::arg("t"), py::arg("n_max"), py::arg("timing") = true);
  m.def("monotonicity_scan", [](const std::string& family, int n_max, int workers, bool timing) {
    auto f = monotone_family_from_string(family);
    if (!f) throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
    return report_json(monotonicity_scan(*f, n_max, workers), timing);
  }, py::arg("family"), py::arg("n_max"), py::arg("workers") = 1, py::arg("timing") = true);
  m.def("verify_growth", [](int n_lo, int n_hi, int workers, bool timing) {
    return report_json(verify_growth(n_lo, n_hi, workers), timing);
  }, py::arg("n_lo"), py::arg("n_hi"), py::arg("workers") = 1, py::arg("timing") = true);
  m.def("cross_validate", [](int t_max, int n_max, bool timing) {
    return report_json(cross_validate(t_max, n_max), timing);
  }, py::arg("t_max"), py::arg("n_max"), py::arg("timing") = true);
}
