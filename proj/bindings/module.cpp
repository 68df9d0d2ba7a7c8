#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "npscan/curve_zeta.hpp"
#include "npscan/decompose.hpp"
#include "npscan/dickson.hpp"
#include "npscan/errors.hpp"
#include "npscan/lfunction.hpp"
#include "npscan/parse.hpp"
#include "npscan/scan.hpp"

namespace py = pybind11;
using namespace npscan;

namespace {

// Rationals cross the boundary as "num/den" strings; the Python layer turns them into Fractions.
using Coeffs = std::vector<std::string>;
using Vertex = std::pair<std::string, std::string>;

QPoly to_qpoly(const Coeffs& c) {
  std::vector<Rational> v;
  for (const auto& s : c) v.push_back(parse_rational(s));
  return QPoly(v);
}

Coeffs from_qpoly(const QPoly& f) {
  Coeffs out;
  for (const auto& c : f.coeffs()) out.push_back(rational_string(c));
  return out;
}

std::vector<Vertex> vertices(const ConvexPolygon& poly) {
  std::vector<Vertex> out;
  for (const auto& v : poly.vertices()) out.emplace_back(rational_string(v.x), rational_string(v.y));
  return out;
}

ConvexPolygon polygon(const std::vector<Vertex>& vs) {
  std::vector<Point> pts;
  for (const auto& [x, y] : vs) pts.push_back({parse_rational(x), parse_rational(y)});
  return ConvexPolygon(pts);
}

FieldPolynomial residue_poly(const std::vector<std::int64_t>& coeffs, std::uint64_t p, unsigned degree) {
  return FieldPolynomial::from_residues(FiniteField::build(p, degree), coeffs);
}

std::vector<std::string> big_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Newton polygons of exponential sums across primes";

  static PyObject* error_type = PyErr_NewException("npscan._core.NpscanError", PyExc_RuntimeError, nullptr);
  m.attr("NpscanError") = py::reinterpret_borrow<py::object>(error_type);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      // args are (kind, message)
      PyErr_SetObject(error_type, py::make_tuple(std::string(to_string(e.kind())), e.what()).ptr());
    }
  });

  m.def("parse_polynomial", [](const std::string& text) { return from_qpoly(parse_polynomial(text)); });

  m.def(
      "np_at_prime",
      [](const Coeffs& f, std::uint64_t p, std::uint64_t c, std::uint64_t budget) {
        py::gil_scoped_release release;
        return vertices(np_at_prime(to_qpoly(f), p, c, EnumOptions{budget, 1}));
      },
      py::arg("coeffs"), py::arg("p"), py::arg("c") = 1, py::arg("budget") = 100'000'000);

  m.def("hodge_polygon", [](unsigned d) { return vertices(hodge_polygon(d)); });
  m.def("vertical_gap", [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return rational_string(vertical_gap(polygon(a), polygon(b)));
  });
  m.def("lies_above", [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return lies_above(polygon(a), polygon(b));
  });
  m.def("lower_hull", [](const std::vector<Vertex>& pts) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back({parse_rational(x), parse_rational(y)});
    return vertices(lower_hull(v));
  });

  m.def(
      "l_polynomial",
      [](const std::vector<std::int64_t>& coeffs, std::uint64_t p, std::uint64_t c, unsigned degree) {
        py::gil_scoped_release release;
        const auto L = l_polynomial(residue_poly(coeffs, p, degree), Character(p, c));
        std::vector<std::vector<std::string>> out;
        for (const auto& a : L.coeffs()) out.push_back(big_strings(a.coeffs()));
        return out;
      },
      py::arg("coeffs"), py::arg("p"), py::arg("c") = 1, py::arg("degree") = 1);

  m.def(
      "p1_polynomial",
      [](const std::vector<std::int64_t>& coeffs, std::uint64_t p, unsigned degree) {
        py::gil_scoped_release release;
        return big_strings(p1_polynomial(residue_poly(coeffs, p, degree)).coeffs());
      },
      py::arg("coeffs"), py::arg("p"), py::arg("degree") = 1);

  m.def("dickson", [](unsigned n, const std::string& a) { return from_qpoly(dickson(n, parse_rational(a))); });
  m.def("recognize_dickson", [](const Coeffs& u) -> py::object {
    const auto form = recognize_dickson(to_qpoly(u));
    if (!form) return py::none();
    py::dict d;
    d["n"] = form->n;
    d["a"] = rational_string(form->a);
    d["shift"] = rational_string(form->shift);
    d["offset"] = rational_string(form->offset);
    return d;
  });
  m.def("is_admissible", [](std::uint64_t p, const std::string& a, unsigned n) {
    return is_admissible(p, parse_rational(a), n).admissible();
  });
  m.def("gpp_over_q", [](unsigned n, const std::string& a) { return gpp_over_Q(n, parse_rational(a)).criterion; });
  m.def("decompose", [](const Coeffs& f) {
    std::vector<std::pair<std::string, Coeffs>> out;
    for (const auto& c : decompose(to_qpoly(f)).factors) {
      const char* kind = c.kind == FactorKind::Linear ? "linear" : c.kind == FactorKind::Dickson ? "dickson" : "other";
      out.emplace_back(kind, from_qpoly(c.poly));
    }
    return out;
  });

  m.def(
      "scan",
      [](const Coeffs& f, std::uint64_t p_max, unsigned jobs, std::uint64_t c, std::uint64_t budget) {
        ScanOptions opts;
        opts.p_max = p_max;
        opts.jobs = jobs;
        opts.c = c;
        opts.enumeration.budget = budget;
        ScanResult res;
        {
          py::gil_scoped_release release;
          res = run_scan(to_qpoly(f), opts);
        }
        std::vector<std::string> rows;
        for (const auto& r : res.records) rows.push_back(record_to_json(r, false));
        return std::make_tuple(rows, summary_to_json(res.summary), res.violations);
      },
      py::arg("coeffs"), py::arg("p_max") = 100, py::arg("jobs") = 1, py::arg("c") = 1,
      py::arg("budget") = 100'000'000);

  m.def("crosscheck", [](const Coeffs& f, std::uint64_t p) {
    CrosscheckReport report;
    {
      py::gil_scoped_release release;
      report = crosscheck(to_qpoly(f), p);
    }
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& c : report.checks) {
      const char* s = c.status == CheckStatus::Pass ? "pass" : c.status == CheckStatus::Fail ? "fail" : "skipped";
      out.emplace_back(c.name, s, c.detail);
    }
    return out;
  });
}
