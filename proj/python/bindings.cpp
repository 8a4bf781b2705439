#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "puregaps/charx.hpp"
#include "puregaps/core_types.hpp"
#include "puregaps/counting.hpp"
#include "puregaps/rr_oracle.hpp"

namespace py = pybind11;
using namespace puregaps;

namespace {

// Places are given as positive ints (finite P_i) or the string "inf".
std::vector<PlaceId> to_places(const py::sequence& seq) {
  std::vector<PlaceId> out;
  for (const auto& item : seq) {
    if (py::isinstance<py::str>(item)) {
      const auto s = item.cast<std::string>();
      if (s != "inf") throw py::value_error("place must be a positive int or 'inf'");
      out.push_back(PlaceId::infinity());
    } else {
      out.push_back(PlaceId::finite(item.cast<Int>()));
    }
  }
  return out;
}

py::list tuples_of(const PureGapSet& set) {
  py::list out;
  for (const auto& t : set.tuples) out.append(py::tuple(py::cast(t.coords)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weierstrass gaps and pure gaps on y^m = x^q + x";

  static py::exception<Error> exc(m, "PureGapsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(exc.ptr(), e.what());
    }
  });

  py::class_<CurveParams>(m, "CurveParams")
      .def_readonly("q", &CurveParams::q)
      .def_readonly("m", &CurveParams::m)
      .def_readonly("N", &CurveParams::N)
      .def_readonly("genus", &CurveParams::genus)
      .def("__eq__", [](const CurveParams& a, const CurveParams& b) { return a == b; })
      .def("__repr__", [](const CurveParams& c) {
        return "CurveParams(q=" + std::to_string(c.q) + ", m=" + std::to_string(c.m) +
               ", N=" + std::to_string(c.N) + ", genus=" + std::to_string(c.genus) + ")";
      });

  py::class_<KummerShape>(m, "KummerShape")
      .def(py::init([](Int m_, Int r, Int a, Int b) { return KummerShape{m_, r, a, b}; }),
           py::arg("m"), py::arg("r"), py::arg("a"), py::arg("b"))
      .def_readonly("m", &KummerShape::m)
      .def_readonly("r", &KummerShape::r)
      .def_readonly("a", &KummerShape::a)
      .def_readonly("b", &KummerShape::b);

  py::class_<CountTerm>(m, "CountTerm")
      .def_readonly("A", &CountTerm::A)
      .def_readonly("weight", &CountTerm::weight)
      .def_readonly("s_value", &CountTerm::s_value)
      .def_readonly("product", &CountTerm::product);

  py::class_<CountBreakdown>(m, "CountBreakdown")
      .def_readonly("terms", &CountBreakdown::terms)
      .def_readonly("total", &CountBreakdown::total);

  py::class_<SnAContext>(m, "SnAContext")
      .def(py::init<Int, Int, Int>(), py::arg("q"), py::arg("N"), py::arg("A"))
      .def_property_readonly("t", &SnAContext::t)
      .def_property_readonly("beta", &SnAContext::beta)
      .def("lambda_", &SnAContext::lambda, py::arg("k"));

  m.def("make_curve", [](Int q, Int m_, bool unchecked) { return make_curve(q, m_, {unchecked}); },
        py::arg("q"), py::arg("m"), py::arg("unchecked") = false);
  m.def("hermitian", [](Int q, bool unchecked) { return hermitian(q, {unchecked}); },
        py::arg("q"), py::arg("unchecked") = false);
  m.def("bezout_for", &bezout_for, py::arg("m"), py::arg("r"));

  m.def("is_pure_gap_kummer",
        [](const KummerShape& s, const std::vector<Int>& t) { return is_pure_gap_kummer(s, {t, false}); },
        py::arg("shape"), py::arg("t"));
  m.def("is_pure_gap_kummer_inf",
        [](const KummerShape& s, const std::vector<Int>& t) { return is_pure_gap_kummer_inf(s, {t, true}); },
        py::arg("shape"), py::arg("t"), "The last coordinate belongs to P_inf.");
  m.def("is_pure_gap_quotient",
        [](const CurveParams& c, const std::vector<Int>& t) { return is_pure_gap_quotient(c, {t, false}); },
        py::arg("curve"), py::arg("t"));
  m.def("decompose", [](Int t, Int m_) {
    const auto d = decompose(t, m_);
    return py::make_tuple(d.i, d.j);
  }, py::arg("t"), py::arg("m"));
  m.def("enumerate_pure_gaps",
        [](const CurveParams& c, Int n, bool inf) {
          PureGapSet set;
          {
            py::gil_scoped_release release;
            set = enumerate_pure_gaps(c, n, inf);
          }
          return tuples_of(set);
        },
        py::arg("curve"), py::arg("n"), py::arg("include_infinity") = false);
  m.def("count_in_box",
        [](const CurveParams& c, Int t1, Int t2) {
          const auto b = count_in_box(c, t1, t2);
          return py::dict(py::arg("pure") = b.pure, py::arg("semigroup") = b.semigroup,
                          py::arg("total") = b.total, py::arg("gaps") = b.gaps());
        },
        py::arg("curve"), py::arg("t1_max"), py::arg("t2_max"));

  m.def("binom_solutions", &binom_solutions, py::arg("A"), py::arg("n"));
  m.def("s_n_hermitian", &s_n_hermitian, py::arg("n"), py::arg("t"));
  m.def("count_pure_gaps_hermitian", &count_pure_gaps_hermitian, py::arg("q"), py::arg("n"));
  m.def("hermitian_pair_closed", &hermitian_pair_closed, py::arg("q"));
  m.def("s_n_A", &s_n_A, py::arg("n"), py::arg("ctx"));
  m.def("count_pure_gaps_quotient", &count_pure_gaps_quotient, py::arg("curve"), py::arg("n"));
  m.def("pair_closed_pure", &pair_closed_pure, py::arg("curve"));
  m.def("pair_closed_gaps", &pair_closed_gaps, py::arg("curve"));
  m.def("gap_set_single", &gap_set_single, py::arg("curve"));
  m.def("gap_set_infinity", &gap_set_infinity, py::arg("curve"));
  m.def("sum_gaps_single", &sum_gaps_single, py::arg("curve"));
  m.def("gaps_pair_via_homma", &gaps_pair_via_homma, py::arg("sum1"), py::arg("sum2"),
        py::arg("pure_count"));

  m.def("ell",
        [](const CurveParams& c, const std::map<Int, Int>& finite, Int infinity) {
          Divisor d;
          for (const auto& [idx, coeff] : finite) d.add(PlaceId::finite(idx), coeff);
          d.infinity_coeff = infinity;
          return ell(c, d);
        },
        py::arg("curve"), py::arg("finite") = std::map<Int, Int>{}, py::arg("infinity") = 0);
  m.def("is_pure_gap_oracle",
        [](const CurveParams& c, const py::sequence& places, const std::vector<Int>& t) {
          const auto ps = to_places(places);
          const bool inf = !ps.empty() && ps.back().is_infinity();
          return is_pure_gap_oracle(c, ps, {t, inf});
        },
        py::arg("curve"), py::arg("places"), py::arg("t"));
  m.def("is_semigroup_member",
        [](const CurveParams& c, const py::sequence& places, const std::vector<Int>& s) {
          return is_semigroup_member(c, to_places(places), s);
        },
        py::arg("curve"), py::arg("places"), py::arg("s"));
  m.def("brute_force_pure_gaps",
        [](const CurveParams& c, const py::sequence& places) {
          const auto ps = to_places(places);
          PureGapSet set;
          {
            py::gil_scoped_release release;
            set = brute_force_pure_gaps(c, ps);
          }
          return tuples_of(set);
        },
        py::arg("curve"), py::arg("places"));
  m.def("gap_set_oracle",
        [](const CurveParams& c, const py::object& place) {
          const auto ps = to_places(py::make_tuple(place));
          return gap_set_oracle(c, ps.front());
        },
        py::arg("curve"), py::arg("place"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
