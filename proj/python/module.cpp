#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jung/decompose.hpp"
#include "jung/documents.hpp"
#include "jung/newton.hpp"
#include "jung/parse.hpp"
#include "jung/witness.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace jung;

namespace {

struct RejectedError : std::runtime_error {
  explicit RejectedError(RejectReason r) : std::runtime_error(std::string(reason_name(r))) {}
};

// int, str ("-3/2") or fractions.Fraction
Rational to_rational(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

BiPoly to_poly(const py::handle& value) {
  if (py::isinstance<BiPoly>(value)) return value.cast<BiPoly>();
  if (py::isinstance<py::str>(value)) return parse_poly(value.cast<std::string>());
  return BiPoly::constant(to_rational(value));
}

py::tuple point(const Monomial& m) { return py::make_tuple(m.i, m.j); }
py::tuple point(const Direction& d) { return py::make_tuple(d.rho(), d.sigma()); }

Direction to_direction(const py::tuple& d) {
  return Direction(d[0].cast<std::int64_t>(), d[1].cast<std::int64_t>());
}

template <class T>
T unwrap(std::variant<T, Reject> result) {
  if (const auto* rej = std::get_if<Reject>(&result)) throw RejectedError(rej->reason);
  return std::move(std::get<T>(result));
}

std::string move_repr(const TameMove& m) {
  if (const auto* e = m.get_if<ElemY>()) return "ElemY(" + to_string(e->p) + ")";
  if (const auto* e = m.get_if<ElemX>()) return "ElemX(" + to_string(e->q) + ")";
  const auto& l = *m.get_if<Linear>();
  return "Linear(" + to_string(l.a) + ", " + to_string(l.b) + ", " + to_string(l.c) + ", " +
         to_string(l.d) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact decomposition of automorphisms of Q[x,y] into elementary and linear moves";

  py::register_exception<RejectedError>(m, "RejectError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<BiPoly>(m, "Poly")
      .def(py::init([](const std::string& text) { return parse_poly(text); }), "text"_a)
      .def_static("x", &BiPoly::x)
      .def_static("y", &BiPoly::y)
      .def("__str__", [](const BiPoly& p) { return to_string(p); })
      .def("__repr__", [](const BiPoly& p) { return "Poly('" + to_string(p) + "')"; })
      .def("__eq__", [](const BiPoly& p, const py::object& q) { return p == to_poly(q); })
      .def("__hash__", [](const BiPoly& p) { return py::hash(py::str(to_string(p))); })
      .def("__add__", [](const BiPoly& p, const py::object& q) { return p + to_poly(q); })
      .def("__radd__", [](const BiPoly& p, const py::object& q) { return to_poly(q) + p; })
      .def("__sub__", [](const BiPoly& p, const py::object& q) { return p - to_poly(q); })
      .def("__rsub__", [](const BiPoly& p, const py::object& q) { return to_poly(q) - p; })
      .def("__mul__", [](const BiPoly& p, const py::object& q) { return p * to_poly(q); })
      .def("__rmul__", [](const BiPoly& p, const py::object& q) { return to_poly(q) * p; })
      .def("__neg__", [](const BiPoly& p) { return -p; })
      .def("__pow__", [](const BiPoly& p, unsigned e) { return pow(p, e); })
      .def("is_zero", &BiPoly::is_zero)
      .def("total_degree",
           [](const BiPoly& p) -> py::object {
             if (p.is_zero()) return py::float_(-std::numeric_limits<double>::infinity());
             return py::int_(total_degree(p));
           })
      .def("support",
           [](const BiPoly& p) {
             py::list out;
             for (const auto& mono : support(p)) out.append(point(mono));
             return out;
           })
      .def("terms", [](const BiPoly& p) {
        py::dict out;
        for (const auto& [mono, c] : p.terms()) out[point(mono)] = to_string(c);
        return out;
      });

  py::class_<TameMove>(m, "TameMove")
      .def_static("elem_y", [](const py::object& p) { return TameMove::elem_y(to_poly(p)); })
      .def_static("elem_x", [](const py::object& q) { return TameMove::elem_x(to_poly(q)); })
      .def_static("linear",
                  [](const py::object& a, const py::object& b, const py::object& c, const py::object& d) {
                    return TameMove::linear(to_rational(a), to_rational(b), to_rational(c), to_rational(d));
                  })
      .def_static("swap", &TameMove::swap)
      .def_property_readonly("kind",
                             [](const TameMove& mv) {
                               return move_to_json(mv)["kind"].get<std::string>();
                             })
      .def("image", [](const TameMove& mv) { return py::make_tuple(mv.image_x(), mv.image_y()); })
      .def("to_dict",
           [](const TameMove& mv) {
             const auto doc = move_to_json(mv);
             py::dict out;
             for (const auto& [k, v] : doc.items()) out[py::str(k)] = v.get<std::string>();
             return out;
           })
      .def("__eq__", [](const TameMove& a, const TameMove& b) { return a == b; })
      .def("__repr__", &move_repr);

  m.def("bracket", [](const py::object& p, const py::object& q) { return bracket(to_poly(p), to_poly(q)); });
  m.def("substitute", [](const py::object& p, const py::object& x, const py::object& y) {
    return substitute(to_poly(p), to_poly(x), to_poly(y));
  });
  m.def("leading_form", [](const py::tuple& d, const py::object& p) {
    return leading_form(to_direction(d), to_poly(p));
  });
  m.def("hull", [](const py::object& p) {
    py::list out;
    for (const auto& v : hull(to_poly(p)).vertices) out.append(point(v));
    return out;
  });
  m.def("directions", [](const py::object& p) {
    py::list out;
    for (const auto& d : directions(to_poly(p))) out.append(point(d));
    return out;
  });
  m.def("st_en", [](const py::tuple& d, const py::object& p) {
    const Corners c = st_en(to_direction(d), to_poly(p));
    return py::make_tuple(point(c.st), point(c.en));
  });

  m.def(
      "decompose",
      [](const py::object& p, const py::object& q) { return unwrap(decompose({to_poly(p), to_poly(q)})); },
      "P"_a, "Q"_a, "Moves W with compose(W) == (P, Q); raises RejectError with the reason name.");
  m.def("compose", [](const TameWord& w) {
    const AutoPair pair = word_to_pair(w);
    return py::make_tuple(pair.p, pair.q);
  });
  m.def("invert", [](const py::object& p, const py::object& q) {
    const AutoPair inv = unwrap(invert({to_poly(p), to_poly(q)}));
    return py::make_tuple(inv.p, inv.q);
  });
  m.def("verify", [](const TameWord& w, const py::object& p, const py::object& q) {
    return verify(w, {to_poly(p), to_poly(q)});
  });
  m.def("word_inverse", &word_inverse);
  m.def("random_tame_word", &random_tame_word, "seed"_a, "n_moves"_a, "max_deg"_a, "coeff_bound"_a);
  m.def("find_homogeneous_f", [](const py::tuple& d, const py::object& ell) -> py::object {
    const auto f = find_homogeneous_f(to_direction(d), to_poly(ell));
    return f ? py::cast(*f) : py::none();
  });
}
