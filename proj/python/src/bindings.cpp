#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weilzeta/error.hpp"
#include "weilzeta/explicit_formula.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/motive.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/weil.hpp"
#include "weilzeta/zeta.hpp"

namespace py = pybind11;
namespace wz = weilzeta;

namespace {

wz::variety::CountOptions options(unsigned workers, const std::string& method) {
  wz::variety::CountOptions o;
  o.workers = workers;
  if (method == "auto") o.method = wz::variety::CountMethod::automatic;
  else if (method == "exhaustive") o.method = wz::variety::CountMethod::exhaustive;
  else if (method == "fibre") o.method = wz::variety::CountMethod::fibre;
  else throw wz::Error("unknown counting method: " + method);
  return o;
}

std::vector<std::string> rationals(const std::vector<wz::zeta::Rational>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

std::vector<std::string> integers(const wz::zeta::IntPoly& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

wz::ff::Op parse_op(const std::string& op) {
  if (op == "add") return wz::ff::Op::add;
  if (op == "sub") return wz::ff::Op::sub;
  if (op == "mul") return wz::ff::Op::mul;
  if (op == "div") return wz::ff::Op::div;
  throw wz::Error("unknown operation: " + op);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-field point counts, Weil numbers, zeta functions, motives and the explicit formula";
  py::register_exception<wz::Error>(m, "WeilzetaError", PyExc_ValueError);

  // finite fields
  py::class_<wz::ff::Field>(m, "Field")
      .def_property_readonly("characteristic", &wz::ff::Field::characteristic)
      .def_property_readonly("degree", &wz::ff::Field::degree)
      .def_property_readonly("order", &wz::ff::Field::order)
      .def_property_readonly("modulus", &wz::ff::Field::modulus)
      .def("__repr__", [](const wz::ff::Field& f) {
        return "Field(" + std::to_string(f.characteristic()) + "^" + std::to_string(f.degree()) +
               ", modulus " + wz::ff::to_string(f.modulus()) + ")";
      });
  m.def("make_field", &wz::ff::make_field, py::arg("p"), py::arg("n") = 1);
  m.def("enumerate_field", [](const wz::ff::Field& f) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& e : wz::ff::enumerate(f)) out.push_back(e.coeffs());
    return out;
  }, "all elements as coefficient lists (c_0, ..., c_{n-1}) in lexicographic order");
  m.def("arith", [](const wz::ff::Field& f, const std::vector<std::uint32_t>& a, const py::object& b,
                    const std::string& op) {
    const wz::ff::Element x(f, a);
    if (op == "pow") return wz::ff::arith_pow(x, b.cast<std::uint64_t>()).coeffs();
    return wz::ff::arith(x, wz::ff::Element(f, b.cast<std::vector<std::uint32_t>>()), parse_op(op)).coeffs();
  }, py::arg("field"), py::arg("a"), py::arg("b"), py::arg("op"),
     "op in add | sub | mul | div on coefficient lists; for pow, b is a nonnegative integer exponent");

  // varieties
  py::class_<wz::variety::PolySystem>(m, "PolySystem")
      .def_property_readonly("num_vars", &wz::variety::PolySystem::num_vars)
      .def_property_readonly("homogeneous", &wz::variety::PolySystem::homogeneous)
      .def("__len__", [](const wz::variety::PolySystem& s) { return s.polys().size(); })
      .def("__str__", [](const wz::variety::PolySystem& s) {
        std::string out;
        for (const auto& p : s.polys()) out += wz::variety::to_string(p, s.num_vars()) + "\n";
        return out;
      });
  m.def("parse_system", &wz::variety::parse_system, py::arg("text"), py::arg("homogeneous") = false);
  m.def("count_affine", [](const wz::variety::PolySystem& s, const wz::ff::Field& f, unsigned workers,
                           const std::string& method) { return wz::variety::count_affine(s, f, options(workers, method)); },
        py::arg("system"), py::arg("field"), py::arg("workers") = 1, py::arg("method") = "auto",
        py::call_guard<py::gil_scoped_release>());
  m.def("count_projective_variety", [](const wz::variety::PolySystem& s, const wz::ff::Field& f, unsigned workers) {
    return wz::variety::count_projective_variety(s, f, options(workers, "auto"));
  }, py::arg("system"), py::arg("field"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("count_projective_space", [](unsigned dim, const wz::ff::Field& f) {
    return wz::variety::count_projective_space(dim, f);
  }, py::arg("dim"), py::arg("field"));
  m.def("count_sequence", [](const wz::variety::PolySystem& s, std::uint32_t p, unsigned n_max, unsigned workers) {
    return wz::variety::count_sequence(s, p, n_max, options(workers, "auto")).counts;
  }, py::arg("system"), py::arg("p"), py::arg("n_max"), py::arg("workers") = 1,
     py::call_guard<py::gil_scoped_release>());

  // Weil numbers
  py::class_<wz::weil::FrobeniusAlpha>(m, "FrobeniusAlpha")
      .def_readonly("alpha", &wz::weil::FrobeniusAlpha::alpha)
      .def_readonly("p", &wz::weil::FrobeniusAlpha::p)
      .def_readonly("trace", &wz::weil::FrobeniusAlpha::trace)
      .def("__repr__", [](const wz::weil::FrobeniusAlpha& a) {
        return "FrobeniusAlpha(" + wz::format_complex(a.alpha) + ", p=" + std::to_string(a.p) + ")";
      });
  m.def("hasse_alpha", &wz::weil::hasse_alpha, py::arg("p"), py::arg("n1_affine"));
  m.def("alpha_from_trace", &wz::weil::alpha_from_trace, py::arg("p"), py::arg("trace"));
  m.def("alpha_power", &wz::weil::alpha_power, py::arg("alpha"), py::arg("n"));
  m.def("predict_affine_count", &wz::weil::predict_affine_count, py::arg("alpha"), py::arg("n"));
  m.def("correction_term", &wz::weil::correction_term, py::arg("alpha"), py::arg("n"));
  py::class_<wz::weil::WeilNumbers>(m, "WeilNumbers")
      .def_readonly("p", &wz::weil::WeilNumbers::p)
      .def_readonly("genus", &wz::weil::WeilNumbers::genus)
      .def_readonly("numerator", &wz::weil::WeilNumbers::numerator)
      .def_readonly("roots", &wz::weil::WeilNumbers::roots)
      .def("predict", &wz::weil::predict_curve_count, py::arg("n"));
  m.def("weil_numbers_from_counts", [](std::uint32_t p, unsigned genus, const std::vector<std::uint64_t>& counts) {
    return wz::weil::weil_numbers_from_counts(p, genus, {p, counts, true});
  }, py::arg("p"), py::arg("genus"), py::arg("projective_counts"));
  m.def("verify_weil_rh", [](const std::vector<wz::Complex>& roots, double p, unsigned weight) {
    const auto r = wz::weil::verify_weil_rh(roots, p, weight);
    return py::make_tuple(r.holds, r.max_deviation);
  }, py::arg("roots"), py::arg("p"), py::arg("weight"));

  // zeta functions
  m.def("zeta_series", [](const std::vector<std::uint64_t>& counts) {
    return rationals(wz::zeta::zeta_series({0, counts, true}).coeffs);
  }, py::arg("counts"), "coefficients of exp(sum N_n t^n / n) as 'a/b' strings");
  m.def("curve_zeta", [](std::uint32_t p, const std::vector<std::uint64_t>& counts, unsigned genus) {
    const auto z = wz::zeta::rational_reconstruct(wz::zeta::zeta_series({p, counts, true}), 2 * genus,
                                                  wz::zeta::curve_denominator(p), p);
    py::dict out;
    out["numerator"] = integers(z.numerator);
    out["denominator"] = integers(z.denominator);
    out["text"] = wz::zeta::format_rational_zeta(z);
    out["zeros"] = z.numerator_roots;
    out["poles"] = z.denominator_roots;
    return out;
  }, py::arg("p"), py::arg("projective_counts"), py::arg("genus") = 1);
  m.def("trace_formula_count", &wz::zeta::trace_formula_count, py::arg("table"), py::arg("n"));

  // motives
  py::class_<wz::motive::Motive>(m, "Motive")
      .def(py::init<std::uint64_t, wz::motive::WeightTable>(), py::arg("q"), py::arg("pieces"))
      .def_property_readonly("base", &wz::motive::Motive::base)
      .def_property_readonly("pieces", &wz::motive::Motive::pieces)
      .def_property_readonly("rank", &wz::motive::Motive::rank)
      .def("point_count", &wz::motive::point_count, py::arg("n"))
      .def("__add__", &wz::motive::direct_sum)
      .def("__mul__", &wz::motive::tensor)
      .def("__str__", [](const wz::motive::Motive& mo) { return wz::motive::to_string(mo); });
  m.def("parse_motive", &wz::motive::parse_motive, py::arg("expr"), py::arg("q"));
  m.def("direct_sum", &wz::motive::direct_sum);
  m.def("tensor", &wz::motive::tensor);
  m.def("motive_of_projective_space", &wz::motive::motive_of_projective_space, py::arg("dim"), py::arg("q"));
  m.def("motive_of_elliptic_curve", &wz::motive::motive_of_elliptic_curve, py::arg("alpha"));
  m.def("lefschetz", &wz::motive::Motive::lefschetz, py::arg("q"), py::arg("power") = 1);

  // explicit formula
  py::class_<wz::primes::ZeroTable>(m, "ZeroTable")
      .def(py::init<std::vector<double>>(), py::arg("ordinates"))
      .def("__len__", &wz::primes::ZeroTable::size)
      .def_property_readonly("ordinates", [](const wz::primes::ZeroTable& z) {
        return std::vector<double>(z.ordinates().begin(), z.ordinates().end());
      });
  m.def("load_zeros", [](const std::string& path) { return wz::primes::load_zeros(path); }, py::arg("path"));
  py::class_<wz::primes::PrimeCounter>(m, "PrimeCounter")
      .def(py::init<std::uint64_t>(), py::arg("limit"))
      .def("pi", &wz::primes::PrimeCounter::pi, py::arg("n"))
      .def("is_prime", &wz::primes::PrimeCounter::is_prime, py::arg("n"));
  m.def("sieve_pi", &wz::primes::sieve_pi, py::arg("x"), py::arg("counter"));
  m.def("li", &wz::primes::li, py::arg("x"), py::arg("panels") = wz::primes::kDefaultPanels);
  m.def("riemann_approx", &wz::primes::riemann_approx, py::arg("x"), py::arg("zeros"), py::arg("K"));
  m.def("rh_bound_ratio", &wz::primes::rh_bound_ratio, py::arg("range_max"), py::arg("counter"));
}
