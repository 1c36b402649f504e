#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <Python.h>

#include "fakedeg/bijections.hpp"
#include "fakedeg/dominoes.hpp"
#include "fakedeg/fakedeg.hpp"
#include "fakedeg/verify.hpp"

namespace py = pybind11;
using namespace fakedeg;

namespace {

using Shape = std::vector<int>;
using Pair = std::vector<Shape>;
using Fillings = std::vector<std::vector<std::vector<int>>>;

Multipartition to_multi(const Pair& parts) {
  std::vector<Partition> comps;
  for (const auto& p : parts) comps.emplace_back(p);
  return Multipartition(std::move(comps));
}

Pair from_multi(const Multipartition& m) {
  Pair out;
  for (const auto& p : m.components()) out.push_back(p.parts());
  return out;
}

py::list to_py(const QPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) {
    const std::string s = c.str();
    out.append(py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10)));
  }
  return out;
}

template <typename E>
E pick(const std::string& name, std::initializer_list<std::pair<const char*, E>> options) {
  for (const auto& [key, value] : options)
    if (name == key) return value;
  throw std::invalid_argument("unknown route: " + name);
}

DominoType domino_type(const std::string& name) {
  return pick<DominoType>(name, {{"C", DominoType::C}, {"B", DominoType::B}});
}

Group group_of(const std::string& kind, int n, int d) {
  if (kind == "wreath") return Group::wreath(d, n);
  if (kind == "bc") return Group::typeBC(n);
  if (kind == "d") return Group::typeD(n);
  throw std::invalid_argument("unknown group: " + kind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fake degrees of classical Weyl groups and related tableau maps.";

  py::register_exception<InternalError>(m, "InternalError");

  m.def(
      "fake_degree_wreath",
      [](const Pair& multi, int d, const std::string& route) {
        return to_py(fake_degree_wreath(
            to_multi(multi), d,
            pick<WreathRoute>(route, {{"formula", WreathRoute::formula}, {"enumeration", WreathRoute::enumeration}})));
      },
      py::arg("multi"), py::arg("d"), py::arg("route") = "formula",
      "Coefficient list of the fake degree of G(d,1,n) at a d-multipartition.");

  m.def(
      "fake_degree_bc",
      [](const Pair& pair, const std::string& route) {
        return to_py(fake_degree_BC(to_multi(pair), pick<BCRoute>(route, {{"tuple", BCRoute::tuple},
                                                                          {"domino_even", BCRoute::domino_even},
                                                                          {"domino_odd", BCRoute::domino_odd}})));
      },
      py::arg("pair"), py::arg("route") = "tuple");

  m.def(
      "fake_degree_d",
      [](const Pair& pair, int c, const std::string& route) {
        const auto r = pick<DRoute>(route, {{"tuple", DRoute::tuple}, {"domino", DRoute::domino}, {"shifted", DRoute::shifted}});
        return to_py(fake_degree_D(TypeDRep(to_multi(pair), c), r));
      },
      py::arg("pair"), py::arg("c") = 1, py::arg("route") = "tuple");

  m.def("lusztig_rho1", [](const Pair& pair) { return lusztig_rho1(to_multi(pair)).parts(); }, py::arg("pair"));
  m.def("lusztig_rho2", [](const Pair& pair) { return lusztig_rho2(to_multi(pair)).parts(); }, py::arg("pair"));

  m.def(
      "enumerate_sdt",
      [](const Shape& shape) {
        std::vector<std::pair<std::vector<std::vector<int>>, int>> out;
        for (const auto& t : enumerate_sdt(Partition(shape))) out.emplace_back(t.grid(), maj_domino(t));
        return out;
      },
      py::arg("shape"), "List of (label grid, maj) for every standard domino tableau; the zero square reads 0.");

  m.def(
      "domino_images",
      [](const Shape& shape) {
        const Partition alpha(shape);
        const DominoType type = alpha.size() % 2 == 0 ? DominoType::C : DominoType::B;
        std::vector<std::tuple<std::vector<std::vector<int>>, Fillings, int>> out;
        for (const auto& t : enumerate_sdt(alpha)) {
          const auto z = type == DominoType::C ? pi_C_prime(t) : pi_B_prime(t);
          out.emplace_back(t.grid(), z.fillings(), maj_tuple(z));
        }
        return out;
      },
      py::arg("shape"), "List of (label grid, image tableau pair, maj of the image) under the composite bijection.");

  m.def(
      "flip",
      [](const Fillings& fillings, const std::string& type) {
        const auto r = flip(StandardTupleTableau::from_fillings(fillings), domino_type(type));
        return std::make_pair(r.pair.fillings(), r.swaps);
      },
      py::arg("fillings"), py::arg("type") = "C", "Returns (flipped fillings, swapped labels i for each i <-> i+1).");

  m.def(
      "pair_maj",
      [](const Fillings& fillings, const std::string& type) {
        return pair_maj(StandardTupleTableau::from_fillings(fillings), domino_type(type));
      },
      py::arg("fillings"), py::arg("type") = "C");

  m.def(
      "tuple_maj",
      [](const Fillings& fillings) { return maj_tuple(StandardTupleTableau::from_fillings(fillings)); },
      py::arg("fillings"));

  m.def(
      "poincare_polynomial", [](const std::string& kind, int n, int d) { return to_py(poincare_polynomial(group_of(kind, n, d))); },
      py::arg("kind"), py::arg("n"), py::arg("d") = 2);

  m.def(
      "regular_representation_sum",
      [](const std::string& kind, int n, int d) { return to_py(regular_representation_sum(group_of(kind, n, d))); },
      py::arg("kind"), py::arg("n"), py::arg("d") = 2);

  m.def("special_partner_bc", [](const Pair& pair) { return from_multi(special_partner_BC(to_multi(pair))); }, py::arg("pair"));
  m.def("special_partner_d", [](const Pair& pair) { return from_multi(special_partner_D(to_multi(pair))); }, py::arg("pair"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& suite, int max_n) {
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(suite, max_n);
        }
        std::vector<std::string> records;
        for (const auto& r : report.records) records.push_back(r.dump());
        return std::make_tuple(report.failures, records, report.notes);
      },
      py::arg("suite"), py::arg("max_n"), "Returns (failures, JSON records, notes).");
}
