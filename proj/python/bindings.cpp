#include <memory>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "sclab/collections.hpp"
#include "sclab/errors.hpp"
#include "sclab/homology.hpp"
#include "sclab/order_complex.hpp"
#include "sclab/poset.hpp"
#include "sclab/verifier.hpp"

namespace py = pybind11;
using namespace sclab;

namespace {

// A loaded group with its subgroup lattice.
class Group {
 public:
  Group(const std::string& source, std::size_t max_order) {
    GroupLimits limits;
    if (max_order) limits.max_order = max_order;
    auto G = std::make_shared<const PermutationGroup>(load_group(source, limits));
    lattice_ = std::make_shared<const SubgroupLattice>(SubgroupLattice::enumerate(G));
  }

  std::size_t order() const { return lattice_->group().order(); }
  std::size_t degree() const { return lattice_->group().degree(); }
  std::size_t subgroup_count() const { return lattice_->size(); }
  std::vector<int> primes() const { return prime_divisors(order()); }

  std::vector<std::string> generators() const {
    std::vector<std::string> out;
    for (const auto& g : lattice_->group().generators()) out.push_back(g.to_cycle_string());
    return out;
  }

  std::vector<std::string> collection(int p, const std::string& kind) const {
    const PrimeAnalysis pa(lattice_, p);
    std::vector<std::string> out;
    for (SubgroupId h : pa.build_collection(parse_kind(kind)).members) out.push_back(describe_subgroup(*lattice_, h));
    return out;
  }

  std::string conditions(int p) const {
    const PrimeAnalysis pa(lattice_, p);
    nlohmann::json j = nlohmann::json::object();
    for (Condition c : {Condition::M, Condition::Cl, Condition::Ch}) {
      const auto r = pa.check_condition(c);
      nlohmann::json w = nlohmann::json::array();
      for (const auto& x : r.witnesses) w.push_back(x.description);
      j[std::string(to_string(c))] = {{"holds", r.holds}, {"witnesses", w}};
    }
    return j.dump();
  }

  std::string homology_of(int p, const std::string& kind) const {
    const PrimeAnalysis pa(lattice_, p);
    const auto P = GPoset::of_subgroups(lattice_, pa.build_collection(parse_kind(kind)).members);
    return to_json(homology(OrderComplex::of(P))).dump();
  }

  std::string verify(int p, const std::string& suite, const std::string& format, unsigned jobs) const {
    const auto s = parse_suite(suite);
    if (!s) throw std::invalid_argument("unknown suite: " + suite);
    const Report r = run_suite(lattice_, p, *s, {}, jobs);
    return emit_report(r, format == "markdown" ? ReportFormat::Markdown : ReportFormat::Json);
  }

 private:
  static CollectionKind parse_kind(const std::string& kind) {
    const auto k = parse_collection_kind(kind);
    if (!k) throw std::invalid_argument("unknown collection kind: " + kind);
    return *k;
  }

  std::shared_ptr<const SubgroupLattice> lattice_;
};

}  // namespace

PYBIND11_MODULE(_sclab, m) {
  m.doc() = "p-subgroup collections, their nerves and the edge verifier";

  // Later registrations are tried first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SizeCap>(m, "SizeCap", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownBuiltin>(m, "UnknownBuiltin", PyExc_KeyError);
  py::register_exception<PrimeDoesNotDivide>(m, "PrimeDoesNotDivide", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<IOError>(m, "IOError", PyExc_OSError);

  m.def("builtin_names", &builtin_names);
  m.def("collection_kinds", [] {
    std::vector<std::string> out;
    for (auto k : all_collection_kinds()) out.emplace_back(to_string(k));
    return out;
  });

  py::class_<Group>(m, "Group")
      .def(py::init<const std::string&, std::size_t>(), py::arg("source"), py::arg("max_order") = 0)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("subgroup_count", &Group::subgroup_count)
      .def_property_readonly("primes", &Group::primes)
      .def_property_readonly("generators", &Group::generators)
      .def("collection", &Group::collection, py::arg("p"), py::arg("kind"))
      .def("conditions_json", &Group::conditions, py::arg("p"))
      .def("homology_json", &Group::homology_of, py::arg("p"), py::arg("kind"))
      .def("verify", &Group::verify, py::arg("p"), py::arg("suite") = "all", py::arg("format") = "json",
           py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
}
