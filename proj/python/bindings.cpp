#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lietools/cli.hpp"
#include "lietools/errors.hpp"
#include "lietools/lndcalc.hpp"
#include "lietools/orbits.hpp"
#include "lietools/partitions.hpp"
#include "lietools/rootsys.hpp"

namespace py = pybind11;
using namespace lietools;

namespace {

PartitionConstraint constraint_from(const std::string& name) {
  if (name == "unrestricted") return PartitionConstraint::Unrestricted;
  if (name == "distinct-parts") return PartitionConstraint::DistinctParts;
  if (name == "distinct-odd-parts") return PartitionConstraint::DistinctOddParts;
  throw DomainError("unknown partition constraint '" + name + "'");
}

LieType type_from(const std::string& text) { return LieType::parse(text); }

std::vector<std::vector<int>> as_lists(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

const Derivation& pick(const std::pair<Derivation, Derivation>& ds, const std::string& which) {
  if (which == "d1") return ds.first;
  if (which == "d2") return ds.second;
  throw DomainError("derivation must be 'd1' or 'd2'");
}

}  // namespace

PYBIND11_MODULE(_lietools, m) {
  m.doc() = "Nilpotent orbit counts, root data, principal-embedding checks and SL2 derivation calculus.";

  // Translators run newest-first, so the subclasses registered after the
  // base are matched before it.
  auto& base = py::register_exception<Error>(m, "LietoolsError", PyExc_ValueError);
  py::register_exception<UnsupportedCaseError>(m, "UnsupportedCaseError", base.ptr());
  py::register_exception<NotNilpotentError>(m, "NotNilpotentError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());

  m.attr("__version__") = kToolVersion;

  // partitions
  m.def("enumerate_partitions",
        [](int n, const std::string& c) { return as_lists(enumerate_partitions(n, constraint_from(c))); },
        py::arg("n"), py::arg("constraint") = "unrestricted");
  m.def("count_partitions", [](int n, const std::string& c) { return count_partitions(n, constraint_from(c)); },
        py::arg("n"), py::arg("constraint") = "unrestricted");
  m.def("conjugate_partition",
        [](const std::vector<int>& p) { return conjugate_partition(Partition(p)).parts(); });
  m.def("is_symplectic_partition", [](const std::vector<int>& p) { return is_symplectic_partition(Partition(p)); });
  m.def("is_orthogonal_partition", [](const std::vector<int>& p) { return is_orthogonal_partition(Partition(p)); });

  // root data
  m.def("canonical_type", [](const std::string& t) { return type_from(t).to_string(); });
  m.def("group_dimension", [](const std::string& t) { return group_dimension(type_from(t)); });
  m.def("regular_orbit_dimension", [](const std::string& t) { return regular_orbit_dimension(type_from(t)); });
  m.def("positive_roots", [](const std::string& t) { return build_root_system(type_from(t)).positive_roots(); });
  m.def("cartan_matrix", [](const std::string& t) { return cartan_matrix(type_from(t)); });
  m.def("principal_h_eigenvalues", [](const std::string& t) {
    const RootSystem rs = build_root_system(type_from(t));
    std::vector<int> out;
    for (std::size_t i = 0; i < rs.num_positive_roots(); ++i) out.push_back(principal_h_eigenvalue(rs, i));
    return out;
  });

  // orbits
  m.def("nilpotent_orbit_count", [](const std::string& t) {
    const OrbitCount oc = nilpotent_orbit_count(type_from(t));
    py::dict d;
    d["type"] = oc.lie_type.to_string();
    d["count"] = oc.count;
    d["method"] = to_string(oc.method);
    d["includes_zero_orbit"] = oc.includes_zero_orbit;
    d["d_formula_verbatim"] = oc.d_formula_verbatim;
    return d;
  });
  m.def("classify_nilpotent_orbits_typeA", [](int n) { return as_lists(classify_nilpotent_orbits_typeA(n)); });
  m.def("orbit_dimension_typeA", [](const std::vector<int>& p) { return orbit_dimension_typeA(Partition(p)); });
  m.def("centralizer_dimension_oracle",
        [](const std::vector<int>& p) { return centralizer_dimension_oracle(Partition(p)); });
  m.def("subregular_partition", [](const std::string& t) { return subregular_partition(type_from(t)).parts(); });

  // C[SL2]
  m.def("sl2_normal_form", [](const std::string& f) {
    const QuotientRing ring = sl2_coordinate_ring();
    return ring.format(ring.normal_form(ring.parse(f)));
  });
  m.def("sl2_apply", [](const std::string& which, const std::string& f) {
    const QuotientRing ring = sl2_coordinate_ring();
    const auto ds = sl2_standard_derivations(ring);
    return ring.format(apply_derivation(ring, pick(ds, which), ring.normal_form(ring.parse(f))));
  });
  m.def(
      "sl2_delta_degree",
      [](const std::string& which, const std::string& f, unsigned cap) {
        const QuotientRing ring = sl2_coordinate_ring();
        const auto ds = sl2_standard_derivations(ring);
        return delta_degree(ring, pick(ds, which), ring.parse(f), cap);
      },
      py::arg("derivation"), py::arg("f"), py::arg("cap") = kDefaultDegreeCap);
  m.def(
      "sl2_semicompatibility_witness",
      [](const std::vector<std::string>& k1, const std::vector<std::string>& k2, unsigned max_degree) {
        const QuotientRing ring = sl2_coordinate_ring();
        const auto ds = sl2_standard_derivations(ring);
        std::vector<MultiPoly> a, b;
        for (const auto& s : k1) a.push_back(ring.parse(s));
        for (const auto& s : k2) b.push_back(ring.parse(s));
        return verify_semicompatibility_witness(ring, ds.first, ds.second, a, b, max_degree).to_string(ring);
      },
      py::arg("k1"), py::arg("k2"), py::arg("max_degree") = kDefaultWitnessDegree);
  m.def("verify_invariant_hypersurface", [] { return verify_invariant_hypersurface().passed(); });

  // reports, as JSON text
  m.def("_orbits_report", [](const std::string& t) { return cmd_orbits(t).to_json().dump(); });
  m.def("_embed_report", [](const std::string& g, const std::string& r, std::optional<int> l) {
    return cmd_embed(g, r, l).to_json().dump();
  }, py::arg("g"), py::arg("r"), py::arg("l") = py::none());
  m.def("_appendix_report", [](int l_max) { return cmd_report_appendix(l_max).to_json().dump(); },
        py::arg("lmax") = 50);
  m.def("_lnd_report", [](unsigned cap) { return cmd_lnd_verify(cap).to_json().dump(); },
        py::arg("cap") = kDefaultDegreeCap);
}
