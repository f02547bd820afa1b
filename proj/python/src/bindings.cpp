#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtk/errors.hpp"
#include "rtk/embeddings.hpp"
#include "rtk/omega.hpp"
#include "rtk/report.hpp"
#include "rtk/subsystem.hpp"
#include "rtk/torus_element.hpp"
#include "rtk/verify.hpp"

namespace py = pybind11;

namespace {

rtk::SimpleType type_of(const std::string& s) { return rtk::parse_simple_type(s); }

std::string big(const rtk::Int& v) { return v.str(); }

py::dict multiset_dict(const std::string& type, const rtk::Weight& lambda) {
  const rtk::RootDatum& datum = rtk::build_root_datum(type_of(type));
  auto ms = rtk::weight_multiset(datum, lambda);
  py::dict out;
  py::list entries;
  for (const auto& [mu, m] : ms->entries()) {
    py::dict e;
    e["weight"] = mu;
    e["multiplicity"] = py::int_(py::str(big(m)));
    e["orbit"] = py::int_(py::str(big(rtk::orbit_size(datum, mu))));
    entries.append(e);
  }
  out["dim"] = py::int_(py::str(big(ms->total_dim())));
  out["entries"] = entries;
  out["all_mult_one"] = ms->all_multiplicities_one();
  out["nonzero_mult_one"] = ms->nonzero_multiplicities_one();
  out["zero_mult"] = py::int_(py::str(big(ms->zero_multiplicity())));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact root-system and highest-weight engine";

  py::register_exception<rtk::error>(m, "RtkError");

  m.def("positive_root_count", [](const std::string& t) {
    return static_cast<int>(rtk::build_root_datum(type_of(t)).positive_roots().size());
  });
  m.def("cartan_matrix", [](const std::string& t) {
    return rtk::build_root_datum(type_of(t)).cartan();
  });
  m.def("weyl_dimension", [](const std::string& t, const rtk::Weight& lam) {
    return py::int_(
        py::str(big(rtk::weyl_dimension(rtk::build_root_datum(type_of(t)), lam))));
  });
  m.def("orbit_size", [](const std::string& t, const rtk::Weight& lam) {
    return py::int_(py::str(big(rtk::orbit_size(rtk::build_root_datum(type_of(t)), lam))));
  });
  m.def("reflect", [](const std::string& t, int i, const rtk::Weight& v) {
    return rtk::reflect(rtk::build_root_datum(type_of(t)), i, v);
  });
  m.def("dominant_representative", [](const std::string& t, const rtk::Weight& v) {
    auto r = rtk::dominant_representative(rtk::build_root_datum(type_of(t)), v);
    return py::make_tuple(r.weight, r.stabilizer_generators);
  });
  m.def("longest_element_action", [](const std::string& t, const rtk::Weight& v) {
    return rtk::longest_element_action(rtk::build_root_datum(type_of(t)), v);
  });
  m.def("subdominant_weights", [](const std::string& t, const rtk::Weight& lam) {
    return rtk::subdominant_weights(rtk::build_root_datum(type_of(t)), lam);
  });
  m.def("freudenthal_multiplicity",
        [](const std::string& t, const rtk::Weight& lam, const rtk::Weight& mu) {
          return py::int_(py::str(
              big(rtk::freudenthal_multiplicity(rtk::build_root_datum(type_of(t)), lam, mu))));
        });
  m.def("weight_multiset", &multiset_dict);
  m.def("is_self_dual", [](const std::string& t, const rtk::Weight& lam) {
    return rtk::is_self_dual(rtk::build_root_datum(type_of(t)), lam);
  });
  m.def("steinberg_indicator", [](const std::string& t, const rtk::Weight& lam) {
    return rtk::steinberg_indicator(rtk::build_root_datum(type_of(t)), lam) ==
                   rtk::Indicator::Symplectic
               ? "symplectic"
               : "orthogonal";
  });
  m.def("omega1_membership", [](const std::string& t, const rtk::Weight& lam, std::int64_t p) {
    return rtk::omega1_membership(type_of(t), lam, rtk::Characteristic(p));
  });
  m.def("omega2_membership", [](const std::string& t, const rtk::Weight& lam, std::int64_t p) {
    auto v = rtk::omega2_membership(type_of(t), lam, rtk::Characteristic(p));
    py::dict out;
    out["in_omega1"] = v.in_omega1;
    out["in_omega2"] = v.in_omega2;
    if (v.zero_mult) out["zero_mult"] = py::int_(py::str(big(*v.zero_mult)));
    if (v.table_row) out["table_row"] = *v.table_row;
    return out;
  });
  m.def("regular_torus_verdict",
        [](const std::string& t, const rtk::Weight& lam, std::int64_t p) {
          auto v = rtk::regular_torus_verdict(type_of(t), lam, rtk::Characteristic(p));
          py::dict out;
          out["overgroup"] = rtk::to_string(v.overgroup.series);
          out["overgroup_dim"] = py::int_(py::str(big(v.overgroup.natural_dim)));
          out["regular_torus"] = v.contains_regular_torus;
          out["reason"] = rtk::to_string(v.reason);
          return out;
        });
  m.def("element_regularity", [](const std::string& t, const std::string& eigenvalues) {
    auto ty = type_of(t);
    auto r = rtk::element_regularity(ty, rtk::parse_torus_element(ty, eigenvalues));
    return py::make_tuple(r.regular_in_H, r.regular_in_GL);
  });
  m.def("restrict_weight",
        [](const std::string& t, const std::vector<std::vector<std::int64_t>>& basis,
           const rtk::Weight& v) {
          auto b = rtk::make_subsystem_basis(rtk::build_root_datum(type_of(t)), basis);
          return rtk::restrict_weight(b, v);
        });
  m.def("classify_json", [](const std::string& t, const rtk::Weight& lam, std::int64_t p) {
    return rtk::classify_report_json(type_of(t), lam, rtk::Characteristic(p));
  });
  m.def("exceptional_audit", []() {
    py::list rows;
    for (const auto& e : rtk::default_embedding_store().all()) {
      py::dict r;
      r["H"] = rtk::to_string(e.H);
      std::string mm;
      for (std::size_t i = 0; i < e.M.size(); ++i) mm += (i ? "+" : "") + rtk::to_string(e.M[i]);
      r["M"] = mm;
      r["zero_weight_sum"] = py::int_(py::str(big(rtk::zero_weight_sum(e))));
      r["regular_torus"] = rtk::regular_torus_in_exceptional(e);
      rows.append(r);
    }
    return rows;
  });
  m.def("verify_tables", [](const std::string& max_dim) {
    auto tr = rtk::cross_verify(rtk::tables::default_store(), rtk::Int(max_dim));
    auto er =
        rtk::verify_embeddings(rtk::default_embedding_store(), rtk::tables::default_store());
    py::dict out;
    out["instances_checked"] = tr.instances_checked + er.instances_checked;
    py::list mm;
    for (const auto& x : tr.mismatches) mm.append(x.where + ": " + x.detail);
    for (const auto& x : er.mismatches) mm.append(x.where + ": " + x.detail);
    out["mismatches"] = mm;
    return out;
  });
  m.attr("schema_version") = rtk::json_schema_version();
}
