#include "rtk/report.hpp"

#include <sstream>

#include <json.hpp>

#include "rtk/duality.hpp"
#include "rtk/errors.hpp"
#include "rtk/tables.hpp"

namespace rtk {

using nlohmann::json;

namespace {

json weight_json(const Weight& w) {
  json a = json::array();
  for (auto c : w) a.push_back(c);
  return a;
}

std::string weight_str(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

json base_report(const std::string& command, SimpleType type, const Weight* lambda,
                 const Characteristic* p) {
  json j;
  j["schema_version"] = json_schema_version();
  j["input"]["command"] = command;
  j["input"]["type"] = to_string(type);
  if (lambda) j["input"]["lambda"] = weight_json(*lambda);
  if (p) j["input"]["p"] = p->p;
  std::ostringstream checksum;
  checksum << std::hex << tables::default_store().checksum();
  j["provenance"]["tables_checksum"] = checksum.str();
  return j;
}

json multiset_json(const WeightMultiset& ms) {
  json arr = json::array();
  for (const auto& [mu, m] : ms.entries()) {
    json e;
    e["weight"] = weight_json(mu);
    e["multiplicity"] = m.str();
    e["orbit"] = orbit_size(ms.datum(), mu).str();
    arr.push_back(e);
  }
  return arr;
}

json classify_core(SimpleType type, const Weight& lambda, Characteristic p) {
  json v;
  auto omega = omega2_membership(type, lambda, p);
  v["in_omega1"] = omega.in_omega1;
  v["in_omega2"] = omega.in_omega2;
  if (omega.table_row) v["table_row"] = *omega.table_row;
  if (omega.zero_mult) v["zero_mult"] = omega.zero_mult->str();
  v["w1t"] = to_string(theorem_w1t(type, lambda, p));
  try {
    auto [form, over] = decide_overgroup(build_root_datum(type), lambda, p);
    v["self_dual"] = form.self_dual;
    v["form"] = to_string(form.form);
    if (form.p2_quadratic) v["p2_quadratic"] = *form.p2_quadratic;
    v["overgroup"] = to_string(over.series);
    v["overgroup_dim"] = over.natural_dim.str();
    auto reg = regular_torus_verdict(type, lambda, p);
    v["regular_torus"] = reg.contains_regular_torus;
    v["regular_torus_reason"] = to_string(reg.reason);
  } catch (const unsupported_charp_dimension& e) {
    v["overgroup"] = nullptr;
    v["note"] = e.what();
  }
  if (auto exc = maximality_exceptions(type, lambda, p)) {
    json arr = json::array();
    for (SimpleType t : *exc) arr.push_back(to_string(t));
    v["intermediate_subgroups"] = arr;
  }
  return v;
}

}  // namespace

std::string json_schema_version() { return "rtk-report/1"; }

std::string weights_report_json(SimpleType type, const Weight& lambda) {
  const RootDatum& datum = build_root_datum(type);
  auto ms = weight_multiset(datum, lambda);
  json j = base_report("weights", type, &lambda, nullptr);
  j["verdicts"]["dim"] = ms->total_dim().str();
  j["verdicts"]["dominant_orbits"] = ms->entries().size();
  j["verdicts"]["zero_mult"] = ms->zero_multiplicity().str();
  j["verdicts"]["all_mult_one"] = ms->all_multiplicities_one();
  j["verdicts"]["nonzero_mult_one"] = ms->nonzero_multiplicities_one();
  j["multiset"] = multiset_json(*ms);
  return j.dump(2);
}

std::string weights_report_text(SimpleType type, const Weight& lambda) {
  const RootDatum& datum = build_root_datum(type);
  auto ms = weight_multiset(datum, lambda);
  std::ostringstream out;
  out << to_string(type) << " highest weight [" << weight_str(lambda) << "]\n";
  out << "dim " << ms->total_dim() << ", " << ms->entries().size()
      << " dominant orbits, zero-weight multiplicity " << ms->zero_multiplicity() << "\n";
  for (const auto& [mu, m] : ms->entries())
    out << "  [" << weight_str(mu) << "]  mult " << m << "  orbit "
        << orbit_size(datum, mu) << "\n";
  return out.str();
}

std::string classify_report_json(SimpleType type, const Weight& lambda, Characteristic p) {
  json j = base_report("classify", type, &lambda, &p);
  j["verdicts"] = classify_core(type, lambda, p);
  return j.dump(2);
}

std::string classify_report_text(SimpleType type, const Weight& lambda, Characteristic p) {
  json v = classify_core(type, lambda, p);
  std::ostringstream out;
  out << to_string(type) << " [" << weight_str(lambda) << "] at p=" << p.p << "\n";
  out << "  omega1: " << (v["in_omega1"].get<bool>() ? "yes" : "no")
      << "   omega2: " << (v["in_omega2"].get<bool>() ? "yes" : "no");
  if (v.contains("zero_mult")) out << "   zero-mult: " << v["zero_mult"].get<std::string>();
  out << "\n  weight profile: " << v["w1t"].get<std::string>() << "\n";
  if (v.contains("form")) {
    out << "  form: " << v["form"].get<std::string>() << "   overgroup: "
        << v["overgroup"].get<std::string>() << "_" << v["overgroup_dim"].get<std::string>()
        << "\n";
    out << "  regular torus: " << (v["regular_torus"].get<bool>() ? "yes" : "no") << " ("
        << v["regular_torus_reason"].get<std::string>() << ")\n";
  } else if (v.contains("note")) {
    out << "  " << v["note"].get<std::string>() << "\n";
  }
  if (v.contains("intermediate_subgroups")) {
    out << "  intermediate subgroups:";
    for (const auto& s : v["intermediate_subgroups"]) out << " " << s.get<std::string>();
    out << "\n";
  }
  return out.str();
}

std::string forms_report_json(SimpleType type, const Weight& lambda, Characteristic p) {
  json j = base_report("forms", type, &lambda, &p);
  auto [form, over] = decide_overgroup(build_root_datum(type), lambda, p);
  j["verdicts"]["self_dual"] = form.self_dual;
  j["verdicts"]["form"] = to_string(form.form);
  if (form.p2_quadratic) j["verdicts"]["p2_quadratic"] = *form.p2_quadratic;
  j["verdicts"]["overgroup"] = to_string(over.series);
  j["verdicts"]["overgroup_dim"] = over.natural_dim.str();
  return j.dump(2);
}

std::string forms_report_text(SimpleType type, const Weight& lambda, Characteristic p) {
  auto [form, over] = decide_overgroup(build_root_datum(type), lambda, p);
  std::ostringstream out;
  out << to_string(type) << " [" << weight_str(lambda) << "] at p=" << p.p << ": "
      << (form.self_dual ? "self-dual" : "not self-dual") << ", " << to_string(form.form)
      << ", overgroup " << to_string(over.series) << "_" << over.natural_dim;
  if (form.p2_quadratic)
    out << ", quadratic form at p=2: " << (*form.p2_quadratic ? "yes" : "no");
  out << "\n";
  return out.str();
}

std::string regular_torus_report_json(SimpleType type, const Weight& lambda,
                                      Characteristic p) {
  json j = base_report("regular-torus", type, &lambda, &p);
  auto reg = regular_torus_verdict(type, lambda, p);
  j["verdicts"]["overgroup"] = to_string(reg.overgroup.series);
  j["verdicts"]["overgroup_dim"] = reg.overgroup.natural_dim.str();
  j["verdicts"]["regular_torus"] = reg.contains_regular_torus;
  j["verdicts"]["reason"] = to_string(reg.reason);
  return j.dump(2);
}

std::string regular_torus_report_text(SimpleType type, const Weight& lambda,
                                      Characteristic p) {
  auto reg = regular_torus_verdict(type, lambda, p);
  std::ostringstream out;
  out << to_string(type) << " [" << weight_str(lambda) << "] at p=" << p.p << ": overgroup "
      << to_string(reg.overgroup.series) << "_" << reg.overgroup.natural_dim
      << ", regular torus: " << (reg.contains_regular_torus ? "yes" : "no") << " ("
      << to_string(reg.reason) << ")\n";
  return out.str();
}

std::string element_report_json(SimpleType type, const TorusElement& t) {
  json j = base_report("element", type, nullptr, nullptr);
  json ev = json::array();
  for (const Unit& u : t.entries) ev.push_back(u.str());
  j["input"]["eigenvalues"] = ev;
  auto r = element_regularity(type, t);
  j["verdicts"]["regular_in_H"] = r.regular_in_H;
  j["verdicts"]["regular_in_GL"] = r.regular_in_GL;
  return j.dump(2);
}

std::string element_report_text(SimpleType type, const TorusElement& t) {
  auto r = element_regularity(type, t);
  std::ostringstream out;
  out << to_string(type) << " element (";
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    out << (i ? "," : "") << t.entries[i].str();
  out << "): regular in H: " << (r.regular_in_H ? "yes" : "no")
      << ", regular in GL: " << (r.regular_in_GL ? "yes" : "no") << "\n";
  return out.str();
}

std::string exceptional_report_json() {
  json j;
  j["schema_version"] = json_schema_version();
  j["input"]["command"] = "exceptional";
  json rows = json::array();
  for (const EmbeddingDatum& e : default_embedding_store().all()) {
    json r;
    r["H"] = to_string(e.H);
    std::string m;
    for (std::size_t i = 0; i < e.M.size(); ++i) m += (i ? "+" : "") + to_string(e.M[i]);
    r["M"] = m;
    r["p_condition"] = tables::render(e.p_cond);
    r["zero_weight_sum"] = zero_weight_sum(e).str();
    r["rank_H"] = e.H.rank;
    r["regular_torus"] = regular_torus_in_exceptional(e);
    r["expected"] = e.expected_regular;
    rows.push_back(r);
  }
  j["verdicts"]["embeddings"] = rows;
  return j.dump(2);
}

std::string exceptional_report_text() {
  std::ostringstream out;
  for (const EmbeddingDatum& e : default_embedding_store().all()) {
    std::string m;
    for (std::size_t i = 0; i < e.M.size(); ++i) m += (i ? "+" : "") + to_string(e.M[i]);
    Int sum = zero_weight_sum(e);
    bool reg = regular_torus_in_exceptional(e);
    out << m << " < " << to_string(e.H) << "  [" << tables::render(e.p_cond)
        << "]  zero-weight sum " << sum << " vs rank " << e.H.rank << "  -> regular torus: "
        << (reg ? "yes" : "no") << (reg == e.expected_regular ? "" : "  ** UNEXPECTED **")
        << "\n";
  }
  return out.str();
}

std::string verify_report_json(const VerifyReport& tables_report,
                               const VerifyReport& emb_report, const Int& max_dim) {
  json j;
  j["schema_version"] = json_schema_version();
  j["input"]["command"] = "verify-tables";
  j["input"]["max_dim"] = max_dim.str();
  auto dump = [](const VerifyReport& r) {
    json d;
    d["rows_checked"] = r.rows_checked;
    d["instances_checked"] = r.instances_checked;
    d["charp_only_rows"] = r.charp_only_rows;
    json mm = json::array();
    for (const auto& m : r.mismatches) mm.push_back(m.where + ": " + m.detail);
    d["mismatches"] = mm;
    d["notes"] = r.notes;
    return d;
  };
  j["verdicts"]["tables"] = dump(tables_report);
  j["verdicts"]["embeddings"] = dump(emb_report);
  j["verdicts"]["mismatch_count"] =
      tables_report.mismatches.size() + emb_report.mismatches.size();
  return j.dump(2);
}

std::string verify_report_text(const VerifyReport& tables_report,
                               const VerifyReport& emb_report, const Int& max_dim) {
  std::ostringstream out;
  out << "cross-verify up to dim " << max_dim << ": " << tables_report.rows_checked
      << " table rows, " << tables_report.instances_checked << " instances recomputed, "
      << tables_report.charp_only_rows << " char-p-only rows; " << emb_report.rows_checked
      << " embeddings checked\n";
  for (const auto& n : tables_report.notes) out << "  note " << n << "\n";
  for (const auto& m : tables_report.mismatches)
    out << "  MISMATCH " << m.where << ": " << m.detail << "\n";
  for (const auto& m : emb_report.mismatches)
    out << "  MISMATCH " << m.where << ": " << m.detail << "\n";
  out << (tables_report.clean() && emb_report.clean() ? "0 mismatches\n"
                                                      : "MISMATCHES FOUND\n");
  return out.str();
}

std::string sweep_report_json(const SweepReport& report) {
  json j;
  j["schema_version"] = json_schema_version();
  j["input"]["command"] = "sweep";
  json recs = json::array();
  for (const SweepRecord& r : report.records) {
    json e;
    e["type"] = to_string(r.type);
    e["lambda"] = weight_json(r.lambda);
    e["dim"] = r.dim.str();
    e["all_mult_one"] = r.all_mult_one;
    e["nonzero_mult_one"] = r.nonzero_mult_one;
    recs.push_back(e);
  }
  j["verdicts"]["weights_checked"] = report.weights_checked;
  j["verdicts"]["discrepancies"] = report.discrepancies;
  j["records"] = recs;
  return j.dump(2);
}

std::string sweep_report_text(const SweepReport& report) {
  std::ostringstream out;
  out << report.weights_checked << " dominant weights checked\n";
  for (const SweepRecord& r : report.records)
    if (r.nonzero_mult_one)
      out << "  " << to_string(r.type) << " [" << weight_str(r.lambda) << "] dim " << r.dim
          << (r.all_mult_one ? "  all-mult-one" : "  zero-mult-exception") << "\n";
  for (const auto& d : report.discrepancies) out << "  DISCREPANCY " << d << "\n";
  out << (report.clean() ? "0 discrepancies\n" : "DISCREPANCIES FOUND\n");
  return out.str();
}

}  // namespace rtk
