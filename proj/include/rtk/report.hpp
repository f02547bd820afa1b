#pragma once

#include <string>

#include "rtk/embeddings.hpp"
#include "rtk/omega.hpp"
#include "rtk/torus_element.hpp"
#include "rtk/verify.hpp"

namespace rtk {

// Structured reports shared by the CLI and the python module.  The JSON
// schema is versioned "rtk-report/1": top-level keys schema_version, input,
// verdicts, and where applicable multiset and provenance.

std::string json_schema_version();

std::string weights_report_json(SimpleType type, const Weight& lambda);
std::string weights_report_text(SimpleType type, const Weight& lambda);

std::string classify_report_json(SimpleType type, const Weight& lambda, Characteristic p);
std::string classify_report_text(SimpleType type, const Weight& lambda, Characteristic p);

std::string forms_report_json(SimpleType type, const Weight& lambda, Characteristic p);
std::string forms_report_text(SimpleType type, const Weight& lambda, Characteristic p);

std::string regular_torus_report_json(SimpleType type, const Weight& lambda, Characteristic p);
std::string regular_torus_report_text(SimpleType type, const Weight& lambda, Characteristic p);

std::string element_report_json(SimpleType type, const TorusElement& t);
std::string element_report_text(SimpleType type, const TorusElement& t);

std::string exceptional_report_json();
std::string exceptional_report_text();

std::string verify_report_json(const VerifyReport& tables_report,
                               const VerifyReport& emb_report, const Int& max_dim);
std::string verify_report_text(const VerifyReport& tables_report,
                               const VerifyReport& emb_report, const Int& max_dim);

std::string sweep_report_json(const SweepReport& report);
std::string sweep_report_text(const SweepReport& report);

}  // namespace rtk
