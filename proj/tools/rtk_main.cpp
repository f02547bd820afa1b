// rtk: exact root-system and highest-weight calculator with regular-torus
// classification against the shipped reference tables.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rtk/errors.hpp"
#include "rtk/report.hpp"
#include "rtk/tables.hpp"

namespace {

rtk::Weight parse_lambda(const std::string& csv, const std::string& name, int rank) {
  rtk::Weight w;
  if (!name.empty()) {
    if (name.size() < 2 || name[0] != 'w')
      throw rtk::parse_error("--weight-name expects wN, got '" + name + "'");
    int idx = std::stoi(name.substr(1));
    if (idx < 1 || idx > rank) throw rtk::index_out_of_range("weight index out of range");
    w.assign(static_cast<std::size_t>(rank), 0);
    w[static_cast<std::size_t>(idx - 1)] = 1;
    return w;
  }
  std::stringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) w.push_back(std::stoll(tok));
  if (w.size() != static_cast<std::size_t>(rank))
    throw rtk::parse_error("lambda must have " + std::to_string(rank) + " coordinates");
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weight calculus and regular-torus classification"};
  app.require_subcommand(1);

  std::string type_str, lambda_str, weight_name, out_path;
  std::int64_t p_val = 0;
  bool as_json = false;
  std::string max_dim_str = "5000";
  int workers = 1;
  std::string types_csv = "A1,A2,A3,A4,A5,A6,B2,B3,B4,C2,C3,C4,D4,F4,G2";
  std::string eigen_csv;

  auto add_common = [&](CLI::App* cmd, bool with_lambda) {
    cmd->add_option("--type", type_str, "simple type, e.g. C3")->required();
    if (with_lambda) {
      cmd->add_option("--lambda", lambda_str, "comma-separated fundamental coordinates");
      cmd->add_option("--weight-name", weight_name, "fundamental weight shorthand, e.g. w3");
      cmd->add_option("--p", p_val, "characteristic (0 or a prime)")->default_val(0);
    }
    cmd->add_flag("--json", as_json, "emit the rtk-report/1 JSON schema");
    cmd->add_option("--output", out_path, "write the report to a file");
  };

  auto* weights = app.add_subcommand("weights", "weight multiset of an irreducible module");
  add_common(weights, true);
  auto* classify = app.add_subcommand("classify", "omega membership and regular-torus verdict");
  add_common(classify, true);
  auto* forms = app.add_subcommand("forms", "self-duality and form type");
  add_common(forms, true);
  auto* regular = app.add_subcommand("regular-torus", "regular-torus verdict only");
  add_common(regular, true);

  auto* element = app.add_subcommand("element", "semisimple element regularity");
  element->add_option("--type", type_str)->required();
  element->add_option("--eigenvalues", eigen_csv, "t_1,...,t_m (exact rationals, '@' rotation)")
      ->required();
  element->add_flag("--json", as_json);
  element->add_option("--output", out_path);

  auto* exceptional = app.add_subcommand("exceptional", "audit the exceptional embeddings");
  exceptional->add_flag("--json", as_json);
  exceptional->add_option("--output", out_path);

  auto* verify = app.add_subcommand("verify-tables", "recompute every table row");
  verify->add_option("--max-dim", max_dim_str, "instance dimension cap")->default_val("5000");
  verify->add_flag("--json", as_json);
  verify->add_option("--output", out_path);

  auto* sweep = app.add_subcommand("sweep", "exhaustive char-0 classification sweep");
  sweep->add_option("--types", types_csv, "comma-separated list of simple types");
  sweep->add_option("--max-dim", max_dim_str)->default_val("4000");
  sweep->add_option("--workers", workers, "worker thread count")->default_val(1);
  sweep->add_flag("--json", as_json);
  sweep->add_option("--output", out_path);

  auto* canon = app.add_subcommand("canonicalize-tables",
                                   "rewrite a tables file in canonical form");
  std::string canon_path;
  canon->add_option("path", canon_path)->required();

  CLI11_PARSE(app, argc, argv);

  auto emit = [&](const std::string& text, int code) {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << text;
    }
    return code;
  };

  try {
    if (canon->parsed()) {
      std::ifstream in(canon_path, std::ios::binary);
      if (!in) throw rtk::parse_error("cannot open " + canon_path);
      std::stringstream ss;
      ss << in.rdbuf();
      std::string text = ss.str(), out;
      if (text.rfind("rtk-embeddings", 0) == 0)
        out = rtk::EmbeddingStore::parse_text(text, /*verify_checksum=*/false).serialize();
      else
        out = rtk::tables::canonicalize_tables_text(text);
      std::ofstream f(canon_path, std::ios::binary);
      f << out;
      return 0;
    }

    if (exceptional->parsed())
      return emit(as_json ? rtk::exceptional_report_json() : rtk::exceptional_report_text(),
                  0);

    if (verify->parsed()) {
      rtk::Int max_dim(max_dim_str);
      auto tr = rtk::cross_verify(rtk::tables::default_store(), max_dim);
      auto er = rtk::verify_embeddings(rtk::default_embedding_store(),
                                       rtk::tables::default_store());
      int code = tr.clean() && er.clean() ? 0 : 1;
      return emit(as_json ? rtk::verify_report_json(tr, er, max_dim)
                          : rtk::verify_report_text(tr, er, max_dim),
                  code);
    }

    if (sweep->parsed()) {
      rtk::Int max_dim(max_dim_str);
      std::vector<rtk::SimpleType> types;
      std::stringstream in(types_csv);
      std::string tok;
      while (std::getline(in, tok, ',')) types.push_back(rtk::parse_simple_type(tok));
      auto rep = rtk::exhaustive_char0_sweep(types, max_dim, workers);
      int code = rep.clean() ? 0 : 1;
      return emit(as_json ? rtk::sweep_report_json(rep) : rtk::sweep_report_text(rep), code);
    }

    rtk::SimpleType type = rtk::parse_simple_type(type_str);

    if (element->parsed()) {
      rtk::TorusElement t = rtk::parse_torus_element(type, eigen_csv);
      return emit(as_json ? rtk::element_report_json(type, t)
                          : rtk::element_report_text(type, t),
                  0);
    }

    rtk::Weight lambda = parse_lambda(lambda_str, weight_name, type.rank);
    rtk::Characteristic p(p_val);
    if (weights->parsed())
      return emit(as_json ? rtk::weights_report_json(type, lambda)
                          : rtk::weights_report_text(type, lambda),
                  0);
    if (classify->parsed())
      return emit(as_json ? rtk::classify_report_json(type, lambda, p)
                          : rtk::classify_report_text(type, lambda, p),
                  0);
    if (forms->parsed())
      return emit(as_json ? rtk::forms_report_json(type, lambda, p)
                          : rtk::forms_report_text(type, lambda, p),
                  0);
    if (regular->parsed())
      return emit(as_json ? rtk::regular_torus_report_json(type, lambda, p)
                          : rtk::regular_torus_report_text(type, lambda, p),
                  0);
  } catch (const rtk::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
