#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "rtk/report.hpp"

using namespace rtk;
using nlohmann::json;

TEST_CASE("classify report round trips through its schema") {
  std::string s = classify_report_json({Family::C, 3}, Weight{0, 0, 1}, Characteristic(0));
  json j = json::parse(s);
  CHECK(j["schema_version"] == "rtk-report/1");
  CHECK(j["input"]["command"] == "classify");
  CHECK(j["input"]["type"] == "C3");
  CHECK(j["input"]["lambda"] == json::array({0, 0, 1}));
  CHECK(j["input"]["p"] == 0);
  CHECK(j["verdicts"]["in_omega1"] == true);
  CHECK(j["verdicts"]["form"] == "symplectic");
  CHECK(j["verdicts"]["overgroup"] == "Sp");
  CHECK(j["verdicts"]["overgroup_dim"] == "14");
  CHECK(j["verdicts"]["regular_torus"] == true);
  CHECK(j.contains("provenance"));
  // serialize -> parse -> serialize is stable
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("human and machine reports agree on the verdict fields") {
  SimpleType t{Family::G, 2};
  Weight lam{0, 1};
  Characteristic p(5);
  json j = json::parse(classify_report_json(t, lam, p));
  std::string text = classify_report_text(t, lam, p);
  CHECK(text.find("omega1: no") != std::string::npos);
  CHECK(text.find("omega2: yes") != std::string::npos);
  CHECK(j["verdicts"]["in_omega1"] == false);
  CHECK(j["verdicts"]["in_omega2"] == true);
  CHECK(text.find("regular torus: yes") != std::string::npos);
  CHECK(j["verdicts"]["regular_torus"] == true);
  CHECK(text.find("SO_even_14") != std::string::npos);
  CHECK(j["verdicts"]["overgroup"] == "SO_even");
}

TEST_CASE("weights report carries the multiset") {
  json j = json::parse(weights_report_json({Family::E, 8}, Weight{0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(j["verdicts"]["dim"] == "248");
  CHECK(j["verdicts"]["zero_mult"] == "8");
  CHECK(j["verdicts"]["dominant_orbits"] == 2);
  bool found_adjoint_orbit = false;
  for (const auto& e : j["multiset"])
    if (e["orbit"] == "240") found_adjoint_orbit = true;
  CHECK(found_adjoint_orbit);
}

TEST_CASE("element and exceptional reports") {
  json j = json::parse(
      element_report_json({Family::B, 2}, parse_torus_element({Family::B, 2}, "-1,2")));
  CHECK(j["verdicts"]["regular_in_H"] == true);
  CHECK(j["verdicts"]["regular_in_GL"] == false);

  json exc = json::parse(exceptional_report_json());
  int regular = 0, failing = 0;
  for (const auto& row : exc["verdicts"]["embeddings"]) {
    CHECK(row["regular_torus"] == row["expected"]);
    (row["regular_torus"] == true ? regular : failing)++;
  }
  CHECK(regular == 22);
  CHECK(failing == 4);
}

TEST_CASE("unsupported characteristic-p dimensions degrade gracefully") {
  json j = json::parse(classify_report_json({Family::A, 4}, Weight{0, 1, 0, 0},
                                            Characteristic(3)));
  CHECK(j["verdicts"]["in_omega1"] == true);
  CHECK(j["verdicts"]["overgroup"].is_null());
  CHECK(j["verdicts"].contains("note"));
}
