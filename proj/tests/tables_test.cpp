#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "rtk/errors.hpp"
#include "rtk/tables.hpp"
#include "rtk/verify.hpp"
#include "rtk/weights.hpp"

using namespace rtk;
using namespace rtk::tables;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("canonical file loads with the expected shape") {
  const TableStore& store = default_store();
  CHECK(store.table_count() == 11);
  CHECK(store.row_count(TableId::T1) == 13);
  CHECK(store.row_count(TableId::T2) == 17);
  CHECK(store.row_count(TableId::T3) == 9);
  CHECK(store.row_count(TableId::T4) == 12);
  CHECK(store.row_count(TableId::T5) == 10);
  CHECK(store.row_count(TableId::T6) == 5);
  CHECK(store.row_count(TableId::T7) == 3);
  CHECK(store.row_count(TableId::T8) == 13);
  CHECK(store.row_count(TableId::TM2) == 13);
  CHECK(store.row_count(TableId::TEXC) == 18);
  CHECK(store.row_count(TableId::TPAIRS) == 10);
}

TEST_CASE("round trip is byte-identical") {
  std::string text = read_file(default_tables_path());
  TableStore store = TableStore::parse_text(text);
  CHECK(store.serialize() == text);
}

TEST_CASE("load failures are typed") {
  CHECK_THROWS_AS(TableStore::parse_text(""), parse_error);
  CHECK_THROWS_AS(TableStore::parse_text("garbage\n"), schema_mismatch);
  // tampered checksum
  std::string text = read_file(default_tables_path());
  auto pos = text.find("checksum ");
  std::string tampered = text;
  tampered[pos + 9] = tampered[pos + 9] == '0' ? '1' : '0';
  CHECK_THROWS_AS(TableStore::parse_text(tampered), schema_mismatch);
  // malformed row reports its line number
  try {
    TableStore::parse_text("rtk-tables 1\nchecksum 0\nrow T1 | bogus\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("expression language round trips and evaluates") {
  for (const std::string& s :
       {"a+1", "2*n+1", "(p^n-1)/2", "binom(n+1,(n+1)/2)", "n-gcd(2,n)", "2^(n-1)",
        "n*(p-1)/2%2"}) {
    CHECK(render(parse_expr(s)) == s);
  }
  Env env{{'n', 3}, {'p', 5}};
  CHECK(eval(parse_expr("(p^n-1)/2"), env) == 62);
  CHECK(eval(parse_expr("binom(n+1,(n+1)/2)"), env) == 6);
  CHECK(eval(parse_expr("n-gcd(2,n)"), env) == 2);
  CHECK_THROWS_AS(eval(parse_expr("n/2"), env), parse_error);  // inexact
}

TEST_CASE("condition evaluation and characteristic-zero conventions") {
  auto holds = [](const std::string& cond, std::int64_t n, std::int64_t p) {
    return eval(parse_condition(cond), Env{{'n', n}, {'p', p}});
  };
  CHECK(holds("p>3", 1, 0));  // char 0 passes p > a
  CHECK(holds("p>=19", 1, 0));
  CHECK_FALSE(holds("p=3", 1, 0));
  CHECK(holds("p!=3", 1, 0));
  CHECK(holds("p ndiv n+1", 3, 0));
  CHECK_FALSE(holds("p div n+1", 3, 0));
  CHECK(holds("p div n+1", 3, 2));
  CHECK_FALSE(holds("p ndiv n+1", 3, 2));
  CHECK(holds("n!=2 or p!=3", 2, 0));
  CHECK_FALSE(holds("n!=2 or p!=3", 2, 3));
  CHECK(holds("n%4=0 or n%4=3", 8, 0));
  CHECK_FALSE(holds("n%4=0 or n%4=3", 5, 0));
  // a joint condition with p cannot be asserted at characteristic zero
  CHECK_FALSE(holds("n*(p-1)/2%2=0", 2, 0));
  CHECK(holds("n*(p-1)/2%2=0", 2, 5));
  // bounds with p on the right hold at characteristic zero
  CHECK(eval(parse_condition("a<p"), Env{{'n', 1}, {'p', 0}, {'a', 100}}));
  CHECK(eval(parse_condition("c<=p-1"), Env{{'n', 1}, {'p', 0}, {'c', 100}}));
}

TEST_CASE("pattern matching binds free variables") {
  const TableStore& store = default_store();
  auto m = store.match(TableId::T1, {Family::C, 3}, Weight{0, 0, 1}, 7);
  REQUIRE(m.has_value());

  // A-type coefficient family c*w[i] + (p-1-c)*w[i+1]
  auto fam = store.match(TableId::T1, {Family::A, 4}, Weight{0, 3, 1, 0}, 5);
  REQUIRE(fam.has_value());
  CHECK(fam->env.at('c') == 3);
  CHECK(fam->env.at('i') == 2);

  // boundary instance c = p-1 collapses to a single node
  CHECK(store.match(TableId::T1, {Family::A, 4}, Weight{0, 4, 0, 0}, 5).has_value());
  CHECK_FALSE(store.match(TableId::T1, {Family::A, 4}, Weight{0, 3, 0, 0}, 5).has_value());

  // free coefficient rows at characteristic zero are unbounded
  CHECK(store.match(TableId::T1, {Family::A, 1}, Weight{123456}, 0).has_value());

  // rows whose weight mentions p are char-p only
  CHECK(store.match(TableId::T1, {Family::C, 2}, Weight{1, 2}, 7).has_value());
  CHECK_FALSE(store.match(TableId::T1, {Family::C, 2}, Weight{1, 2}, 0).has_value());
}

TEST_CASE("zero-multiplicity payload branches") {
  const TableStore& store = default_store();
  auto m = store.match(TableId::T2, {Family::C, 4}, Weight{0, 1, 0, 0}, 0);
  REQUIRE(m.has_value());
  CHECK(store.eval_m0(*m) == 3);  // n-1, generic branch
  m = store.match(TableId::T2, {Family::C, 4}, Weight{0, 1, 0, 0}, 2);
  REQUIRE(m.has_value());
  CHECK(store.eval_m0(*m) == 2);  // p | n branch
}

TEST_CASE("dimension payload respects validity tags") {
  const TableStore& store = default_store();
  auto m = store.match(TableId::T3, {Family::C, 3}, Weight{0, 0, 1}, 0);
  REQUIRE(m.has_value());
  CHECK(store.eval_dim(*m) == Int(14));
  // char-p-only dimension does not evaluate at p = 0 but does at its p
  auto spin = store.match(TableId::T8, {Family::C, 3}, Weight{0, 0, 1}, 2);
  REQUIRE(spin.has_value());
  CHECK(store.eval_dim(*spin) == Int(8));
  // the "not known" rows carry no numeric dimension
  auto nk = store.match(TableId::T5, {Family::A, 3}, Weight{0, 4, 0}, 5);
  REQUIRE(nk.has_value());
  CHECK_FALSE(store.eval_dim(*nk).has_value());
}

TEST_CASE("exceptional pair and unipotent pair lookups") {
  const TableStore& store = default_store();
  CHECK(store.exc_contains({Family::E, 8}, {{Family::G, 2}, {Family::F, 4}}, 0));
  CHECK(store.exc_contains({Family::E, 8}, {{Family::F, 4}, {Family::G, 2}}, 5));
  CHECK(store.exc_contains({Family::E, 7}, {{Family::A, 1}}, 19));
  CHECK_FALSE(store.exc_contains({Family::E, 7}, {{Family::A, 1}}, 17));
  CHECK_FALSE(store.exc_contains({Family::E, 8}, {{Family::B, 2}}, 7));
  CHECK(store.exc_contains({Family::F, 4}, {{Family::G, 2}}, 7));
  CHECK_FALSE(store.exc_contains({Family::F, 4}, {{Family::G, 2}}, 11));

  auto a6 = store.pair_subgroups({Family::A, 6}, 3);
  CHECK(std::find(a6.begin(), a6.end(), SimpleType{Family::G, 2}) != a6.end());
  CHECK(std::find(a6.begin(), a6.end(), SimpleType{Family::B, 3}) != a6.end());
  auto d5 = store.pair_subgroups({Family::D, 5}, 2);
  CHECK(d5 == std::vector<SimpleType>{{Family::B, 4}});
  auto a5 = store.pair_subgroups({Family::A, 5}, 2);  // G2 (p=2) and C3
  CHECK(std::find(a5.begin(), a5.end(), SimpleType{Family::G, 2}) != a5.end());
  CHECK(std::find(a5.begin(), a5.end(), SimpleType{Family::C, 3}) != a5.end());
}

TEST_CASE("query aliases: relabelling and triality closure") {
  auto b2 = query_aliases({Family::B, 2}, Weight{1, 2});
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].first == SimpleType{Family::C, 2});
  CHECK(b2[0].second == Weight{2, 1});

  auto d4 = query_aliases({Family::D, 4}, Weight{0, 0, 2, 0});
  CHECK(d4.size() == 3);  // distinct triality images of 2*w3
  bool has_2w1 = false;
  for (const auto& [t, w] : d4) has_2w1 |= (w == Weight{2, 0, 0, 0});
  CHECK(has_2w1);
  // invariant weights stay put
  CHECK(query_aliases({Family::D, 4}, Weight{0, 5, 0, 0}).size() == 1);
}

TEST_CASE("mult-2 table matches the zero-multiplicity-2 locus of the main table") {
  const TableStore& store = default_store();
  auto dim_fn = [](SimpleType t, const Weight& w) {
    return weyl_dimension(build_root_datum(t), w);
  };
  std::set<std::pair<SimpleType, Weight>> shapes;
  for (TableId id : {TableId::T2, TableId::TM2})
    for (const auto* row : store.rows(id))
      store.for_each_char0_instance(
          *row, 20, Int(1000000), dim_fn,
          [&](SimpleType t, const Weight& lam, int, const Env&) {
            shapes.insert({t, lam});
          },
          /*ignore_p_cond=*/true);
  CHECK(shapes.size() > 60);
  long hits = 0;
  for (const auto& [t, lam] : shapes) {
    for (std::int64_t p : {0, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      if (p != 0 && !is_p_restricted(lam, Characteristic(p))) continue;
      auto m2 = store.match(TableId::T2, t, lam, p);
      bool zero_mult_two = m2 && store.eval_m0(*m2) == 2;
      bool in_tm2 = store.match(TableId::TM2, t, lam, p).has_value();
      CAPTURE(to_string(t));
      CAPTURE(p);
      CHECK(zero_mult_two == in_tm2);
      if (in_tm2) ++hits;
    }
  }
  CHECK(hits > 10);
}

TEST_CASE("fault injection: one wrong dimension is flagged exactly once") {
  std::string text = read_file(default_tables_path());
  auto pos = text.find("dim0= 14");  // the 14-dimensional symplectic row
  REQUIRE(pos != std::string::npos);
  std::string bad = text.substr(0, pos) + "dim0= 15" + text.substr(pos + 8);
  bad = canonicalize_tables_text(bad);  // refresh the checksum
  TableStore store = TableStore::parse_text(bad);
  auto report = cross_verify(store, Int(100), 6);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].detail.find("computed 14") != std::string::npos);
}

TEST_CASE("max-dim zero verifies nothing") {
  auto report = cross_verify(default_store(), Int(0), 8);
  CHECK(report.instances_checked == 0);
  CHECK(report.clean());
}
