#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rtk/embeddings.hpp"
#include "rtk/errors.hpp"
#include "rtk/verify.hpp"

using namespace rtk;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const EmbeddingDatum& find_one(SimpleType H, std::vector<SimpleType> M, std::int64_t p) {
  auto rows = default_embedding_store().find(H, std::move(M), p);
  REQUIRE(rows.size() == 1);
  return *rows[0];
}

}  // namespace

TEST_CASE("embedding store loads and round trips") {
  const EmbeddingStore& store = default_embedding_store();
  CHECK(store.all().size() == 26);
  std::string text = read_file(tables::default_embeddings_path());
  CHECK(EmbeddingStore::parse_text(text).serialize() == text);

  CHECK_THROWS_AS(EmbeddingStore::parse_text(""), parse_error);
  auto pos = text.find("checksum ");
  std::string tampered = text;
  tampered[pos + 9] = tampered[pos + 9] == '0' ? '1' : '0';
  CHECK_THROWS_AS(EmbeddingStore::parse_text(tampered), schema_mismatch);
}

TEST_CASE("zero-weight sums of the stated restrictions") {
  CHECK(zero_weight_sum(find_one({Family::F, 4}, {{Family::A, 1}, {Family::G, 2}}, 5)) == 4);
  CHECK(zero_weight_sum(find_one({Family::F, 4}, {{Family::A, 1}, {Family::G, 2}}, 3)) == 4);
  CHECK(zero_weight_sum(find_one({Family::E, 8}, {{Family::B, 2}}, 5)) == 12);
  CHECK(zero_weight_sum(find_one({Family::E, 8}, {{Family::G, 2}, {Family::F, 4}}, 0)) == 8);
  CHECK(zero_weight_sum(find_one({Family::E, 6}, {{Family::A, 2}}, 5)) == 6);
  CHECK(zero_weight_sum(find_one({Family::E, 7}, {{Family::A, 1}, {Family::A, 1}}, 5)) == 7);
  CHECK(zero_weight_sum(find_one({Family::E, 7}, {{Family::G, 2}, {Family::C, 3}}, 0)) == 7);
  CHECK(zero_weight_sum(find_one({Family::E, 6}, {{Family::C, 4}}, 3)) == 6);
  CHECK(zero_weight_sum(find_one({Family::E, 6}, {{Family::F, 4}}, 2)) == 6);
}

TEST_CASE("regularity verdict equals the expected flag on every row") {
  for (const EmbeddingDatum& e : default_embedding_store().all()) {
    CAPTURE(e.line_no);
    CHECK(regular_torus_in_exceptional(e) == e.expected_regular);
  }
}

TEST_CASE("weyl-level rows have consistent total dimensions") {
  // sum over factors of the blockwise Weyl dimensions = dim Lie(H)
  std::map<Family, std::map<int, Int>> lie_dim;
  auto dim_of = [](SimpleType t) {
    return Int(2 * positive_root_count(t) + t.rank);
  };
  long rows = 0;
  for (const EmbeddingDatum& e : default_embedding_store().all()) {
    bool all_weyl = true;
    for (const auto& f : e.factors) all_weyl &= f.weyl_level;
    if (!all_weyl) continue;
    Int total = 0;
    for (const auto& f : e.factors) {
      Int d = 1;
      for (std::size_t b = 0; b < f.blocks.size(); ++b)
        d *= weyl_dimension(build_root_datum(e.M[b]), f.blocks[b]);
      total += d;
    }
    CAPTURE(e.line_no);
    CHECK(total == dim_of(e.H));
    ++rows;
  }
  CHECK(rows >= 15);
}

TEST_CASE("adjoint-only data sums to the rank at weyl level") {
  auto adjoint = [](SimpleType t) -> Weight {
    const RootDatum& d = build_root_datum(t);
    return d.highest_root().fund;
  };
  for (SimpleType t : std::vector<SimpleType>{{Family::A, 4},
                                              {Family::B, 3},
                                              {Family::C, 5},
                                              {Family::D, 6},
                                              {Family::E, 7},
                                              {Family::F, 4},
                                              {Family::G, 2}}) {
    EmbeddingDatum e;
    e.H = t;
    e.M = {t};
    e.expected_regular = true;
    EmbeddingFactor f;
    f.weyl_level = true;
    f.blocks = {adjoint(t)};
    e.factors = {f};
    CAPTURE(to_string(t));
    CHECK(zero_weight_sum(e) == t.rank);
    CHECK(regular_torus_in_exceptional(e));
  }
}

TEST_CASE("irreducible factors without stated data are rejected") {
  EmbeddingDatum e;
  e.H = {Family::G, 2};
  e.M = {{Family::A, 1}};
  EmbeddingFactor f;
  f.weyl_level = false;
  f.blocks = {Weight{2}};
  e.factors = {f};
  CHECK_THROWS_AS(zero_weight_sum(e), missing_stated_multiplicity);
}

TEST_CASE("embedding data is consistent with the exceptional pair table") {
  auto report = verify_embeddings(default_embedding_store(), tables::default_store());
  for (const auto& m : report.mismatches) {
    CAPTURE(m.where + ": " + m.detail);
    CHECK(false);
  }
  CHECK(report.rows_checked == 26);
}
