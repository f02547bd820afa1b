#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtk/tables.hpp"
#include "rtk/weights.hpp"

namespace rtk {

// One composition factor of Lie(H) restricted to the product group M, given
// blockwise: either at Weyl-module weight level (zero multiplicity computed
// blockwise by Freudenthal) or as an irreducible with a stated zero
// multiplicity (external data, not re-derived here).
struct EmbeddingFactor {
  bool weyl_level = true;
  std::vector<Weight> blocks;  // one weight per M factor
  std::optional<Int> stated_m0;
};

struct EmbeddingDatum {
  SimpleType H;
  std::vector<SimpleType> M;
  tables::Condition p_cond;
  bool expected_regular = false;  // whether (M,H) is a tabulated regular-torus pair
  std::vector<EmbeddingFactor> factors;
  std::string note;
  int line_no = 0;
};

class EmbeddingStore {
 public:
  static EmbeddingStore load(const std::string& path);
  static EmbeddingStore parse_text(const std::string& text, bool verify_checksum = true);
  std::string serialize() const;
  std::uint64_t checksum() const;

  const std::vector<EmbeddingDatum>& all() const { return data_; }
  // Rows for (H, M) whose p-condition holds at p.
  std::vector<const EmbeddingDatum*> find(SimpleType H, std::vector<SimpleType> M,
                                          std::int64_t p) const;

 private:
  std::vector<std::string> lines_;
  std::vector<EmbeddingDatum> data_;
  std::uint64_t declared_checksum_ = 0;
};

std::string render_embedding(const EmbeddingDatum& e);

// Sum over the factors of the zero-weight multiplicities.
Int zero_weight_sum(const EmbeddingDatum& e);

// T_M is regular in H iff the dimension of its fixed space on Lie(H) equals
// the rank of H.
bool regular_torus_in_exceptional(const EmbeddingDatum& e);

const EmbeddingStore& default_embedding_store();

}  // namespace rtk
