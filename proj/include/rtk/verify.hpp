#pragma once

#include <string>
#include <vector>

#include "rtk/embeddings.hpp"
#include "rtk/tables.hpp"
#include "rtk/weights.hpp"

namespace rtk {

struct VerifyReport {
  struct Mismatch {
    std::string where;   // "T3:line 42, C3 [0,0,1]"
    std::string detail;  // "dim: computed 14, row says 15"
  };
  long rows_checked = 0;
  long instances_checked = 0;
  long charp_only_rows = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;  // annotated rows encountered (errata etc.)
  bool clean() const { return mismatches.empty(); }
};

// Recomputes, for every table row admitting char-0 evaluation and every
// instance of weyl-dimension at most max_dim: the dimension, the form type,
// the zero multiplicity, and the regular-torus verdict, and diffs them
// against the stored row.
VerifyReport cross_verify(const tables::TableStore& store, const Int& max_dim,
                          int max_rank = 14);

// Exceptional-audit check: every embedding datum's zero-weight sum against
// rank(H) and against the expected flag.
VerifyReport verify_embeddings(const EmbeddingStore& embeddings,
                               const tables::TableStore& store);

struct SweepRecord {
  SimpleType type;
  Weight lambda;
  Int dim;
  bool all_mult_one = false;      // computed by Freudenthal
  bool nonzero_mult_one = false;  // computed by Freudenthal
  bool table_omega1 = false;      // char-0 reading of the tables
  bool table_omega2 = false;
};

struct SweepReport {
  std::vector<SweepRecord> records;     // canonical order
  std::vector<std::string> discrepancies;
  long weights_checked = 0;
  bool clean() const { return discrepancies.empty(); }
};

// Exhaustive char-0 classification over all dominant weights of the given
// types with weyl-dimension at most max_dim, cross-checked against the
// char-0 reading of the tables.  Parallel over weights when workers > 1.
SweepReport exhaustive_char0_sweep(const std::vector<SimpleType>& types, const Int& max_dim,
                                   int workers = 1);

std::vector<Weight> dominant_weights_up_to_dim(const RootDatum& datum, const Int& max_dim);

}  // namespace rtk
