#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rtk/root_datum.hpp"
#include "rtk/simple_type.hpp"

namespace rtk::tables {

enum class TableId { T1, T2, T3, T4, T5, T6, T7, T8, TM2, TEXC, TPAIRS };

std::string to_string(TableId id);
std::optional<TableId> parse_table_id(const std::string& s);

// ---- tiny expression/condition language over the variables n,p,a,b,c,i ----

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
using Env = std::map<char, std::int64_t>;

ExprPtr parse_expr(const std::string& s);
std::string render(const ExprPtr& e);
bool mentions(const ExprPtr& e, char var);
// Exact evaluation; throws rtk::parse_error on inexact division.
Int eval_big(const ExprPtr& e, const Env& env);
std::int64_t eval(const ExprPtr& e, const Env& env);

struct Atom {
  enum class Kind { Cmp, Div, Ndiv } kind;
  std::string op;  // one of = != < <= > >= for Cmp
  ExprPtr lhs, rhs;
};

// Conjunction of disjunctions.  Char-0 conventions: "p >= a" and "p > a" hold
// at p = 0, "p = k" fails, "p div e" fails, and bounds with p on the right
// ("a < p") hold, matching the usual reading of p-conditions at characteristic
// zero.
struct Condition {
  std::vector<std::vector<Atom>> clauses;
  bool trivial() const { return clauses.empty(); }
};

Condition parse_condition(const std::string& s);
std::string render(const Condition& c);
bool eval(const Condition& c, const Env& env);  // env must contain 'p'
bool mentions_var(const Condition& c, char var);

// ---- weight patterns ----

struct Term {
  ExprPtr coef;   // may be null (coefficient 1)
  ExprPtr index;  // 1-based
};

struct WeightPattern {
  std::vector<Term> terms;
  Condition side;
  bool mentions_p = false;  // p occurs in a coefficient or index
  std::vector<char> free_vars;
};

struct DimPayload {
  enum class Tag { None, Char0, CharP, NotKnown } tag = Tag::None;
  ExprPtr expr;
};

struct M0Branch {
  ExprPtr value;
  std::optional<Condition> cond;
};

struct PairTarget {
  Family family;
  ExprPtr rank;  // in terms of n = rank of the ambient type
};

struct TableRow {
  TableId table;
  Family family;
  Condition rank_cond;
  std::vector<WeightPattern> weights;
  Condition p_cond;
  std::vector<M0Branch> m0;
  DimPayload dim;
  std::vector<SimpleType> exc_factors;     // TEXC
  std::optional<PairTarget> pair_target;   // TPAIRS
  std::string note;
  int line_no = 0;
};

struct MatchResult {
  const TableRow* row = nullptr;
  int pattern_index = -1;
  Env env;  // n, p and any bound pattern variables
};

class TableStore {
 public:
  static TableStore load(const std::string& path);
  static TableStore parse_text(const std::string& text, bool verify_checksum = true);

  std::string serialize() const;  // canonical form; byte-identical round trip
  std::uint64_t checksum() const;

  std::vector<const TableRow*> rows(TableId id) const;
  std::size_t table_count() const;
  std::size_t row_count(TableId id) const { return rows(id).size(); }
  const std::vector<TableRow>& all_rows() const { return all_rows_; }

  std::optional<MatchResult> match(TableId id, SimpleType t, const Weight& lambda,
                                   std::int64_t p) const;
  std::vector<MatchResult> match_all(TableId id, SimpleType t, const Weight& lambda,
                                     std::int64_t p) const;

  Int eval_m0(const MatchResult& m) const;
  // Dimension payload; respects the char-0/char-p validity tag.  nullopt when
  // the row carries no dimension usable at the match's characteristic.
  std::optional<Int> eval_dim(const MatchResult& m) const;

  bool exc_contains(SimpleType H, std::vector<SimpleType> M, std::int64_t p) const;
  std::vector<SimpleType> pair_subgroups(SimpleType H, std::int64_t p) const;

  // Enumerates the concrete char-0 instances of a row: all (type, lambda)
  // pairs with weyl-dim <= max_dim (per dim_fn), ranks capped at max_rank.
  // ignore_p_cond lets char-p-only rows be instantiated for checks (such as a
  // char-0-valid dimension entry) that do not depend on the characteristic.
  void for_each_char0_instance(
      const TableRow& row, int max_rank, const Int& max_dim,
      const std::function<Int(SimpleType, const Weight&)>& dim_fn,
      const std::function<void(SimpleType, const Weight&, int pattern_index, const Env&)>& fn,
      bool ignore_p_cond = false) const;

 private:
  std::vector<std::string> lines_;    // non-row lines verbatim; markers for row/checksum slots
  std::vector<TableRow> all_rows_;    // in file order
  std::map<TableId, std::vector<std::size_t>> by_table_;  // indices into all_rows_
  std::uint64_t declared_checksum_ = 0;

  friend std::string canonicalize_tables_text(const std::string&);
};

std::string render_row(const TableRow& row);

// Re-renders every row line in canonical form and refreshes the checksum
// header; used to keep the shipped data file byte-stable.
std::string canonicalize_tables_text(const std::string& text);

// Resolution order: RTK_TABLES_DIR environment variable, then the configured
// install/source data directory.
std::string default_tables_path();
std::string default_embeddings_path();
const TableStore& default_store();

// How classifier queries map onto the table labels: B2 is indexed as C2 with
// the nodes swapped, D3 as A3, and D4 queries are closed under the triality
// permutations of {w1, w3, w4} (the tables list one representative per
// graph-automorphism orbit).
std::vector<std::pair<SimpleType, Weight>> query_aliases(SimpleType t, const Weight& lambda);

}  // namespace rtk::tables
