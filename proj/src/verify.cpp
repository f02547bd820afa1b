#include "rtk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "rtk/duality.hpp"
#include "rtk/errors.hpp"
#include "rtk/omega.hpp"

namespace rtk {

namespace {

std::string weight_str(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

std::string instance_name(const tables::TableRow& row, SimpleType t, const Weight& lam) {
  return tables::to_string(row.table) + ":line " + std::to_string(row.line_no) + ", " +
         to_string(t) + " " + weight_str(lam);
}

bool row_is_charp_only(const tables::TableRow& row) {
  // no instance can be produced at p = 0: every pattern mentions p, or the
  // p-condition cannot hold at characteristic zero
  tables::Env env{{'n', 0}, {'p', 0}};
  bool pcond_possible = false;
  for (int n = 1; n <= 20 && !pcond_possible; ++n) {
    env['n'] = n;
    if (tables::eval(row.p_cond, env)) pcond_possible = true;
  }
  if (!pcond_possible) return true;
  if (row.weights.empty()) return false;
  return std::all_of(row.weights.begin(), row.weights.end(),
                     [](const tables::WeightPattern& w) { return w.mentions_p; });
}

}  // namespace

VerifyReport cross_verify(const tables::TableStore& store, const Int& max_dim, int max_rank) {
  VerifyReport report;
  auto dim_fn = [](SimpleType t, const Weight& w) {
    return weyl_dimension(build_root_datum(t), w);
  };
  using tables::TableId;
  const Characteristic p0(0);

  for (TableId id : {TableId::T1, TableId::T2, TableId::T3, TableId::T4, TableId::T5,
                     TableId::T6, TableId::T7, TableId::T8, TableId::TM2}) {
    for (const tables::TableRow* row : store.rows(id)) {
      ++report.rows_checked;
      if (!row->note.empty())
        report.notes.push_back(tables::to_string(id) + ":line " +
                               std::to_string(row->line_no) + ": " + row->note);
      const bool charp_only = row_is_charp_only(*row);
      if (charp_only) {
        ++report.charp_only_rows;
        if (row->dim.tag != tables::DimPayload::Tag::Char0) continue;
        // char-p row whose dimension equals the char-0 Weyl dimension: that
        // single claim is still recomputable
      }
      store.for_each_char0_instance(
          *row, max_rank, max_dim, dim_fn,
          [&](SimpleType t, const Weight& lam, int pattern_index, const tables::Env& env) {
            (void)pattern_index;
            ++report.instances_checked;
            const RootDatum& datum = build_root_datum(t);
            auto fail = [&](const std::string& what) {
              report.mismatches.push_back({instance_name(*row, t, lam), what});
            };
            try {
              // dimension payload
              if (row->dim.tag == tables::DimPayload::Tag::Char0) {
                Int expect = tables::eval_big(row->dim.expr, env);
                Int got = weyl_dimension(datum, lam);
                if (got != expect)
                  fail("dim: computed " + got.str() + ", row says " + expect.str());
              }
              if (charp_only) return;  // only the dim claim applies
              auto ms = weight_multiset(datum, lam);
              switch (id) {
                case TableId::T1:
                  if (!ms->all_multiplicities_one()) fail("not all multiplicities are 1");
                  break;
                case TableId::T2: {
                  if (!ms->nonzero_multiplicities_one())
                    fail("a nonzero weight has multiplicity > 1");
                  if (ms->all_multiplicities_one())
                    fail("all multiplicities 1: belongs to the first table");
                  tables::MatchResult m{row, pattern_index, env};
                  Int expect = store.eval_m0(m);
                  Int got = ms->zero_multiplicity();
                  if (got != expect)
                    fail("zero mult: computed " + got.str() + ", row says " + expect.str());
                  break;
                }
                case TableId::T3: {
                  if (steinberg_indicator(datum, lam) != Indicator::Symplectic)
                    fail("indicator is not symplectic");
                  auto verdict = regular_torus_verdict(t, lam, p0);
                  if (!verdict.contains_regular_torus) fail("expected a regular torus");
                  break;
                }
                case TableId::T4: {
                  if (steinberg_indicator(datum, lam) != Indicator::Orthogonal)
                    fail("indicator is not orthogonal");
                  if (ms->total_dim() % 2 != 0) fail("dimension is odd");
                  if (ms->zero_multiplicity() > 2) fail("zero multiplicity exceeds 2");
                  auto verdict = regular_torus_verdict(t, lam, p0);
                  if (!verdict.contains_regular_torus) fail("expected a regular torus");
                  break;
                }
                case TableId::T5: {
                  if (steinberg_indicator(datum, lam) != Indicator::Orthogonal)
                    fail("indicator is not orthogonal");
                  if (ms->total_dim() % 2 != 1) fail("dimension is even");
                  if (!ms->all_multiplicities_one()) fail("not all multiplicities are 1");
                  break;
                }
                case TableId::T6: {
                  if (is_self_dual(datum, lam)) fail("weight is self-dual");
                  if (!ms->all_multiplicities_one()) fail("not all multiplicities are 1");
                  break;
                }
                case TableId::TM2: {
                  if (ms->zero_multiplicity() != 2) fail("zero multiplicity is not 2");
                  if (!ms->nonzero_multiplicities_one())
                    fail("a nonzero weight has multiplicity > 1");
                  break;
                }
                default: break;
              }
            } catch (const error& e) {
              fail(std::string("error: ") + e.what());
            }
          },
          /*ignore_p_cond=*/charp_only);
    }
  }
  return report;
}

VerifyReport verify_embeddings(const EmbeddingStore& embeddings,
                               const tables::TableStore& store) {
  VerifyReport report;
  for (const EmbeddingDatum& e : embeddings.all()) {
    ++report.rows_checked;
    if (!e.note.empty())
      report.notes.push_back("emb:line " + std::to_string(e.line_no) + ": " + e.note);
    std::string name = "emb:line " + std::to_string(e.line_no) + ", " + to_string(e.H);
    try {
      Int sum = zero_weight_sum(e);
      bool regular = regular_torus_in_exceptional(e);
      ++report.instances_checked;
      if (regular != e.expected_regular)
        report.mismatches.push_back(
            {name, "zero-weight sum " + sum.str() + " vs rank " + std::to_string(e.H.rank) +
                       " contradicts the expected flag"});
      // a regular pair must appear among the tabulated exceptional pairs
      if (e.expected_regular) {
        // sample characteristics allowed by the row's p-condition
        for (std::int64_t p : {0LL, 2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL,
                               31LL, 37LL}) {
          tables::Env env{{'n', e.H.rank}, {'p', p}};
          if (!tables::eval(e.p_cond, env)) continue;
          if (!store.exc_contains(e.H, e.M, p))
            report.mismatches.push_back(
                {name, "pair not tabulated at p=" + std::to_string(p)});
        }
      }
    } catch (const error& err) {
      report.mismatches.push_back({name, std::string("error: ") + err.what()});
    }
  }
  return report;
}

std::vector<Weight> dominant_weights_up_to_dim(const RootDatum& datum, const Int& max_dim) {
  std::vector<Weight> out;
  const int n = datum.rank();
  Weight w(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> rec = [&](int j) -> bool {
    if (j == n) {
      if (weyl_dimension(datum, w) > max_dim) return false;
      out.push_back(w);
      return true;
    }
    for (w[static_cast<std::size_t>(j)] = 0;; ++w[static_cast<std::size_t>(j)]) {
      if (!rec(j + 1)) break;
    }
    bool any = w[static_cast<std::size_t>(j)] > 0;
    w[static_cast<std::size_t>(j)] = 0;
    return any;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

SweepReport exhaustive_char0_sweep(const std::vector<SimpleType>& types, const Int& max_dim,
                                   int workers) {
  SweepReport report;
  const Characteristic p0(0);
  for (SimpleType t : types) {
    const RootDatum& datum = build_root_datum(t);
    std::vector<Weight> weights = dominant_weights_up_to_dim(datum, max_dim);
    std::vector<SweepRecord> records(weights.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= weights.size()) return;
        const Weight& lam = weights[i];
        SweepRecord r;
        r.type = t;
        r.lambda = lam;
        if (is_zero(lam)) {
          records[i] = r;
          continue;
        }
        auto ms = weight_multiset(datum, lam);
        r.dim = ms->total_dim();
        r.all_mult_one = ms->all_multiplicities_one();
        r.nonzero_mult_one = ms->nonzero_multiplicities_one();
        r.table_omega1 = omega1_membership(t, lam, p0);
        auto v = omega2_membership(t, lam, p0);
        r.table_omega2 = v.in_omega2;
        records[i] = r;
      }
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int k = 0; k < workers; ++k) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
      const SweepRecord& r = records[i];
      if (is_zero(r.lambda)) continue;
      ++report.weights_checked;
      if (r.all_mult_one != r.table_omega1)
        report.discrepancies.push_back(
            to_string(t) + " " + weight_str(r.lambda) + ": all-mult-one=" +
            (r.all_mult_one ? "yes" : "no") + " but first-table reading says " +
            (r.table_omega1 ? "yes" : "no"));
      if (r.nonzero_mult_one != r.table_omega2)
        report.discrepancies.push_back(
            to_string(t) + " " + weight_str(r.lambda) + ": nonzero-mult-one=" +
            (r.nonzero_mult_one ? "yes" : "no") + " but table reading says " +
            (r.table_omega2 ? "yes" : "no"));
      report.records.push_back(r);
    }
  }
  return report;
}

}  // namespace rtk
