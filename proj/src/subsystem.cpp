#include "rtk/subsystem.hpp"

#include <algorithm>
#include <map>

#include "rtk/errors.hpp"

namespace rtk {

namespace {

// Classify one connected component of the child diagram (nodes are indices
// into the basis).  The component is a simple diagram by construction.
SimpleType classify_component(const std::vector<std::vector<std::int64_t>>& cartan,
                              const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  if (m == 1) return {Family::A, 1};
  int triple = 0;
  std::pair<int, int> dbl{-1, -1};  // (i,j) with <b_i, b_j^vee> = -2
  std::vector<int> degree(nodes.size(), 0);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (a == b) continue;
      std::int64_t c = cartan[nodes[a]][nodes[b]];
      if (c != 0 && a < b) {
        ++degree[a];
        ++degree[b];
      }
      if (c == -2) dbl = {static_cast<int>(a), static_cast<int>(b)};
      if (c == -3) ++triple;
    }
  if (triple) return {Family::G, 2};
  if (dbl.first >= 0) {
    if (m == 4 && degree[dbl.first] == 2 && degree[dbl.second] == 2) return {Family::F, 4};
    // <b_i, b_j^vee> = -2 means b_j is short; propagate lengths across the
    // single edges, then one short root = B, one long root = C.  A bare
    // double edge is labelled by the order the roots were listed.
    std::vector<int> length(nodes.size(), 0);  // +1 long, -1 short
    length[dbl.first] = 1;
    length[dbl.second] = -1;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b) {
          if (a == b || length[b] != 0) continue;
          if (cartan[nodes[a]][nodes[b]] == -1 && cartan[nodes[b]][nodes[a]] == -1 &&
              length[a] != 0) {
            length[b] = length[a];
            changed = true;
          }
        }
    }
    int shorts = 0;
    for (int l : length) shorts += l < 0 ? 1 : 0;
    if (m == 2) return {length[0] < 0 ? Family::C : Family::B, 2};
    return {shorts == 1 ? Family::B : Family::C, m};
  }
  int branch = -1;
  for (std::size_t a = 0; a < nodes.size(); ++a)
    if (degree[a] == 3) branch = static_cast<int>(a);
  if (branch < 0) return {Family::A, m};
  std::vector<int> arms;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    if (static_cast<int>(a) == branch || cartan[nodes[a]][nodes[branch]] == 0) continue;
    int len = 1, prev = branch, cur = static_cast<int>(a);
    for (;;) {
      int next = -1;
      for (std::size_t b = 0; b < nodes.size(); ++b)
        if (static_cast<int>(b) != prev && static_cast<int>(b) != cur &&
            cartan[nodes[cur]][nodes[b]] != 0)
          next = static_cast<int>(b);
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {Family::D, m};
  return {Family::E, m};
}

}  // namespace

SubsystemBasis make_subsystem_basis(const RootDatum& parent,
                                    const std::vector<std::vector<std::int64_t>>& root_coords) {
  const int n = parent.rank();
  if (root_coords.empty() || root_coords.size() > static_cast<std::size_t>(n))
    throw invalid_basis("basis must list between 1 and rank roots");
  SubsystemBasis basis;
  basis.parent = &parent;
  for (const auto& rc : root_coords) {
    if (rc.size() != static_cast<std::size_t>(n))
      throw invalid_basis("root coordinates have wrong rank");
    bool found = false;
    for (const Root& r : parent.positive_roots()) {
      bool pos = std::equal(rc.begin(), rc.end(), r.sim.begin());
      bool neg = std::equal(rc.begin(), rc.end(), r.sim.begin(),
                            [](std::int64_t a, std::int64_t b) { return a == -b; });
      if (pos || neg) {
        Root chosen = r;
        if (neg) {
          for (auto& x : chosen.fund) x = -x;
          for (auto& x : chosen.sim) x = -x;
        }
        basis.roots.push_back(chosen);
        found = true;
        break;
      }
    }
    if (!found) throw invalid_basis("listed vector is not a parent root");
  }

  // linear independence over Q (fraction-free elimination on sim coords)
  {
    std::vector<std::vector<Rat>> m;
    for (const Root& r : basis.roots) {
      std::vector<Rat> row;
      for (auto x : r.sim) row.emplace_back(x);
      m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(n) && rank < m.size(); ++col) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][col] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[rank], m[piv]);
      for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
        if (r2 == rank || m[r2][col] == 0) continue;
        Rat f = m[r2][col] / m[rank][col];
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
          m[r2][j] -= f * m[rank][j];
      }
      ++rank;
    }
    if (rank != basis.roots.size()) throw invalid_basis("basis roots are linearly dependent");
  }

  const std::size_t k = basis.roots.size();
  basis.cartan.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      basis.cartan[i][j] = parent.coroot_pairing(basis.roots[i].fund, basis.roots[j]);
      if (i == j && basis.cartan[i][j] != 2)
        throw invalid_basis("diagonal pairing must be 2");
      if (i != j && basis.cartan[i][j] > 0)
        throw invalid_basis("positive off-diagonal pairing: not a simple system");
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::int64_t prod = basis.cartan[i][j] * basis.cartan[j][i];
      if (prod > 3 || (basis.cartan[i][j] == 0) != (basis.cartan[j][i] == 0))
        throw invalid_basis("invalid Cartan pairing between basis roots");
    }

  // connected components -> child types
  std::vector<bool> used(k, false);
  for (std::size_t s = 0; s < k; ++s) {
    if (used[s]) continue;
    std::vector<int> comp{static_cast<int>(s)};
    used[s] = true;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (std::size_t t = 0; t < k; ++t)
        if (!used[t] && basis.cartan[comp[q]][t] != 0) {
          used[t] = true;
          comp.push_back(static_cast<int>(t));
        }
    basis.child_types.push_back(classify_component(basis.cartan, comp));
  }
  return basis;
}

Weight restrict_weight(const SubsystemBasis& basis, const Weight& v) {
  if (v.size() != static_cast<std::size_t>(basis.parent->rank()))
    throw invalid_basis("weight has wrong rank for the parent");
  Weight out;
  for (const Root& beta : basis.roots) out.push_back(basis.parent->coroot_pairing(v, beta));
  return out;
}

Lemma44Report lemma44_audit(const SubsystemBasis& basis, const WeightMultiset& multiset) {
  std::map<Weight, Int> agg;
  std::map<Weight, std::vector<Weight>> witnesses;
  Lemma44Report report;
  for (const auto& [w, m] : multiset.expand()) {
    Weight child = restrict_weight(basis, w);
    agg[child] += m;
    auto& wit = witnesses[child];
    if (wit.size() < 8) wit.push_back(w);
    report.checked_dim += m;
  }
  for (auto& [child, m] : agg) {
    if (m < 2 || is_zero(child)) continue;
    report.offenders.push_back({child, m, witnesses[child]});
  }
  return report;
}

}  // namespace rtk
