#include "rtk/root_datum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "rtk/errors.hpp"

namespace rtk {

namespace {

std::vector<std::vector<int>> make_cartan(SimpleType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> C(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) C[i][i] = 2;
  auto link = [&](int i, int j) { C[i][j] = C[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      C[n - 2][n - 1] = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      C[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E: {
      // chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
      std::vector<int> chain = {0, 2, 3, 4, 5, 6, 7};
      chain.resize(static_cast<std::size_t>(n - 1));
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) link(chain[k], chain[k + 1]);
      link(1, 3);
      break;
    }
    case Family::F:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      C[1][2] = -2;
      break;
    case Family::G:
      C[0][1] = -1;
      C[1][0] = -3;
      break;
  }
  return C;
}

// scale * (alpha_j, alpha_j)/2, long roots normalized to squared length 2
std::pair<std::int64_t, std::vector<std::int64_t>> make_scaled_d(SimpleType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A:
    case Family::D:
    case Family::E: return {1, std::vector<std::int64_t>(n, 1)};
    case Family::B: {
      std::vector<std::int64_t> d(n, 2);
      d[n - 1] = 1;
      return {2, d};
    }
    case Family::C: {
      std::vector<std::int64_t> d(n, 1);
      d[n - 1] = 2;
      return {2, d};
    }
    case Family::F: return {2, {2, 2, 1, 1}};
    case Family::G: return {3, {1, 3}};
  }
  return {1, {}};
}

// Ambient simple-root realizations per the Bourbaki planches.
std::vector<std::vector<Rat>> make_ambient(SimpleType t) {
  const int n = t.rank;
  auto e = [](int dim, int i) {
    std::vector<Rat> v(static_cast<std::size_t>(dim), Rat(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto diff = [&](int dim, int i, int j) {
    auto v = e(dim, i);
    v[static_cast<std::size_t>(j)] = -1;
    return v;
  };
  std::vector<std::vector<Rat>> r;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) r.push_back(diff(n + 1, i, i + 1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) r.push_back(diff(n, i, i + 1));
      r.push_back(e(n, n - 1));
      break;
    case Family::C: {
      for (int i = 0; i + 1 < n; ++i) r.push_back(diff(n, i, i + 1));
      auto v = e(n, n - 1);
      v[static_cast<std::size_t>(n - 1)] = 2;
      r.push_back(v);
      break;
    }
    case Family::D: {
      for (int i = 0; i + 1 < n; ++i) r.push_back(diff(n, i, i + 1));
      auto v = e(n, n - 2);
      v[static_cast<std::size_t>(n - 1)] = 1;
      r.push_back(v);
      break;
    }
    case Family::E: {
      r.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2),
                   Rat(-1, 2), Rat(1, 2)});
      auto a2 = e(8, 0);
      a2[1] = 1;
      r.push_back(a2);
      r.push_back(diff(8, 1, 0));
      for (int i = 2; i < n; ++i) r.push_back(diff(8, i, i - 1));
      break;
    }
    case Family::F:
      r = {diff(4, 1, 2), diff(4, 2, 3), e(4, 3),
           {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}};
      break;
    case Family::G:
      r = {diff(3, 0, 1), {Rat(-2), Rat(1), Rat(1)}};
      break;
  }
  return r;
}

// Rational matrix inverse by Gaussian elimination (cartan matrices, rank <= 8).
std::vector<std::vector<Rat>> invert(const std::vector<std::vector<int>>& M) {
  const std::size_t n = M.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    std::swap(a[col], a[piv]);
    Rat pv = a[col][col];
    for (auto& x : a[col]) x /= pv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootDatum::RootDatum(SimpleType t) : type_(t), rank_(t.rank) {
  cartan_ = make_cartan(t);
  auto [scale, d] = make_scaled_d(t);
  scale_ = scale;
  scaled_d_ = d;

  // positive roots: closure of the simple roots under simple reflections,
  // tracked in both fundamental and simple-root coordinates
  const int n = rank_;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<Root> frontier;
  for (int j = 0; j < n; ++j) {
    Root r;
    r.fund.assign(static_cast<std::size_t>(n), 0);
    r.sim.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) r.fund[i] = cartan_[j][i];
    r.sim[static_cast<std::size_t>(j)] = 1;
    r.height = 1;
    frontier.push_back(r);
    seen.insert(r.sim);
  }
  std::vector<Root> all = frontier;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int j = 0; j < n; ++j) {
        Root s = r;
        std::int64_t c = r.fund[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        for (int i = 0; i < n; ++i) s.fund[i] -= c * cartan_[j][i];
        s.sim[static_cast<std::size_t>(j)] -= c;
        if (std::any_of(s.sim.begin(), s.sim.end(), [](std::int64_t x) { return x < 0; }))
          continue;
        s.height = 0;
        for (auto x : s.sim) s.height += static_cast<int>(x);
        if (seen.insert(s.sim).second) {
          next.push_back(s);
          all.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  for (Root& r : all) {
    std::int64_t hn = 0;
    for (int j = 0; j < n; ++j) hn += r.sim[static_cast<std::size_t>(j)] * scaled_d_[j] *
                                       r.fund[static_cast<std::size_t>(j)];
    r.scaled_halfnorm = hn / 2;
  }
  std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.sim < b.sim;
  });
  positive_ = std::move(all);

  sr_ambient_ = make_ambient(t);
  auto inv = invert(cartan_);
  const std::size_t dim = sr_ambient_[0].size();
  fw_ambient_.assign(static_cast<std::size_t>(n), std::vector<Rat>(dim, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (std::size_t x = 0; x < dim; ++x)
        fw_ambient_[i][x] += inv[i][k] * sr_ambient_[k][x];
}

const RootDatum& RootDatum::get(SimpleType t) {
  validate(t);
  if (t.family == Family::D && t.rank == 3) t = {Family::A, 3};
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::unique_ptr<RootDatum>(new RootDatum(t))).first;
  return *it->second;
}

const RootDatum& build_root_datum(SimpleType t) { return RootDatum::get(t); }

std::int64_t RootDatum::scaled_form(const Weight& v,
                                    const std::vector<std::int64_t>& root_sim) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j)
    s += root_sim[static_cast<std::size_t>(j)] * scaled_d_[j] * v[static_cast<std::size_t>(j)];
  return s;
}

std::int64_t RootDatum::coroot_pairing(const Weight& v, const Root& alpha) const {
  return scaled_form(v, alpha.sim) / alpha.scaled_halfnorm;
}

std::int64_t RootDatum::coroot_sum_pairing(const Weight& v) const {
  std::int64_t s = 0;
  for (const Root& r : positive_) s += coroot_pairing(v, r);
  return s;
}

bool RootDatum::in_root_lattice(const Weight& v) const {
  // v = sum_j b_j alpha_j  <=>  (C^T) b = v has an integer solution
  static std::mutex mu;
  static std::map<SimpleType, std::vector<std::vector<Rat>>> inv_cache;
  const std::vector<std::vector<Rat>>* inv;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = inv_cache.find(type_);
    if (it == inv_cache.end()) it = inv_cache.emplace(type_, invert(cartan_)).first;
    inv = &it->second;
  }
  for (int j = 0; j < rank_; ++j) {
    Rat b = 0;
    for (int i = 0; i < rank_; ++i) b += (*inv)[i][j] * v[static_cast<std::size_t>(i)];
    if (denominator(b) != 1) return false;
  }
  return true;
}

bool is_dominant(const Weight& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

bool is_zero(const Weight& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

Weight reflect(const RootDatum& datum, int w_index, const Weight& v) {
  if (w_index < 1 || w_index > datum.rank())
    throw index_out_of_range("reflection index " + std::to_string(w_index));
  const int j = w_index - 1;
  Weight r = v;
  std::int64_t c = v[static_cast<std::size_t>(j)];
  for (int i = 0; i < datum.rank(); ++i) r[i] -= c * datum.cartan()[j][i];
  return r;
}

DominantRep dominant_representative(const RootDatum& datum, const Weight& v) {
  Weight w = v;
  const int n = datum.rank();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j < n; ++j) {
      if (w[static_cast<std::size_t>(j)] < 0) {
        std::int64_t c = w[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) w[i] -= c * datum.cartan()[j][i];
        moved = true;
      }
    }
  }
  DominantRep out;
  out.weight = std::move(w);
  for (int i = 0; i < n; ++i)
    if (out.weight[static_cast<std::size_t>(i)] == 0) out.stabilizer_generators.insert(i + 1);
  return out;
}

namespace {

// Classifies a connected full subdiagram (given by node list) of the parent
// diagram and returns its Weyl order.  Only shapes embeddable in a simple
// diagram can occur.
Int component_weyl_order(const std::vector<std::vector<int>>& cartan,
                         const std::vector<int>& nodes) {
  const std::size_t m = nodes.size();
  if (m == 1) return 2;  // A1
  int double_edges = 0, triple_edges = 0;
  std::vector<int> degree(m, 0);
  std::pair<int, int> multi_edge{-1, -1};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      int prod = cartan[nodes[a]][nodes[b]] * cartan[nodes[b]][nodes[a]];
      if (prod > 0) {
        ++degree[a];
        ++degree[b];
        if (prod == 2) {
          ++double_edges;
          multi_edge = {static_cast<int>(a), static_cast<int>(b)};
        }
        if (prod == 3) ++triple_edges;
      }
    }
  auto fact = [](std::size_t k) {
    Int r = 1;
    for (std::size_t i = 2; i <= k; ++i) r *= i;
    return r;
  };
  if (triple_edges) return 12;  // G2
  if (double_edges) {
    // F4 iff both endpoints of the double edge have a further neighbour
    if (m == 4 && degree[multi_edge.first] == 2 && degree[multi_edge.second] == 2) return 1152;
    return fact(m) * int_pow(2, static_cast<std::int64_t>(m));  // B/C
  }
  int branch = -1;
  for (std::size_t a = 0; a < m; ++a)
    if (degree[a] == 3) branch = static_cast<int>(a);
  if (branch < 0) return fact(m + 1);  // A
  // arm lengths from the branch node
  std::vector<int> arms;
  for (std::size_t a = 0; a < m; ++a) {
    if (static_cast<int>(a) == branch ||
        cartan[nodes[a]][nodes[branch]] == 0)
      continue;
    // walk away from the branch node
    int len = 1, prev = nodes[branch], cur = nodes[a];
    for (;;) {
      int next = -1;
      for (std::size_t b = 0; b < m; ++b) {
        int cand = nodes[b];
        if (cand != prev && cand != cur && cartan[cur][cand] != 0) next = cand;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return fact(m) * int_pow(2, static_cast<std::int64_t>(m - 1));  // D
  // E6/E7/E8 have arms (1,2,2), (1,2,3), (1,2,4)
  if (m == 6) return 51840;
  if (m == 7) return 2903040;
  return 696729600;
}

}  // namespace

Int orbit_size(const RootDatum& datum, const Weight& dominant) {
  if (!is_dominant(dominant)) throw not_dominant("orbit_size needs a dominant weight");
  const int n = datum.rank();
  std::vector<int> zero_nodes;
  for (int i = 0; i < n; ++i)
    if (dominant[static_cast<std::size_t>(i)] == 0) zero_nodes.push_back(i);
  // connected components of the induced subdiagram
  Int stab = 1;
  std::vector<bool> used(zero_nodes.size(), false);
  for (std::size_t s = 0; s < zero_nodes.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp{zero_nodes[s]};
    used[s] = true;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (std::size_t t = 0; t < zero_nodes.size(); ++t)
        if (!used[t] && datum.cartan()[comp[q]][zero_nodes[t]] != 0) {
          used[t] = true;
          comp.push_back(zero_nodes[t]);
        }
    stab *= component_weyl_order(datum.cartan(), comp);
  }
  return weyl_order(datum.type()) / stab;
}

std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& v) {
  Weight v0 = dominant_representative(datum, v).weight;
  std::set<Weight> seen{v0};
  std::vector<Weight> frontier{v0}, out{v0};
  const int n = datum.rank();
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      for (int j = 1; j <= n; ++j) {
        Weight u = reflect(datum, j, w);
        if (seen.insert(u).second) {
          next.push_back(u);
          out.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Weight longest_element_action(const RootDatum& datum, const Weight& v) {
  const int n = datum.rank();
  Weight r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    r[static_cast<std::size_t>(duality_permutation(datum.type(), i))] =
        v[static_cast<std::size_t>(i)];
  return r;
}

}  // namespace rtk
