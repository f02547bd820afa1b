#include "rtk/weights.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "rtk/errors.hpp"
#include "rtk/tables.hpp"

namespace rtk {

Characteristic::Characteristic(std::int64_t v) : p(v) {
  if (v != 0 && !is_prime(v))
    throw error("characteristic must be 0 or a prime, got " + std::to_string(v));
}

bool is_p_restricted(const Weight& v, Characteristic p) {
  if (!is_dominant(v)) return false;
  if (p.zero()) return true;
  return std::all_of(v.begin(), v.end(), [&](std::int64_t c) { return c < p.p; });
}

WeightMultiset::WeightMultiset(const RootDatum& datum, std::map<Weight, Int> entries)
    : datum_(&datum), entries_(std::move(entries)) {
  total_dim_ = 0;
  for (const auto& [mu, m] : entries_) total_dim_ += m * orbit_size(datum, mu);
}

Int WeightMultiset::multiplicity(const Weight& any_weight) const {
  Weight dom = dominant_representative(*datum_, any_weight).weight;
  auto it = entries_.find(dom);
  return it == entries_.end() ? Int(0) : it->second;
}

bool WeightMultiset::all_multiplicities_one() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second == 1; });
}

bool WeightMultiset::nonzero_multiplicities_one() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) {
    return kv.second == 1 || is_zero(kv.first);
  });
}

Int WeightMultiset::zero_multiplicity() const {
  auto it = entries_.find(Weight(static_cast<std::size_t>(datum_->rank()), 0));
  return it == entries_.end() ? Int(0) : it->second;
}

std::vector<std::pair<Weight, Int>> WeightMultiset::expand() const {
  std::vector<std::pair<Weight, Int>> out;
  for (const auto& [mu, m] : entries_)
    for (const Weight& w : weyl_orbit(*datum_, mu)) out.emplace_back(w, m);
  return out;
}

namespace {

struct Subdominant {
  Weight mu;
  std::vector<std::int64_t> depth;  // lambda - mu in simple-root coordinates
  int height;
};

// All dominant mu <= lambda.  Search downward from lambda by positive-root
// steps through dominant weights: every cover in the dominance order on
// dominant weights is a positive-root difference, so this reaches the whole
// set while touching only dominant weights.
std::vector<Subdominant> subdominant_scan(const RootDatum& datum, const Weight& lambda) {
  const int n = datum.rank();
  if (!is_dominant(lambda)) throw not_dominant("subdominant_weights needs a dominant weight");
  std::map<Weight, std::vector<std::int64_t>> seen;
  seen.emplace(lambda, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  std::vector<Weight> frontier{lambda};
  Weight mu(static_cast<std::size_t>(n));
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      const auto& depth = seen.at(w);
      for (const Root& beta : datum.positive_roots()) {
        bool dom = true;
        for (int i = 0; i < n && dom; ++i) {
          mu[static_cast<std::size_t>(i)] =
              w[static_cast<std::size_t>(i)] - beta.fund[static_cast<std::size_t>(i)];
          if (mu[static_cast<std::size_t>(i)] < 0) dom = false;
        }
        if (!dom) continue;
        auto [it, inserted] = seen.emplace(mu, std::vector<std::int64_t>());
        if (!inserted) continue;
        it->second = depth;
        for (int j = 0; j < n; ++j)
          it->second[static_cast<std::size_t>(j)] += beta.sim[static_cast<std::size_t>(j)];
        next.push_back(mu);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subdominant> out;
  out.reserve(seen.size());
  for (auto& [w, depth] : seen) {
    int h = 0;
    for (auto x : depth) h += static_cast<int>(x);
    out.push_back({w, depth, h});
  }
  std::sort(out.begin(), out.end(), [](const Subdominant& x, const Subdominant& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.depth < y.depth;
  });
  return out;
}

// In-place dominant representative; the workhorse of the recursion.
void dominate(const RootDatum& datum, Weight& w) {
  const int n = datum.rank();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j < n; ++j) {
      std::int64_t c = w[static_cast<std::size_t>(j)];
      if (c < 0) {
        for (int i = 0; i < n; ++i) w[i] -= c * datum.cartan()[j][i];
        moved = true;
      }
    }
  }
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t c : w) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Fast path with machine integers; valid whenever the module dimension (and
// hence every multiplicity) fits comfortably, which a caller checks first.
std::map<Weight, Int> freudenthal_small(const RootDatum& datum, const Weight& lambda,
                                        const std::vector<Subdominant>& subs) {
  const int n = datum.rank();
  std::unordered_map<Weight, std::int64_t, WeightHash> mult(2 * subs.size());
  Weight lam_plus_mu_2rho(static_cast<std::size_t>(n));
  Weight nu(static_cast<std::size_t>(n));
  Weight dom(static_cast<std::size_t>(n));
  for (const Subdominant& sd : subs) {
    if (sd.height == 0) {
      mult[sd.mu] = 1;
      continue;
    }
    for (int i = 0; i < n; ++i)
      lam_plus_mu_2rho[static_cast<std::size_t>(i)] =
          lambda[static_cast<std::size_t>(i)] + sd.mu[static_cast<std::size_t>(i)] + 2;
    std::int64_t denom = 0;
    for (int j = 0; j < n; ++j)
      denom += sd.depth[static_cast<std::size_t>(j)] * datum.scaled_d(j) *
               lam_plus_mu_2rho[static_cast<std::size_t>(j)];

    __int128 acc = 0;
    for (const Root& alpha : datum.positive_roots()) {
      // longest k with mu + k*alpha still below lambda
      std::int64_t kmax = -1;
      for (int j = 0; j < n; ++j) {
        std::int64_t a = alpha.sim[static_cast<std::size_t>(j)];
        if (a == 0) continue;
        std::int64_t q = sd.depth[static_cast<std::size_t>(j)] / a;
        kmax = kmax < 0 ? q : std::min(kmax, q);
      }
      if (kmax < 1) continue;
      // (mu + k alpha, alpha) grows by (alpha, alpha) per step
      std::int64_t form = datum.scaled_form(sd.mu, alpha.sim);
      const std::int64_t step = 2 * alpha.scaled_halfnorm;
      nu = sd.mu;
      for (std::int64_t k = 1; k <= kmax; ++k) {
        for (int i = 0; i < n; ++i)
          nu[static_cast<std::size_t>(i)] += alpha.fund[static_cast<std::size_t>(i)];
        form += step;
        dom = nu;
        dominate(datum, dom);
        auto it = mult.find(dom);
        if (it == mult.end() || it->second == 0) continue;
        acc += static_cast<__int128>(it->second) * form;
      }
    }
    mult[sd.mu] = static_cast<std::int64_t>(2 * acc / denom);
  }
  std::map<Weight, Int> out;
  for (auto& [mu, m] : mult) out.emplace(mu, Int(m));
  return out;
}

std::map<Weight, Int> freudenthal_big(const RootDatum& datum, const Weight& lambda,
                                      const std::vector<Subdominant>& subs) {
  const int n = datum.rank();
  std::map<Weight, Int> mult;
  Weight lam_plus_mu_2rho(static_cast<std::size_t>(n));
  Weight nu(static_cast<std::size_t>(n));
  for (const Subdominant& sd : subs) {
    if (sd.height == 0) {
      mult[sd.mu] = 1;
      continue;
    }
    for (int i = 0; i < n; ++i)
      lam_plus_mu_2rho[static_cast<std::size_t>(i)] =
          lambda[static_cast<std::size_t>(i)] + sd.mu[static_cast<std::size_t>(i)] + 2;
    Int denom = 0;
    for (int j = 0; j < n; ++j)
      denom += Int(sd.depth[static_cast<std::size_t>(j)]) * datum.scaled_d(j) *
               lam_plus_mu_2rho[static_cast<std::size_t>(j)];
    Int acc = 0;
    for (const Root& alpha : datum.positive_roots()) {
      for (std::int64_t k = 1;; ++k) {
        bool inside = true;
        for (int j = 0; j < n && inside; ++j)
          if (sd.depth[static_cast<std::size_t>(j)] -
                  k * alpha.sim[static_cast<std::size_t>(j)] <
              0)
            inside = false;
        if (!inside) break;
        Int form = 0;
        for (int i = 0; i < n; ++i) {
          nu[static_cast<std::size_t>(i)] =
              sd.mu[static_cast<std::size_t>(i)] + k * alpha.fund[static_cast<std::size_t>(i)];
          form += Int(alpha.sim[static_cast<std::size_t>(i)]) * datum.scaled_d(i) *
                  nu[static_cast<std::size_t>(i)];
        }
        dominate(datum, nu);
        auto it = mult.find(nu);
        if (it == mult.end() || it->second == 0) continue;
        acc += it->second * form;
      }
    }
    mult[sd.mu] = 2 * acc / denom;
  }
  return mult;
}

std::map<Weight, Int> freudenthal_all(const RootDatum& datum, const Weight& lambda) {
  auto subs = subdominant_scan(datum, lambda);
  // every multiplicity is bounded by the module dimension
  static const Int kSmallLimit = Int(1) << 52;
  if (weyl_dimension(datum, lambda) < kSmallLimit)
    return freudenthal_small(datum, lambda, subs);
  return freudenthal_big(datum, lambda, subs);
}

}  // namespace

std::vector<Weight> subdominant_weights(const RootDatum& datum, const Weight& lambda) {
  std::vector<Weight> out;
  for (const Subdominant& sd : subdominant_scan(datum, lambda)) out.push_back(sd.mu);
  return out;
}

std::shared_ptr<const WeightMultiset> weight_multiset(const RootDatum& datum,
                                                      const Weight& lambda) {
  if (!is_dominant(lambda)) throw not_dominant("weight_multiset needs a dominant weight");
  using Key = std::pair<SimpleType, Weight>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const WeightMultiset>> cache;
  Key key{datum.type(), lambda};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto ms = std::make_shared<WeightMultiset>(datum, freudenthal_all(datum, lambda));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(ms)).first->second;
}

Int freudenthal_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
  if (!is_dominant(lambda))
    throw not_dominant("freudenthal_multiplicity needs a dominant highest weight");
  return weight_multiset(datum, lambda)->multiplicity(mu);
}

Int weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  if (!is_dominant(lambda)) throw not_dominant("weyl_dimension needs a dominant weight");
  const int n = datum.rank();
  Weight lam_rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    lam_rho[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + 1;
  const Weight rho = datum.rho();
  Rat result = 1;
  for (const Root& alpha : datum.positive_roots()) {
    std::int64_t a = datum.scaled_form(lam_rho, alpha.sim);
    std::int64_t b = datum.scaled_form(rho, alpha.sim);
    result *= Rat(a, b);
  }
  if (denominator(result) != 1) throw error("weyl_dimension: non-integral product");
  return numerator(result);
}

Int modular_rule_multiplicity(int rule_id, const std::vector<std::int64_t>& params,
                              Characteristic p) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw malformed_params("rule " + std::to_string(rule_id) + " takes " +
                             std::to_string(k) + " parameters");
  };
  auto positive = [&](std::int64_t v, const char* what) {
    if (v <= 0) throw malformed_params(std::string(what) + " must be positive");
  };
  auto divides = [&](std::int64_t x) { return p.p != 0 && x % p.p == 0; };
  switch (rule_id) {
    case 1: {  // A_n, a w_j + b w_k: weight one step down the chain j..k
      need(4);
      auto [a, b, j, k] = std::tuple{params[0], params[1], params[2], params[3]};
      positive(a, "a");
      positive(b, "b");
      if (j >= k) throw malformed_params("rule 1 needs j < k");
      return divides(a + b + k - j) ? Int(k - j) : Int(k - j + 1);
    }
    case 2: {  // A_n, c w_i (1<i<n, c>1): lambda - a_{i-1} - 2a_i - a_{i+1}
      need(1);
      std::int64_t c = params[0];
      if (c <= 1) throw malformed_params("rule 2 needs c > 1");
      return (p.p != 0 && c == p.p - 1) ? Int(1) : Int(2);
    }
    case 3: {  // B_2, a w_1 + b w_2: lambda - a_1 - a_2
      need(2);
      positive(params[0], "a");
      positive(params[1], "b");
      return divides(2 * params[0] + params[1] + 2) ? Int(1) : Int(2);
    }
    case 4: {  // B_n, w_1 + w_n: lambda - a_1 - ... - a_n
      need(1);
      std::int64_t n = params[0];
      if (n < 2) throw malformed_params("rule 4 needs n >= 2");
      return divides(2 * n + 1) ? Int(n - 1) : Int(n);
    }
    case 5: {  // G_2, a w_1 + b w_2: lambda - a_1 - a_2
      need(2);
      positive(params[0], "a");
      positive(params[1], "b");
      return divides(3 * params[0] + params[1] + 3) ? Int(1) : Int(2);
    }
    case 6: {  // A_n, a w_i + b w_{i+1} + c w_{i+2}, a+b = p-1 = b+c: lower bound
      need(3);
      positive(params[0], "a");
      positive(params[1], "b");
      positive(params[2], "c");
      if (p.zero() || params[0] + params[1] != p.p - 1 || params[1] + params[2] != p.p - 1)
        throw malformed_params("rule 6 needs a+b = p-1 = b+c");
      return 2;
    }
    case 7: {  // D_4, a w_1 (a>1): lower bound
      need(1);
      if (params[0] <= 1) throw malformed_params("rule 7 needs a > 1");
      return 2;
    }
    case 8: {  // G_2, b w_1 (b>1), p>3
      need(1);
      if (params[0] <= 1) throw malformed_params("rule 8 needs b > 1");
      if (!p.zero() && p.p <= 3) throw malformed_params("rule 8 needs p > 3");
      return 2;
    }
    case 9: {  // G_2, a w_2, a = (p-1)/2, p>3
      need(1);
      if (p.zero() || p.p <= 3 || params[0] != (p.p - 1) / 2)
        throw malformed_params("rule 9 needs p > 3 and a = (p-1)/2");
      return 2;
    }
    default: throw unknown_rule("no modular rule " + std::to_string(rule_id));
  }
}

Int zero_weight_multiplicity_table2(SimpleType type, const Weight& lambda, Characteristic p) {
  validate(type);
  for (const auto& [qt, qw] : tables::query_aliases(type, lambda))
    if (auto m = tables::default_store().match(tables::TableId::T2, qt, qw, p.p))
      return tables::default_store().eval_m0(*m);
  throw not_a_table2_row(to_string(type) + " with the given weight is not a T2 row at p=" +
                         std::to_string(p.p));
}

}  // namespace rtk
