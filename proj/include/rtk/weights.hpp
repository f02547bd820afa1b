#pragma once

#include <map>
#include <memory>
#include <vector>

#include "rtk/root_datum.hpp"

namespace rtk {

// 0 or a prime.
struct Characteristic {
  std::int64_t p = 0;
  Characteristic() = default;
  Characteristic(std::int64_t v);  // validates
  bool zero() const { return p == 0; }
};

bool is_p_restricted(const Weight& v, Characteristic p);

// Dominant orbit representatives with exact multiplicities.
class WeightMultiset {
 public:
  WeightMultiset(const RootDatum& datum, std::map<Weight, Int> entries);

  const RootDatum& datum() const { return *datum_; }
  const std::map<Weight, Int>& entries() const { return entries_; }
  const Int& total_dim() const { return total_dim_; }

  Int multiplicity(const Weight& any_weight) const;  // via dominant representative
  bool all_multiplicities_one() const;
  bool nonzero_multiplicities_one() const;
  Int zero_multiplicity() const;

  // Expands to the full orbit level: every Weyl conjugate with its multiplicity.
  std::vector<std::pair<Weight, Int>> expand() const;

 private:
  const RootDatum* datum_;
  std::map<Weight, Int> entries_;
  Int total_dim_;
};

// All dominant mu with lambda - mu a non-negative integer combination of the
// simple roots, lambda included, graded by height of lambda - mu.
std::vector<Weight> subdominant_weights(const RootDatum& datum, const Weight& lambda);

// Multiplicity of mu in the characteristic-0 irreducible (= the Weyl module)
// of highest weight lambda; 0 if mu is not subdominant.
Int freudenthal_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu);

// prod_{alpha>0} (lambda+rho, alpha) / (rho, alpha), exact.
Int weyl_dimension(const RootDatum& datum, const Weight& lambda);

// Freudenthal multiplicities of every subdominant weight; cached per
// (type, lambda) behind a mutex, shareable across threads.
std::shared_ptr<const WeightMultiset> weight_multiset(const RootDatum& datum,
                                                      const Weight& lambda);

// Explicit modular multiplicity rules (nine numbered clauses); pure formula
// evaluation, p > 0 except where noted.
Int modular_rule_multiplicity(int rule_id, const std::vector<std::int64_t>& params,
                              Characteristic p);

// The tabulated zero-weight multiplicity for an Omega2\Omega1 weight, with the
// congruence branch for p applied.  Throws not_a_table2_row otherwise.
Int zero_weight_multiplicity_table2(SimpleType type, const Weight& lambda, Characteristic p);

}  // namespace rtk
