#pragma once

#include <vector>

#include "rtk/weights.hpp"

namespace rtk {

// A simple system inside the parent root system, given by parent roots.
struct SubsystemBasis {
  const RootDatum* parent;
  std::vector<Root> roots;                      // in the order supplied
  std::vector<std::vector<std::int64_t>> cartan;  // <beta_i, beta_j^vee>
  std::vector<SimpleType> child_types;          // diagram components
};

// root_coords: each entry gives a parent root as coefficients on the simple
// roots (e.g. {0,1,2} for a2 + 2 a3).  Throws invalid_basis when an entry is
// not a root, the set is linearly dependent, or the pairings do not form a
// disjoint union of simple diagrams.
SubsystemBasis make_subsystem_basis(const RootDatum& parent,
                                    const std::vector<std::vector<std::int64_t>>& root_coords);

// Child coordinates <v, beta_j^vee> in basis order.
Weight restrict_weight(const SubsystemBasis& basis, const Weight& v);

struct Lemma44Report {
  struct Offender {
    Weight child_weight;
    Int multiplicity;
    std::vector<Weight> parent_witnesses;  // a few parent weights mapping there
  };
  std::vector<Offender> offenders;  // nonzero child weights of multiplicity >= 2
  Int checked_dim = 0;
  bool clean() const { return offenders.empty(); }
};

// Restricts the full orbit expansion of the multiset through the basis and
// reports every nonzero child weight of aggregated multiplicity at least 2.
// Restriction preserves total dimension; a clean report is the weight-level
// necessary condition for the highest weight to restrict inside Omega2.
Lemma44Report lemma44_audit(const SubsystemBasis& basis, const WeightMultiset& multiset);

}  // namespace rtk
