#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtk/duality.hpp"
#include "rtk/weights.hpp"

namespace rtk {

struct OmegaVerdict {
  bool in_omega1 = false;
  bool in_omega2 = false;
  std::optional<std::string> table_row;  // "T1:line" / "T2:line"
  std::optional<Int> zero_mult;          // set when in Omega2 \ Omega1
};

enum class W1TOutcome { AllMultOne, ZeroMultOnlyException, Neither };

enum class RegularityReason { AllMultOne, DTypeZeroMultTwo, Fails };

struct RegularityVerdict {
  ClassicalOvergroup overgroup;
  bool contains_regular_torus = false;
  RegularityReason reason = RegularityReason::Fails;
};

std::string to_string(W1TOutcome o);
std::string to_string(RegularityReason r);

// Membership of a p-restricted dominant weight in Omega1 (all weight
// multiplicities 1), per the tabulated classification.
bool omega1_membership(SimpleType type, const Weight& lambda, Characteristic p);

// The non-restricted extension: lambda = sum p^i lambda_i with every nonzero
// digit in Omega1 and no forbidden adjacent digit pair.
bool omega1_nonrestricted(SimpleType type, const Weight& lambda, Characteristic p);

OmegaVerdict omega2_membership(SimpleType type, const Weight& lambda, Characteristic p);

// At most one weight space of dimension > 1.
W1TOutcome theorem_w1t(SimpleType type, const Weight& lambda, Characteristic p);

// Whether the image of the irreducible representation contains a regular
// torus of its minimal classical overgroup.
RegularityVerdict regular_torus_verdict(SimpleType type, const Weight& lambda,
                                        Characteristic p);

// The handful of cases where the image is not maximal in the minimal
// classical overgroup; returns the intermediate subgroup types.
std::optional<std::vector<SimpleType>> maximality_exceptions(SimpleType type,
                                                             const Weight& lambda,
                                                             Characteristic p);

// Simple subgroup types of H containing a regular unipotent element of H at
// the given characteristic (tabulated rows plus the A1 rule p=0 or p>=h).
std::vector<SimpleType> regular_unipotent_pairs(SimpleType H, Characteristic p);

}  // namespace rtk
