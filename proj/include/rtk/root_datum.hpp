#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "rtk/numeric.hpp"
#include "rtk/simple_type.hpp"

namespace rtk {

// Coefficients on the fundamental weights of the simply connected group.
// May be non-dominant.
using Weight = std::vector<std::int64_t>;

struct Root {
  Weight fund;                     // coordinates on fundamental weights
  std::vector<std::int64_t> sim;   // coordinates on simple roots
  std::int64_t scaled_halfnorm;    // scale * (alpha, alpha)/2
  int height;                      // sum of simple-root coordinates
};

// A simple root system with exact integer/rational data, Bourbaki numbering.
// The invariant form is normalized so long roots have squared length 2; all
// pairings are stored scaled by `scale` (1, 2, or 3) so they stay integral.
// Immutable after construction and safe to share across threads.
class RootDatum {
 public:
  static const RootDatum& get(SimpleType t);  // cached, thread-safe

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }
  std::int64_t scale() const { return scale_; }

  // scale * (alpha_j, alpha_j)/2 for the j-th simple root (0-based).
  std::int64_t scaled_d(int j) const { return scaled_d_[j]; }

  // scale * (v, alpha) for a root alpha given by simple-root coordinates.
  std::int64_t scaled_form(const Weight& v, const std::vector<std::int64_t>& root_sim) const;

  // <v, alpha^vee>, exact.
  std::int64_t coroot_pairing(const Weight& v, const Root& alpha) const;

  // <v, sum over positive roots of alpha^vee>.
  std::int64_t coroot_sum_pairing(const Weight& v) const;

  // Fundamental weights in the ambient orthogonal realization (rational),
  // one vector per weight; satisfies (w_i, alpha_j^vee) = delta_ij.
  const std::vector<std::vector<Rat>>& fundamental_weights_ambient() const {
    return fw_ambient_;
  }
  const std::vector<std::vector<Rat>>& simple_roots_ambient() const { return sr_ambient_; }

  // True if v lies in the root lattice Z Phi.
  bool in_root_lattice(const Weight& v) const;

  // rho in fundamental coordinates (all ones).
  Weight rho() const { return Weight(static_cast<std::size_t>(rank_), 1); }

 private:
  explicit RootDatum(SimpleType t);

  SimpleType type_;
  int rank_;
  std::int64_t scale_;
  std::vector<std::vector<int>> cartan_;           // cartan_[i][j] = <a_i, a_j^vee>
  std::vector<std::int64_t> scaled_d_;
  std::vector<Root> positive_;
  std::vector<std::vector<Rat>> sr_ambient_;       // simple roots, ambient coords
  std::vector<std::vector<Rat>> fw_ambient_;       // fundamental weights, ambient
};

RootDatum const& build_root_datum(SimpleType t);  // validates; D3 -> A3

// --- Weyl-group operations (pure functions over the shared datum) ---

bool is_dominant(const Weight& v);
bool is_zero(const Weight& v);

// Simple reflection s_{w_index} (1-based index), involutive.
Weight reflect(const RootDatum& datum, int w_index, const Weight& v);

struct DominantRep {
  Weight weight;
  std::set<int> stabilizer_generators;  // 1-based i with <result, a_i^vee> = 0
};

DominantRep dominant_representative(const RootDatum& datum, const Weight& v);

// |W| / |W_stab| for a dominant weight, exact.
Int orbit_size(const RootDatum& datum, const Weight& dominant);

// Full Weyl orbit of (the dominant representative of) v.
std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& v);

// -w0(v), via the diagram symmetry of the type.
Weight longest_element_action(const RootDatum& datum, const Weight& v);

}  // namespace rtk
