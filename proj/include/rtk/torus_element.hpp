#pragma once

#include <string>
#include <vector>

#include "rtk/numeric.hpp"
#include "rtk/simple_type.hpp"

namespace rtk {

// An exact multiplicative unit m * e^(2*pi*i*q): positive rational magnitude
// and rational rotation q mod 1.  Equality is decidable; no floating point.
struct Unit {
  Rat magnitude = 1;  // > 0
  Rat rotation = 0;   // in [0, 1)

  static Unit one() { return {}; }
  static Unit from_rational(const Rat& r);          // sign becomes rotation 1/2
  static Unit parse(const std::string& s);          // "3/2", "-2", "1@1/3"

  Unit operator*(const Unit& o) const;
  Unit inverse() const;
  bool operator==(const Unit&) const = default;
  bool is_one() const { return magnitude == 1 && rotation == 0; }
  std::string str() const;
};

// diag(t_1..t_m, x, t_m^-1..t_1^-1) with x = 1 present exactly for type B.
struct TorusElement {
  SimpleType type;          // B, C or D
  std::vector<Unit> entries;  // t_1..t_m, m = rank
};

TorusElement parse_torus_element(SimpleType type, const std::string& csv);

struct ElementRegularity {
  bool regular_in_H = false;
  bool regular_in_GL = false;
};

// Root-kernel test per classical type (C: t_i/t_j, t_i t_j, t_j^2;
// B: t_i/t_j, t_i t_j, t_j; D: t_i/t_j, t_i t_j) and distinctness of the
// full eigenvalue list on the natural module.
ElementRegularity element_regularity(SimpleType type, const TorusElement& t);

}  // namespace rtk
