#pragma once

#include <cstdint>
#include <string>

#include "rtk/numeric.hpp"

namespace rtk {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Lie type in Bourbaki labelling.  D3 is accepted and normalized to
// A3 by the root-datum builder; B2 is kept as such (the root system of B2 is
// that of C2 with the two nodes swapped, and the classifier relabels where
// the reference tables speak only of C2).
struct SimpleType {
  Family family;
  int rank;

  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;
};

// Throws invalid_rank if (family, rank) is not a valid simple type.
void validate(SimpleType t);

std::string to_string(SimpleType t);

// Parses "C3", "E8", "G2", ...
SimpleType parse_simple_type(const std::string& s);

// Number of positive roots, from the classical count.
int positive_root_count(SimpleType t);

// |W| for the given type.
Int weyl_order(SimpleType t);

// Coxeter number h = 1 + height of the highest root.
int coxeter_number(SimpleType t);

// The permutation realizing -w0 on fundamental weights (0-based index map).
// Identity for A1, B, C, D even, E7, E8, F4, G2; the diagram involution for
// An, Dn odd, E6.
int duality_permutation(SimpleType t, int index0);

}  // namespace rtk
