#pragma once

#include <optional>
#include <utility>

#include "rtk/root_datum.hpp"
#include "rtk/weights.hpp"

namespace rtk {

enum class FormType { NonSelfDual, Symplectic, OrthogonalOddDim, OrthogonalEvenDim };
enum class Indicator { Orthogonal, Symplectic };
enum class Series { SL, Sp, SO_odd, SO_even };

struct FormVerdict {
  bool self_dual = false;
  FormType form = FormType::NonSelfDual;
  std::optional<bool> p2_quadratic;  // only meaningful at p = 2
};

struct ClassicalOvergroup {
  Series series;
  Int natural_dim;
};

std::string to_string(FormType f);
std::string to_string(Series s);

// lambda = -w0(lambda)?
bool is_self_dual(const RootDatum& datum, const Weight& lambda);

// Steinberg's parity criterion for p != 2: symplectic iff lambda pairs oddly
// with the sum of the positive coroots.  Throws not_self_dual.
Indicator steinberg_indicator(const RootDatum& datum, const Weight& lambda);

// p = 2 only: existence of a non-degenerate invariant quadratic form, decided
// by the tabulated list; the three non-orthogonal symplectic families give
// false, inputs outside the tabulated domain raise out_of_table_domain.
bool p2_quadratic_form_exists(SimpleType type, const Weight& lambda);

// Minimal classical overgroup of the irreducible image.
std::pair<FormVerdict, ClassicalOvergroup> decide_overgroup(const RootDatum& datum,
                                                            const Weight& lambda,
                                                            Characteristic p);

// Closed-form dimension statements for the half-spin-like C_n families and the
// middle exterior power; case 1 carries only a parity claim.
struct Tk3Result {
  std::optional<Int> dimension;
  bool odd_dimension_claim = false;
};
// case 1: params {}            -> parity claim "odd"
// case 2: params {n}, n odd    -> binom(n+1, (n+1)/2)
// case 3: params {n, p, which} -> which=1: (p^n+1)/2, which=2: (p^n-1)/2
Tk3Result tk3_dimension(int case_id, const std::vector<std::int64_t>& params);

}  // namespace rtk
