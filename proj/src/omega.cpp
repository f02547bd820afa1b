#include "rtk/omega.hpp"

#include <algorithm>

#include "rtk/errors.hpp"
#include "rtk/tables.hpp"

namespace rtk {

std::string to_string(W1TOutcome o) {
  switch (o) {
    case W1TOutcome::AllMultOne: return "all-mult-one";
    case W1TOutcome::ZeroMultOnlyException: return "zero-mult-only-exception";
    case W1TOutcome::Neither: return "neither";
  }
  return "?";
}

std::string to_string(RegularityReason r) {
  switch (r) {
    case RegularityReason::AllMultOne: return "all-mult-one";
    case RegularityReason::DTypeZeroMultTwo: return "d-type-zero-mult-two";
    case RegularityReason::Fails: return "fails";
  }
  return "?";
}

namespace {

std::optional<tables::MatchResult> alias_match(tables::TableId id, SimpleType t,
                                               const Weight& lambda, std::int64_t p) {
  for (const auto& [qt, qw] : tables::query_aliases(t, lambda))
    if (auto m = tables::default_store().match(id, qt, qw, p)) return m;
  return std::nullopt;
}

void check_classifier_input(SimpleType type, const Weight& lambda, Characteristic p) {
  validate(type);
  if (lambda.size() != static_cast<std::size_t>(type.rank))
    throw malformed_params("weight has wrong rank");
  if (type.family == Family::B && p.p == 2)
    throw unsupported("type B at p=2: use the C-type datum");
  if (!is_p_restricted(lambda, p))
    throw not_p_restricted("weight is not dominant p-restricted");
}

}  // namespace

bool omega1_membership(SimpleType type, const Weight& lambda, Characteristic p) {
  check_classifier_input(type, lambda, p);
  if (is_zero(lambda)) return false;  // the tables list Omega1 \ {0}
  return alias_match(tables::TableId::T1, type, lambda, p.p).has_value();
}

bool omega1_nonrestricted(SimpleType type, const Weight& lambda, Characteristic p) {
  validate(type);
  if (p.zero()) throw char_zero("p-adic digit decomposition needs p > 0");
  if (type.family == Family::B && p.p == 2)
    throw unsupported("type B at p=2: use the C-type datum");
  if (!is_dominant(lambda)) throw not_dominant("omega1_nonrestricted needs a dominant weight");
  const std::size_t n = lambda.size();
  // digits of lambda in base p, coordinatewise
  std::vector<Weight> digits;
  Weight rest = lambda;
  while (!is_zero(rest)) {
    Weight digit(n), next(n);
    for (std::size_t i = 0; i < n; ++i) {
      digit[i] = rest[i] % p.p;
      next[i] = rest[i] / p.p;
    }
    digits.push_back(std::move(digit));
    rest = std::move(next);
  }
  if (digits.empty()) return false;  // lambda = 0
  for (const Weight& d : digits)
    if (!is_zero(d) && !omega1_membership(type, d, p)) return false;
  // forbidden adjacent digit pairs (lower twist, next-higher twist)
  auto is_unit = [&](const Weight& w, std::size_t idx) {
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != (i == idx ? 1 : 0)) return false;
    return true;
  };
  for (std::size_t l = 0; l + 1 < digits.size(); ++l) {
    const Weight& lo = digits[l];
    const Weight& hi = digits[l + 1];
    if (type.family == Family::C && p.p == 2 && is_unit(lo, n - 1) && is_unit(hi, 0))
      return false;
    if (type.family == Family::G && p.p == 2 && is_unit(lo, 0) && is_unit(hi, 0))
      return false;
    if (type.family == Family::G && p.p == 3 && is_unit(lo, 1) && is_unit(hi, 0))
      return false;
  }
  return true;
}

OmegaVerdict omega2_membership(SimpleType type, const Weight& lambda, Characteristic p) {
  check_classifier_input(type, lambda, p);
  OmegaVerdict v;
  if (is_zero(lambda)) return v;
  if (auto m1 = alias_match(tables::TableId::T1, type, lambda, p.p)) {
    v.in_omega1 = v.in_omega2 = true;
    v.table_row = "T1:" + std::to_string(m1->row->line_no);
    return v;
  }
  if (auto m2 = alias_match(tables::TableId::T2, type, lambda, p.p)) {
    v.in_omega2 = true;
    v.table_row = "T2:" + std::to_string(m2->row->line_no);
    v.zero_mult = tables::default_store().eval_m0(*m2);
    return v;
  }
  return v;
}

W1TOutcome theorem_w1t(SimpleType type, const Weight& lambda, Characteristic p) {
  validate(type);
  if (type.family == Family::B && p.p == 2)
    throw unsupported("type B at p=2: use the C-type datum");
  if (!is_dominant(lambda) || is_zero(lambda))
    throw not_dominant("theorem_w1t needs a nonzero dominant weight");

  if (p.zero()) {
    if (omega1_membership(type, lambda, p)) return W1TOutcome::AllMultOne;
    if (omega2_membership(type, lambda, p).in_omega2) return W1TOutcome::ZeroMultOnlyException;
    return W1TOutcome::Neither;
  }
  bool all_one = is_p_restricted(lambda, p) ? omega1_membership(type, lambda, p)
                                            : omega1_nonrestricted(type, lambda, p);
  if (all_one) return W1TOutcome::AllMultOne;
  // lambda = p^k mu with mu in Omega2 \ Omega1?
  Weight mu = lambda;
  while (std::all_of(mu.begin(), mu.end(), [&](std::int64_t c) { return c % p.p == 0; })) {
    for (auto& c : mu) c /= p.p;
  }
  if (is_p_restricted(mu, p)) {
    OmegaVerdict v = omega2_membership(type, mu, p);
    if (v.in_omega2 && !v.in_omega1) return W1TOutcome::ZeroMultOnlyException;
  }
  return W1TOutcome::Neither;
}

RegularityVerdict regular_torus_verdict(SimpleType type, const Weight& lambda,
                                        Characteristic p) {
  validate(type);
  if (!is_dominant(lambda) || is_zero(lambda))
    throw not_dominant("regular_torus_verdict needs a nonzero dominant weight");
  const RootDatum& datum = build_root_datum(type);

  W1TOutcome w = theorem_w1t(type, lambda, p);
  // The overgroup of a pure Frobenius twist is that of the untwisted weight.
  Weight base = lambda;
  if (!p.zero()) {
    while (std::all_of(base.begin(), base.end(), [&](std::int64_t c) { return c % p.p == 0; }))
      for (auto& c : base) c /= p.p;
  }
  auto [form, overgroup] = decide_overgroup(datum, base, p);

  RegularityVerdict out{overgroup, false, RegularityReason::Fails};
  if (w == W1TOutcome::AllMultOne) {
    out.contains_regular_torus = true;
    out.reason = RegularityReason::AllMultOne;
    return out;
  }
  if (w == W1TOutcome::ZeroMultOnlyException && overgroup.series == Series::SO_even) {
    Int z = p.zero() ? freudenthal_multiplicity(datum, base, Weight(base.size(), 0))
                     : *omega2_membership(type, base, p).zero_mult;
    if (z == 2) {
      out.contains_regular_torus = true;
      out.reason = RegularityReason::DTypeZeroMultTwo;
    }
  }
  return out;
}

std::optional<std::vector<SimpleType>> maximality_exceptions(SimpleType type,
                                                             const Weight& lambda,
                                                             Characteristic p) {
  validate(type);
  const int n = type.rank;
  auto unit = [&](std::size_t idx) {
    if (!std::all_of(lambda.begin(), lambda.end(), [](std::int64_t c) { return c >= 0; }))
      return false;
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] != (i == idx ? 1 : 0)) return false;
    return true;
  };
  const bool p_ge_7 = p.zero() || p.p >= 7;
  switch (type.family) {
    case Family::A:
      if (n == 1 && lambda == Weight{6} && p_ge_7) return {{SimpleType{Family::G, 2}}};
      if (n == 2 && lambda == Weight{1, 1} && p.p == 3) return {{SimpleType{Family::G, 2}}};
      if (n == 3 && lambda == Weight{1, 0, 1} && p.p == 2)
        return {{SimpleType{Family::C, 3}}};
      break;
    case Family::B:
      if (n > 2 && unit(static_cast<std::size_t>(n - 1)) && p.p != 2)
        return {{SimpleType{Family::D, n + 1}}};
      break;
    case Family::C:
      if (unit(static_cast<std::size_t>(n - 1)) && p.p == 2)
        return {{SimpleType{Family::D, n + 1}}};
      break;
    case Family::D:
      if (n == 4 && lambda == Weight{0, 1, 0, 0} && p.p == 2)
        return {{SimpleType{Family::C, 4}, SimpleType{Family::F, 4}}};
      break;
    case Family::G:
      if (lambda == Weight{0, 1} && p.p == 2) return {{SimpleType{Family::C, 3}}};
      break;
    default: break;
  }
  return std::nullopt;
}

std::vector<SimpleType> regular_unipotent_pairs(SimpleType H, Characteristic p) {
  validate(H);
  std::vector<SimpleType> out = tables::default_store().pair_subgroups(H, p.p);
  if (p.zero() || p.p >= coxeter_number(H)) out.push_back(SimpleType{Family::A, 1});
  return out;
}

}  // namespace rtk
