#include "rtk/duality.hpp"

#include "rtk/errors.hpp"
#include "rtk/tables.hpp"

namespace rtk {

std::string to_string(FormType f) {
  switch (f) {
    case FormType::NonSelfDual: return "non-self-dual";
    case FormType::Symplectic: return "symplectic";
    case FormType::OrthogonalOddDim: return "orthogonal-odd";
    case FormType::OrthogonalEvenDim: return "orthogonal-even";
  }
  return "?";
}

std::string to_string(Series s) {
  switch (s) {
    case Series::SL: return "SL";
    case Series::Sp: return "Sp";
    case Series::SO_odd: return "SO_odd";
    case Series::SO_even: return "SO_even";
  }
  return "?";
}

bool is_self_dual(const RootDatum& datum, const Weight& lambda) {
  if (!is_dominant(lambda)) throw not_dominant("is_self_dual needs a dominant weight");
  return longest_element_action(datum, lambda) == lambda;
}

Indicator steinberg_indicator(const RootDatum& datum, const Weight& lambda) {
  if (!is_self_dual(datum, lambda))
    throw not_self_dual(to_string(datum.type()) + ": weight is not self-dual");
  return datum.coroot_sum_pairing(lambda) % 2 != 0 ? Indicator::Symplectic
                                                   : Indicator::Orthogonal;
}

namespace {

// Char-p dimensions are used only when some table row pins them down.
std::optional<Int> tabulated_dimension(SimpleType t, const Weight& lambda, std::int64_t p) {
  using tables::TableId;
  const auto& store = tables::default_store();
  for (const auto& [qt, qw] : tables::query_aliases(t, lambda)) {
    for (TableId id : {TableId::TM2, TableId::T3, TableId::T4, TableId::T5, TableId::T7,
                       TableId::T8}) {
      for (const auto& m : store.match_all(id, qt, qw, p)) {
        auto d = store.eval_dim(m);
        if (d) return d;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool p2_quadratic_form_exists(SimpleType type, const Weight& lambda) {
  validate(type);
  const auto& store = tables::default_store();
  for (const auto& [qt, qw] : tables::query_aliases(type, lambda)) {
    if (store.match(tables::TableId::T8, qt, qw, 2)) return true;
    if (store.match(tables::TableId::T7, qt, qw, 2)) return false;
  }
  throw out_of_table_domain(to_string(type) +
                            ": weight outside the tabulated p=2 self-dual domain");
}

std::pair<FormVerdict, ClassicalOvergroup> decide_overgroup(const RootDatum& datum,
                                                            const Weight& lambda,
                                                            Characteristic p) {
  if (!is_dominant(lambda) || is_zero(lambda))
    throw not_dominant("decide_overgroup needs a nonzero dominant weight");
  if (datum.type().family == Family::B && p.p == 2)
    throw unsupported("type B at p=2: use the C-type datum");

  Int dim;
  if (p.zero()) {
    dim = weyl_dimension(datum, lambda);
  } else {
    auto d = tabulated_dimension(datum.type(), lambda, p.p);
    if (!d)
      throw unsupported_charp_dimension(to_string(datum.type()) +
                                        ": irreducible dimension at p=" +
                                        std::to_string(p.p) + " is not table-backed");
    dim = *d;
  }

  FormVerdict v;
  v.self_dual = is_self_dual(datum, lambda);
  if (!v.self_dual) {
    v.form = FormType::NonSelfDual;
    return {v, {Series::SL, dim}};
  }
  if (p.p == 2) {
    v.p2_quadratic = p2_quadratic_form_exists(datum.type(), lambda);
    if (*v.p2_quadratic) {
      v.form = FormType::OrthogonalEvenDim;
      return {v, {Series::SO_even, dim}};
    }
    v.form = FormType::Symplectic;
    return {v, {Series::Sp, dim}};
  }
  if (steinberg_indicator(datum, lambda) == Indicator::Symplectic) {
    v.form = FormType::Symplectic;
    return {v, {Series::Sp, dim}};
  }
  if (dim % 2 == 1) {
    if (dim == 1) throw unsupported("degenerate 1-dimensional module");
    v.form = FormType::OrthogonalOddDim;
    return {v, {Series::SO_odd, dim}};
  }
  v.form = FormType::OrthogonalEvenDim;
  return {v, {Series::SO_even, dim}};
}

Tk3Result tk3_dimension(int case_id, const std::vector<std::int64_t>& params) {
  switch (case_id) {
    case 1:
      if (!params.empty()) throw invalid_case("case 1 takes no parameters");
      return {std::nullopt, true};
    case 2: {
      if (params.size() != 1 || params[0] < 1 || params[0] % 2 == 0)
        throw invalid_case("case 2 takes one odd rank n");
      std::int64_t n = params[0];
      return {binomial(n + 1, (n + 1) / 2), false};
    }
    case 3: {
      if (params.size() != 3) throw invalid_case("case 3 takes (n, p, branch)");
      auto [n, p, branch] = std::tuple{params[0], params[1], params[2]};
      if (n < 2 || !is_prime(p) || p == 2 || (branch != 1 && branch != 2))
        throw invalid_case("case 3 needs n>1, odd prime p, branch in {1,2}");
      Int pw = int_pow(p, n);
      Int dim = branch == 1 ? Int((pw + 1) / 2) : Int((pw - 1) / 2);
      return {dim, false};
    }
    default: throw invalid_case("no such case " + std::to_string(case_id));
  }
}

}  // namespace rtk
