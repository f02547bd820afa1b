#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rtk/duality.hpp"
#include "rtk/errors.hpp"

using namespace rtk;

namespace {
Weight unit(int rank, int i) {
  Weight w(static_cast<std::size_t>(rank), 0);
  w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}
}  // namespace

TEST_CASE("self-duality") {
  CHECK_FALSE(is_self_dual(build_root_datum({Family::A, 4}), unit(4, 1)));
  CHECK(is_self_dual(build_root_datum({Family::A, 3}), unit(3, 2)));
  CHECK(is_self_dual(build_root_datum({Family::E, 6}), unit(6, 2)));
  CHECK_FALSE(is_self_dual(build_root_datum({Family::E, 6}), unit(6, 1)));
  CHECK_FALSE(is_self_dual(build_root_datum({Family::D, 5}), unit(5, 5)));
  CHECK(is_self_dual(build_root_datum({Family::D, 6}), unit(6, 6)));
}

TEST_CASE("steinberg parity criterion") {
  const RootDatum& a1 = build_root_datum({Family::A, 1});
  for (int a = 1; a <= 9; ++a)
    CHECK(steinberg_indicator(a1, Weight{a}) ==
          (a % 2 == 1 ? Indicator::Symplectic : Indicator::Orthogonal));
  CHECK(steinberg_indicator(build_root_datum({Family::E, 7}), unit(7, 7)) ==
        Indicator::Symplectic);
  CHECK(steinberg_indicator(build_root_datum({Family::C, 3}), unit(3, 3)) ==
        Indicator::Symplectic);
  CHECK(steinberg_indicator(build_root_datum({Family::A, 3}), Weight{0, 2, 0}) ==
        Indicator::Orthogonal);
  CHECK(steinberg_indicator(build_root_datum({Family::G, 2}), unit(2, 2)) ==
        Indicator::Orthogonal);
  CHECK_THROWS_AS(steinberg_indicator(build_root_datum({Family::A, 4}), unit(4, 1)),
                  not_self_dual);

  // spin families, mod-4 conditions up to rank 12
  for (int n = 3; n <= 12; ++n) {
    const RootDatum& b = build_root_datum({Family::B, n});
    bool symp = n % 4 == 1 || n % 4 == 2;
    CAPTURE(n);
    CHECK(steinberg_indicator(b, unit(n, n)) ==
          (symp ? Indicator::Symplectic : Indicator::Orthogonal));
  }
  for (int n = 4; n <= 12; n += 2) {
    const RootDatum& d = build_root_datum({Family::D, n});
    bool symp = n % 4 == 2;
    CAPTURE(n);
    CHECK(steinberg_indicator(d, unit(n, n)) ==
          (symp ? Indicator::Symplectic : Indicator::Orthogonal));
    CHECK(steinberg_indicator(d, unit(n, n - 1)) ==
          (symp ? Indicator::Symplectic : Indicator::Orthogonal));
  }
}

TEST_CASE("odd-centre types are never symplectic") {
  for (int n = 2; n <= 8; n += 2) {
    const RootDatum& d = build_root_datum({Family::A, n});
    Weight lam(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        if (is_zero(lam) || !is_self_dual(d, lam)) return;
        CHECK(steinberg_indicator(d, lam) == Indicator::Orthogonal);
        return;
      }
      for (int c = 0; c <= 3; ++c) {
        lam[static_cast<std::size_t>(i)] = c;
        rec(i + 1);
      }
      lam[static_cast<std::size_t>(i)] = 0;
    };
    rec(0);
  }
}

TEST_CASE("root lattice membership for the C-type spin weight") {
  for (int n = 2; n <= 10; ++n) {
    const RootDatum& d = build_root_datum({Family::C, n});
    CAPTURE(n);
    CHECK(d.in_root_lattice(unit(n, n)) == (n % 2 == 0));
    CHECK(d.in_root_lattice(unit(n, 1)) == false);
    CHECK(d.in_root_lattice(Weight(static_cast<std::size_t>(n), 0)));
  }
}

TEST_CASE("quadratic forms at p=2") {
  CHECK(p2_quadratic_form_exists({Family::C, 5}, unit(5, 5)));
  CHECK_FALSE(p2_quadratic_form_exists({Family::C, 5}, unit(5, 1)));
  CHECK_FALSE(p2_quadratic_form_exists({Family::A, 1}, Weight{1}));
  CHECK_FALSE(p2_quadratic_form_exists({Family::G, 2}, unit(2, 1)));
  CHECK(p2_quadratic_form_exists({Family::D, 4}, unit(4, 2)));
  CHECK(p2_quadratic_form_exists({Family::A, 3}, Weight{1, 0, 1}));
  CHECK_THROWS_AS(p2_quadratic_form_exists({Family::A, 4}, unit(4, 2)),
                  out_of_table_domain);
}

TEST_CASE("minimal classical overgroups") {
  auto c3 = decide_overgroup(build_root_datum({Family::C, 3}), unit(3, 3), Characteristic(0));
  CHECK(c3.first.form == FormType::Symplectic);
  CHECK(c3.second.series == Series::Sp);
  CHECK(c3.second.natural_dim == 14);

  auto g2 = decide_overgroup(build_root_datum({Family::G, 2}), unit(2, 2), Characteristic(5));
  CHECK(g2.first.form == FormType::OrthogonalEvenDim);
  CHECK(g2.second.series == Series::SO_even);
  CHECK(g2.second.natural_dim == 14);

  auto a2 = decide_overgroup(build_root_datum({Family::A, 2}), Weight{2, 0}, Characteristic(0));
  CHECK(a2.first.form == FormType::NonSelfDual);
  CHECK(a2.second.series == Series::SL);
  CHECK(a2.second.natural_dim == 6);

  auto b3 = decide_overgroup(build_root_datum({Family::B, 3}), Weight{2, 0, 0},
                             Characteristic(0));
  CHECK(b3.first.form == FormType::OrthogonalOddDim);
  CHECK(b3.second.series == Series::SO_odd);
  CHECK(b3.second.natural_dim == 27);

  // p = 2: table-driven split
  auto cn = decide_overgroup(build_root_datum({Family::C, 3}), unit(3, 3), Characteristic(2));
  CHECK(cn.first.form == FormType::OrthogonalEvenDim);
  CHECK(cn.first.p2_quadratic == true);
  CHECK(cn.second.series == Series::SO_even);
  CHECK(cn.second.natural_dim == 8);
  auto g2p2 =
      decide_overgroup(build_root_datum({Family::G, 2}), unit(2, 1), Characteristic(2));
  CHECK(g2p2.first.form == FormType::Symplectic);
  CHECK(g2p2.second.natural_dim == 6);

  // characteristic-p dimensions outside the tables are a typed error
  CHECK_THROWS_AS(decide_overgroup(build_root_datum({Family::A, 4}), unit(4, 2),
                                   Characteristic(3)),
                  unsupported_charp_dimension);
  // B at p=2 is rejected
  CHECK_THROWS_AS(decide_overgroup(build_root_datum({Family::B, 3}), unit(3, 1),
                                   Characteristic(2)),
                  unsupported);
  CHECK_THROWS_AS(decide_overgroup(build_root_datum({Family::A, 2}),
                                   Weight{0, 0}, Characteristic(0)),
                  not_dominant);
}

TEST_CASE("closed-form dimensions") {
  auto c1 = tk3_dimension(1, {});
  CHECK(c1.odd_dimension_claim);
  CHECK_FALSE(c1.dimension.has_value());

  auto c2 = tk3_dimension(2, {3});
  CHECK(c2.dimension == Int(6));
  CHECK(*c2.dimension % 2 == 0);

  CHECK(tk3_dimension(3, {2, 3, 1}).dimension == Int(5));
  CHECK(tk3_dimension(3, {2, 3, 2}).dimension == Int(4));
  CHECK(tk3_dimension(3, {5, 7, 1}).dimension == Int((16807 + 1) / 2));

  CHECK_THROWS_AS(tk3_dimension(4, {}), invalid_case);
  CHECK_THROWS_AS(tk3_dimension(2, {4}), invalid_case);
  CHECK_THROWS_AS(tk3_dimension(3, {2, 4, 1}), invalid_case);
}

TEST_CASE("self-duality gates the indicator") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(0, 3);
  for (SimpleType t : std::vector<SimpleType>{
           {Family::A, 3}, {Family::A, 4}, {Family::D, 5}, {Family::E, 6}}) {
    const RootDatum& d = build_root_datum(t);
    for (int trial = 0; trial < 30; ++trial) {
      Weight v(static_cast<std::size_t>(t.rank));
      for (auto& c : v) c = coord(rng);
      if (is_zero(v)) continue;
      if (is_self_dual(d, v)) CHECK_NOTHROW(steinberg_indicator(d, v));
      else
        CHECK_THROWS_AS(steinberg_indicator(d, v), not_self_dual);
    }
  }
}
