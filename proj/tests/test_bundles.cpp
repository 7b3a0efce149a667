#include "cayley/bundles.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/exactnum.hpp"
#include "cayley/pushforward.hpp"

#include "doctest.h"

using namespace cayley::bundles;
using cayley::exactnum::Int;
using cayley::exactnum::Rat;
using cayley::exactnum::binomial;
using cayley::exactnum::ord_p;
using cayley::polyalg::Partition;
using cayley::pushforward::closed_form_sn;
using cayley::pushforward::pushforward_x_poly;
using cayley::pushforward::x_coefficient;

namespace {

Int as_int(const Rat& r) {
  REQUIRE(r.get_den() == 1);
  return r.get_num();
}

}  // namespace

TEST_CASE("complete intersection invariants") {
  CompleteIntersection V{6, {2, 3}};
  CHECK(V.r() == 2);
  CHECK(V.degree_product() == 6);
  CHECK(V.sum_degree_powers(2) == 13);
  CHECK(V.sum_degree_powers(4) == 97);
  CHECK(V.sum_degree_powers(0) == 2);

  CompleteIntersection plain{4, {}};
  CHECK(plain.degree_product() == 1);
  CHECK(plain.sum_degree_powers(2) == 0);

  // tangent row coefficient m + r + 1 - sum d^{2n}
  CHECK(ci_sn_coefficient(V, 1) == 6 + 2 + 1 - 13);
  CHECK(ci_sn_coefficient(V, 2) == 6 + 2 + 1 - 97);
  CHECK(ci_sn_coefficient(plain, 3) == 5);
}

TEST_CASE("string bundles have vanishing defect by construction") {
  for (long m : {0L, 2L, 4L, 10L, 22L})
    for (long mp : {0L, 2L, 6L}) {
      CayleyBundleSpec spec = make_string_bundle(m, mp, 4);
      INFO("m=", m, " mp=", mp);
      CHECK(spec.n_f == 4);
      CHECK(spec.V.m == m);
      CHECK(spec.Vp.m == mp);
      CHECK(spec.total_real_dimension() == 16 + 2 * (m + mp));
      auto [c1, c2] = string_defect(spec);
      CHECK(c1 == 0);
      CHECK(c2 == 0);
      for (long d : spec.V.degrees) CHECK((d == 2 || d == 3));
    }

  // 4 n_f + m + 1 = 17 = 3*3 + 8*1: three quadrics and one cubic
  CayleyBundleSpec s = make_string_bundle(0, 0, 4);
  CHECK(s.V.degrees == std::vector<long>{2, 2, 2, 3});
  CHECK(s.V.degree_product() == 24);
}

TEST_CASE("string bundle preconditions") {
  CHECK_THROWS_AS(make_string_bundle(1, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_string_bundle(0, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_string_bundle(-2, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_string_bundle(0, 0, 0), std::invalid_argument);
  try {
    make_string_bundle(0, 0, 1);  // 4 + 0 + 1 = 5 < 14: no 2/3 split
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("raise n_f") != std::string::npos);
  }
}

TEST_CASE("hypersurface row numbers") {
  CHECK(milnor_sn(2, 4) == -binomial(9, 2));
  CHECK(milnor_sn(7, 4) == -binomial(9, 7));
  CHECK_THROWS_AS(milnor_sn(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(milnor_sn(8, 4), std::invalid_argument);
}

TEST_CASE("one-row number equals degree product times the binomial entry") {
  // (m, mp) = (22, 0) in dimension 60 carries s_15
  CayleyBundleSpec spec = make_string_bundle(22, 0, 4);
  Int deg = spec.V.degree_product() * spec.Vp.degree_product();
  Int entry = as_int(x_coefficient(closed_form_sn(15, 4), 22, 0));
  Int direct = s_n_total_space(spec, 15);
  CHECK(direct == deg * entry);
  CHECK(ord_p(direct, 5).value() == 1);

  // smallest case: the constant pushforward of s_4 over a point spec
  CayleyBundleSpec small = make_string_bundle(0, 0, 4);
  Int d2 = small.V.degree_product() * small.Vp.degree_product();
  CHECK(s_n_total_space(small, 4) == d2 * (-84));
}

TEST_CASE("dimension mismatches are rejected") {
  CayleyBundleSpec spec = make_string_bundle(2, 0, 4);  // dimension 20 = 4*5
  CHECK_NOTHROW(s_n_total_space(spec, 5));
  CHECK_THROWS_AS(s_n_total_space(spec, 6), std::invalid_argument);
  CHECK_THROWS_AS(s_n1n2_total_space(spec, 4, 2), std::invalid_argument);
  CHECK_NOTHROW(s_n1n2_total_space(spec, 3, 2));
}

TEST_CASE("two-row number assembles the fiber term and four base corrections") {
  // (m, mp) = (6, 0), dimension 28 = 4 * (4 + 3)
  CayleyBundleSpec spec = make_string_bundle(6, 0, 4);
  const long n1 = 4, n2 = 3;

  Rat main = x_coefficient(pushforward_x_poly(Partition{4, 3}, spec.n_f), 6, 0);
  Rat corr = 0;
  corr += Rat(ci_sn_coefficient(spec.V, n1)) *
          x_coefficient(pushforward_x_poly(Partition{3}, spec.n_f), 6 - 2 * n1, 0);
  corr += Rat(ci_sn_coefficient(spec.V, n2)) *
          x_coefficient(pushforward_x_poly(Partition{4}, spec.n_f), 6 - 2 * n2, 0);
  corr += Rat(ci_sn_coefficient(spec.Vp, n1)) *
          x_coefficient(pushforward_x_poly(Partition{3}, spec.n_f), 6, 0 - 2 * n1);
  corr += Rat(ci_sn_coefficient(spec.Vp, n2)) *
          x_coefficient(pushforward_x_poly(Partition{4}, spec.n_f), 6, 0 - 2 * n2);

  Int deg = spec.V.degree_product() * spec.Vp.degree_product();
  Int expect = deg * as_int(main + corr);
  CHECK(s_n1n2_total_space(spec, n1, n2) == expect);

  // the only surviving correction here is s_3(TW) against the constant s_4 image
  Rat surviving = Rat(ci_sn_coefficient(spec.V, n2)) * Rat(-84);
  CHECK(corr == surviving);
  CHECK(corr != 0);
}

TEST_CASE("combinations are linear and dimension-checked") {
  CayleyBundleSpec a = make_string_bundle(2, 0, 4);
  CayleyBundleSpec b = make_string_bundle(0, 2, 4);
  BordismCombination comb{{{Int(3), a}, {Int(-2), b}}};
  CHECK(s_n_combination(comb, 5) ==
        3 * s_n_total_space(a, 5) - 2 * s_n_total_space(b, 5));
  CHECK(s_n1n2_combination(comb, 3, 2) ==
        3 * s_n1n2_total_space(a, 3, 2) - 2 * s_n1n2_total_space(b, 3, 2));

  BordismCombination mixed{{{Int(1), a}, {Int(1), make_string_bundle(4, 0, 4)}}};
  CHECK_THROWS_AS(s_n_combination(mixed, 5), std::invalid_argument);
  CHECK_THROWS_AS(s_n1n2_combination(mixed, 3, 2), std::invalid_argument);

  BordismCombination empty;
  CHECK_THROWS_AS(s_n_combination(empty, 5), std::invalid_argument);
}
