#include "cayley/bundles.hpp"

#include <stdexcept>
#include <string>

#include "cayley/gcdlaws.hpp"

namespace cayley::bundles {

using exactnum::Rat;
using exactnum::binomial;
using pushforward::pushforward_x_poly;
using pushforward::x_coefficient;

Int CompleteIntersection::degree_product() const {
  Int prod = 1;
  for (long d : degrees) prod *= d;
  return prod;
}

Int CompleteIntersection::sum_degree_powers(long e) const {
  Int sum = 0;
  Int power;
  for (long d : degrees) {
    mpz_pow_ui(power.get_mpz_t(), Int(d).get_mpz_t(), static_cast<unsigned long>(e));
    sum += power;
  }
  return sum;
}

Int ci_sn_coefficient(const CompleteIntersection& V, long n) {
  if (n < 1) throw std::invalid_argument("ci_sn_coefficient: n must be positive");
  return Int(V.m + V.r() + 1) - V.sum_degree_powers(2 * n);
}

std::pair<Int, Int> string_defect(const CayleyBundleSpec& spec) {
  auto defect = [&](const CompleteIntersection& V) -> Int {
    return 4 * spec.n_f + V.m + 1 + V.r() - V.sum_degree_powers(2);
  };
  return {defect(spec.V), defect(spec.Vp)};
}

namespace {

CompleteIntersection string_factor(long m, const Int& n_f) {
  if (m < 0 || m % 2 != 0)
    throw std::invalid_argument("make_string_bundle: factor dimensions must be even and non-negative");
  Int target = 4 * n_f + m + 1;
  if (target < 14)
    throw std::invalid_argument(
        "make_string_bundle: need 4*n_f + m + 1 >= 14 for each factor (got " +
        target.get_str() + " at m=" + std::to_string(m) + "); raise n_f");
  auto [a, b] = gcdlaws::two_three_squares(target.get_si());
  CompleteIntersection V;
  V.m = m;
  V.degrees.assign(static_cast<size_t>(a), 2);
  V.degrees.insert(V.degrees.end(), static_cast<size_t>(b), 3);
  return V;
}

// Coefficient of x1^a x2^b, checked to be an integer.
Int integral_coefficient(const Rat& c, const char* what) {
  if (c.get_den() != 1)
    throw std::logic_error(std::string(what) + ": expected an integer coefficient, got " +
                           c.get_str());
  return c.get_num();
}

void require_dimension(const CayleyBundleSpec& spec, long weight, const char* what) {
  if (2 * (spec.V.m + spec.Vp.m) + 16 != 4 * weight)
    throw std::invalid_argument(std::string(what) + ": total dimension " +
                                std::to_string(spec.total_real_dimension()) +
                                " does not match 4n = " + std::to_string(4 * weight));
}

}  // namespace

CayleyBundleSpec make_string_bundle(long m, long mp, const Int& n_f) {
  if (n_f < 1) throw std::invalid_argument("make_string_bundle: n_f must be positive");
  CayleyBundleSpec spec;
  spec.n_f = n_f;
  spec.V = string_factor(m, n_f);
  spec.Vp = string_factor(mp, n_f);
  return spec;
}

Int s_n_total_space(const CayleyBundleSpec& spec, long n) {
  require_dimension(spec, n, "s_n_total_space");
  const auto& poly = pushforward_x_poly(Partition({static_cast<int>(n)}), spec.n_f);
  Rat coeff = x_coefficient(poly, spec.V.m, spec.Vp.m);
  return spec.V.degree_product() * spec.Vp.degree_product() *
         integral_coefficient(coeff, "s_n_total_space");
}

Int s_n1n2_total_space(const CayleyBundleSpec& spec, long n1, long n2) {
  if (n1 < n2) std::swap(n1, n2);
  if (n2 < 1) throw std::invalid_argument("s_n1n2_total_space: parts must be positive");
  require_dimension(spec, n1 + n2, "s_n1n2_total_space");
  const long m = spec.V.m;
  const long mp = spec.Vp.m;

  const auto& main_poly =
      pushforward_x_poly(Partition({static_cast<int>(n1), static_cast<int>(n2)}), spec.n_f);
  Rat total = x_coefficient(main_poly, m, mp);

  // s_{n1}(TW) = cV(n1) x1^{2n1} + cV'(n1) x2^{2n1} shifts the coefficient
  // extraction on the complementary single-row pushforward, and symmetrically
  // for n2.
  const auto& p1 = pushforward_x_poly(Partition({static_cast<int>(n1)}), spec.n_f);
  const auto& p2 = pushforward_x_poly(Partition({static_cast<int>(n2)}), spec.n_f);
  total += ci_sn_coefficient(spec.V, n1) * x_coefficient(p2, m - 2 * n1, mp);
  total += ci_sn_coefficient(spec.Vp, n1) * x_coefficient(p2, m, mp - 2 * n1);
  total += ci_sn_coefficient(spec.V, n2) * x_coefficient(p1, m - 2 * n2, mp);
  total += ci_sn_coefficient(spec.Vp, n2) * x_coefficient(p1, m, mp - 2 * n2);

  return spec.V.degree_product() * spec.Vp.degree_product() *
         integral_coefficient(total, "s_n1n2_total_space");
}

Int milnor_sn(long i, long n) {
  if (!(1 < i && i < 2 * n))
    throw std::invalid_argument("milnor_sn: need 1 < i < 2n");
  return -binomial(Int(2 * n + 1), Int(i));
}

namespace {

long combination_dimension(const BordismCombination& comb, const char* what) {
  if (comb.terms.empty())
    throw std::invalid_argument(std::string(what) + ": empty combination");
  long dim = comb.terms.front().second.total_real_dimension();
  for (const auto& [c, spec] : comb.terms)
    if (spec.total_real_dimension() != dim)
      throw std::invalid_argument(std::string(what) + ": mixed dimensions in combination");
  return dim;
}

}  // namespace

Int s_n_combination(const BordismCombination& comb, long n) {
  combination_dimension(comb, "s_n_combination");
  Int sum = 0;
  for (const auto& [c, spec] : comb.terms) sum += c * s_n_total_space(spec, n);
  return sum;
}

Int s_n1n2_combination(const BordismCombination& comb, long n1, long n2) {
  combination_dimension(comb, "s_n1n2_combination");
  Int sum = 0;
  for (const auto& [c, spec] : comb.terms) sum += c * s_n1n2_total_space(spec, n1, n2);
  return sum;
}

}  // namespace cayley::bundles
