#ifndef CAYLEY_BUNDLES_HPP
#define CAYLEY_BUNDLES_HPP

#include <utility>
#include <vector>

#include "cayley/exactnum.hpp"
#include "cayley/pushforward.hpp"

// Cayley-plane bundles over products of complete intersections: the string
// condition on the total space and the characteristic numbers s_n[E] and
// s_{n1,n2}[E], evaluated against the fundamental class of the base.
namespace cayley::bundles {

using exactnum::Int;
using polyalg::Partition;

// V^m(d_1,...,d_r): smooth complete intersection of hypersurfaces of the
// listed degrees in CP^{m+r}; m is the complex dimension. m = 0 is allowed
// (a degree_product-sized set of points).
struct CompleteIntersection {
  long m = 0;
  std::vector<long> degrees;

  long r() const { return static_cast<long>(degrees.size()); }
  Int degree_product() const;
  Int sum_degree_powers(long e) const;  // sum_j d_j^e
};

// Total space E of a Cayley-plane bundle over W = V x V', classified so that
// (e1,...,e4) pull back to n_f * (x1, x1, x2, -x2); x1, x2 are the hyperplane
// classes of the two factors.
struct CayleyBundleSpec {
  Int n_f = 1;
  CompleteIntersection V;   // carries x1
  CompleteIntersection Vp;  // carries x2

  long total_real_dimension() const { return 16 + 2 * (V.m + Vp.m); }
};

// Z-linear combination of total spaces of a common dimension.
struct BordismCombination {
  std::vector<std::pair<Int, CayleyBundleSpec>> terms;
};

// Coefficient of x^{2n} in s_n of the tangent bundle of V: m + r + 1 - sum_j d_j^{2n}.
Int ci_sn_coefficient(const CompleteIntersection& V, long n);

// Coefficients (c1, c2) of x1^2, x2^2 in half the first Pontrjagin class of
// the total space: c = 4 n_f + m + 1 + r - sum_j d_j^2 per factor. The total
// space is string iff both vanish.
std::pair<Int, Int> string_defect(const CayleyBundleSpec& spec);

// Degrees chosen as a 2's and b 3's with 3a + 8b = 4 n_f + m + 1 (and
// likewise for the primed factor), which makes string_defect exactly (0,0).
// Requires m, m' non-negative and even, and 4 n_f + m + 1 >= 14 for both
// factors; throws std::invalid_argument telling the caller to raise n_f
// otherwise.
CayleyBundleSpec make_string_bundle(long m, long mp, const Int& n_f);

// s_n[E] = (prod d)(prod d') * coefficient of x1^m x2^{m'} in the substituted
// pushforward of s_n. Requires the dimension match 2(m+m') + 16 = 4n.
Int s_n_total_space(const CayleyBundleSpec& spec, long n);

// s_{n1,n2}[E]: the fiberwise term plus the four base corrections
// s_{n1}(TW)-times-s_{n2} and s_{n2}(TW)-times-s_{n1}, each base factor
// contributing through ci_sn_coefficient. Requires 2(m+m') + 16 = 4(n1+n2).
Int s_n1n2_total_space(const CayleyBundleSpec& spec, long n1, long n2);

// s_n of the degree-(1,1) hypersurface in CP^i x CP^{2n-i}: -C(2n+1, i).
// Requires 1 < i < 2n.
Int milnor_sn(long i, long n);

// Linear extensions to combinations; all terms must share one dimension.
Int s_n_combination(const BordismCombination& comb, long n);
Int s_n1n2_combination(const BordismCombination& comb, long n1, long n2);

}  // namespace cayley::bundles

#endif  // CAYLEY_BUNDLES_HPP
