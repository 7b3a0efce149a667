#ifndef CAYLEY_PUSHFORWARD_HPP
#define CAYLEY_PUSHFORWARD_HPP

#include <vector>

#include "cayley/f4roots.hpp"
#include "cayley/polyalg.hpp"

// Gysin pushforward of the fiberwise classes s_I along the Cayley-plane
// fibration BSpin(9) -> BF4, realized two independent ways: the three-coset
// rational-function sum, and a literal alternating sum over all 1152 Weyl
// elements. Also the substitution onto the rank-2 base classes x1, x2 and the
// two closed-form binomial expressions the engine is checked against.
namespace cayley::pushforward {

using exactnum::Int;
using exactnum::Rat;
using polyalg::Partition;
using polyalg::Poly;

struct PushforwardResult {
  Poly e_poly;  // 4 variables e1..e4, degree 2|I| - 8 when nonzero
  Poly x_poly;  // 2 variables x1, x2 after substitute_f
};

// Monomial symmetric polynomial s_I evaluated at the squares of the 8
// complementary roots r_i = (e1 +- e2 +- e3 +- e4)/2; a 4-variable polynomial.
Poly s_I_of_root_squares(const Partition& I);

// Product of the 16 Spin(9)-positive root forms (degree 16).
const Poly& spin9_euler();
// Product of all 24 F4-positive root forms (degree 24).
const Poly& f4_euler();

// Sum over the coset transversal {1, s4, s4 s3 s4} of w(s_I(r^2)) / w(prod r),
// assembled over a common denominator and exact-divided. Zero (verified, not
// assumed) when 2|I| < 8. Cached; references remain valid for the process
// lifetime.
const Poly& coset_pushforward(const Partition& I);

// (1 / e~(F4/T)) * sum over all 1152 Weyl elements w of sign(w) * w(t).
// Literal group sum: the subgroup part acts term-by-term as signed coordinate
// permutations and each coset representative is applied to the accumulated
// subgroup sum by linearity. Throws NotDivisibleError if t is not in the
// image of the alternation map (a bug indicator for our inputs).
Poly full_weyl_oracle(const Poly& t);

// Substitution (e1,e2,e3,e4) -> n_f * (x1, x1, x2, -x2); requires n_f >= 1.
Poly substitute_f(const Poly& e_poly, const Int& n_f);

// substitute_f(coset_pushforward(I), n_f), cached by (I, n_f).
const Poly& pushforward_x_poly(const Partition& I, const Int& n_f);

PushforwardResult pushforward_result(const Partition& I, const Int& n_f);

// 2 n_f^{2n-8} * sum_{k=2}^{n-2} [C(2n,2) - C(2n,2k)] x1^{2k-4} x2^{2n-2k-4};
// zero for n < 4 (empty range).
Poly closed_form_sn(long n, const Int& n_f);

// A summand of the (n1,n2) closed form whose stated monomial would carry a
// negative x2 exponent. The summation bound is taken literally, so any such
// term with a nonzero coefficient is reported here instead of being dropped
// silently; the engine cross-check treats a nonempty list as a finding.
struct DroppedTerm {
  long k;
  Rat coefficient;
  long x1_exp;
  long x2_exp;
};

struct ClosedFormSn1n2 {
  Poly poly;
  std::vector<DroppedTerm> discrepancies;
};

// -4 n_f^{n1+n2-8} * sum_{k=2}^{n1+n2-1} [bracket] x1^{2k-4} x2^{2n1+2n2-2k-4}
// with the seven-group bracket: four shifted binomials, the alternating
// half-sum, two binomial-window corrections, two indicator rows, the constant
// C(2n1+2n2,2)/2, and -3 at k in {n1, n2}. Requires n1 > n2 >= 1.
ClosedFormSn1n2 closed_form_sn1n2(long n1, long n2, const Int& n_f);

// Second derivation of closed_form_sn at n_f = 1: one-variable geometric
// series (1 + x^2 + x^4 + ...) against the even binomial expansions,
// truncated at degree 2n, then rehomogenized into (x1, x2).
Poly series_oracle_sn(long n);

// Coefficient of x1^a x2^b (zero for negative exponents).
Rat x_coefficient(const Poly& x_poly, long a, long b);

}  // namespace cayley::pushforward

#endif  // CAYLEY_PUSHFORWARD_HPP
