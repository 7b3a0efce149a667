#ifndef CAYLEY_GCDLAWS_HPP
#define CAYLEY_GCDLAWS_HPP

#include <array>
#include <vector>

#include "cayley/exactnum.hpp"

// Divisibility laws for rows of binomial coefficients: brute-force GCDs of
// binomial families, the prime-power classifiers predicting their p-adic
// orders, and the quadratic-form degree selectors (n = 3a + 8b and the
// four-square product GCD cycle) used when building string bundles.
namespace cayley::gcdlaws {

using exactnum::Int;

enum class GcdKind { Row, Even, Diff };

enum class OrdClassifier { RowPower, TwoPrimePowers, PowerMinusOne, None };

struct OrdPattern {
  OrdClassifier classifier = OrdClassifier::None;
  int predicted = 0;
};

// GCD_{1 < i < 2n} C(2n+1, i), n > 1.
Int gcd_row(long n);

// GCD_{0 < k < n} C(2n, 2k), n > 1.
Int gcd_even(long n);

// GCD_{1 < k < n-1} | C(2n, 2) - C(2n, 2k) |, n >= 4.
Int gcd_diff(long n);

// Predicted ord_p of the matching GCD family at an odd prime p:
//   Row:  1 iff 2n+1 = p^i (i > 0)
//   Even: 1 iff 2n = p^i + p^j (0 <= i <= j)
//   Diff: 1 iff 2n = p^i - 1 (i > 0) or 2n = p^i + p^j (0 <= i <= j)
// and 0 otherwise.
OrdPattern classify(GcdKind kind, long n, const Int& p);
int predicted_ord(GcdKind kind, long n, const Int& p);

// n = 3a + 8b with a = 3n - 8*ceil(n/3), b = 3*ceil(n/3) - n; valid for n >= 14.
// a copies of degree 2 and b of degree 3 then satisfy n + (a+b) = 4a + 9b.
struct TwoThreeSquares {
  long a = 0;
  long b = 0;
};
TwoThreeSquares two_three_squares(long n);

// All representations 4n+5 = d1^2 + ... + d4^2 with 0 < d1 <= ... <= d4.
std::vector<std::array<long, 4>> four_square_representations(long s);

// GCD over those representations of the products d1*d2*d3*d4.
Int four_square_gcd(long n);

// For n >= 25 the four-square GCD follows a 6-cycle in n.
std::array<long, 6> four_square_cycle();

}  // namespace cayley::gcdlaws

#endif  // CAYLEY_GCDLAWS_HPP
