#ifndef CAYLEY_GENERATORS_HPP
#define CAYLEY_GENERATORS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cayley/bundles.hpp"
#include "cayley/exactnum.hpp"

// Generator families for the string-bordism scan: the dimension-4n
// combinations M with s_n equal to the binomial-difference GCD, and the
// dimension-2(p^i+p^j) differences N with vanishing top s-number and
// s_{n1,n2} a unit times p. Includes the mod-p^2 coefficient and
// binomial-sum congruence checks that feed the N construction.
namespace cayley::generators {

using exactnum::Int;

struct PrimeOrd {
  long p = 0;
  long observed = 0;
  int predicted = 0;
  bool pass = false;
};

enum class Family { M, N };

struct GeneratorReport {
  Family family = Family::M;
  long n = 0;                  // s-index: M uses s_n, N uses n = n1 + n2
  long n1 = 0, n2 = 0;         // N only: the two-row index
  long p = 0, i = 0, j = 0;    // N only: the (p, i, j) parameters
  long dimension = 0;          // real dimension of every term
  Int n_f = 0;                 // the twisting integer shared by all terms
  bundles::BordismCombination combination;

  Int s_value = 0;  // M: s_n of the combination; N: s_{n1,n2} of it
  std::vector<PrimeOrd> prime_table;  // M only: primes 5 <= p <= 2n+1

  // N only: the top s-number of the combination and the per-bundle data
  // behind it.
  Int s_top = 0;
  Int s_top_e1 = 0, s_top_e2 = 0;  // s_{n1+n2} of E1, E2
  Int snn_e1 = 0, snn_e2 = 0;      // s_{n1,n2} of E1, E2
  bool top_vanishes = false;
  bool snn_nonzero_mod_p2 = false;
  bool ord_inequality = false;

  bool pass = false;
  std::vector<std::string> failures;  // violated clauses, named
  std::string error;                  // nonempty if construction itself failed
};

// Combination of string bundles over every split m = 2k-4, m' = 2n-2k-4
// (2 <= k <= n-2) whose s_n realizes the GCD of the individual values:
// iterated extended GCD in ascending k, final value canonicalized positive.
// One n_f serves all splits: the smallest making every factor dimension
// feasible. The per-prime table compares ord_p(s_value) with the
// binomial-difference classifier for odd primes 5 <= p <= 2n+1 (p = 2, 3 are
// outside the classifier's scope); prime_cap > 0 lowers the table's upper
// bound. Requires n >= 4.
GeneratorReport construct_M(long n, long prime_cap = 0);

// Difference N = LCM(s1, s2) * (E1/s1 - E2/s2) of two string bundles in
// dimension 2(p^i + p^j), where s_k = s_{n1+n2}[E_k], n1 = (p^j - 1)/2,
// n2 = (p^i + 1)/2, E1 has base exponents (p^j - 3, p^i - 5), E2 has
// (p^{j-1} - 3, p^j - p^{j-1} + p^i - 5), and n_f is the smallest feasible
// value that is neither 0 nor 1 mod p (s_{n1,n2}[E2] collapses mod p^2 for
// n_f(n_f-1) divisible by p). Checks: s_{n1+n2}[N] == 0 exactly,
// s_{n1,n2}[N] not divisible by p^2, and ord_p s1 <= ord_p s2. Requires
// p prime > 3, 0 < i < j, and p^j within the cap (heavy polynomial work grows
// quickly past it). Throws if either s_k vanishes.
GeneratorReport construct_N(long p, long i, long j, long pj_cap = 50);

// Coefficient congruences of the two-row pushforward at n_f = 1: the
// coefficient at (x1, x2)-exponents (p^j - 3, p^i - 5) is divisible by p^2
// (part 1) and the one at (p^{j-1} - 3, p^j - p^{j-1} + p^i - 5) is congruent
// to 8p mod p^2 (part 2).
std::pair<bool, bool> verify_cor_sn1n2eta(long p, long i, long j);

// Exact alternating binomial sums behind part 2, reduced mod p^2 with 1/2 as
// the inverse of 2:
//   A = (1/2) sum_{l=0}^{(p^j+1)/2}     (-1)^l C(p^i+1, l) C(p^j-p^i-2, p^j-2l+1)
//       == 2^p - 1 - (1/2) p^i,
//   B = (1/2) sum_{l=0}^{(p^{j-1}+1)/2} (-1)^l C(p^i+1, l) C(p^j-p^i-2, p^{j-1}-2l+1)
//       == 2^p - p.
bool verify_A_congruence(long p, long i, long j);
bool verify_B_congruence(long p, long i, long j);

struct TheoremReport {
  long dim_cap = 0;
  long prime_cap = 0;
  std::vector<GeneratorReport> m_reports;  // n = 4 .. dim_cap, ascending
  std::vector<GeneratorReport> n_reports;  // (p, i, j) ascending, p^i+p^j <= 2*dim_cap
  bool pass = false;
};

// Full scan: construct_M for 4 <= n <= dim_cap and construct_N for every
// prime 3 < p <= prime_cap and 0 < i < j with p^i + p^j <= 2*dim_cap.
// Failures (including exceptions from individual constructions) are recorded
// per entry; the scan never short-circuits. Tasks are sharded across
// `threads` workers; the report order is by task index, independent of
// scheduling.
TheoremReport check_theorem_conditions(long dim_cap, long prime_cap, int threads = 1);

}  // namespace cayley::generators

#endif  // CAYLEY_GENERATORS_HPP
