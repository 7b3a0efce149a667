#ifndef CAYLEY_EXACTNUM_HPP
#define CAYLEY_EXACTNUM_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <vector>

// Exact integer / rational arithmetic and the p-adic toolkit: p-adic orders,
// binomials, Kummer carry counts, Lucas digit residues, generalized factorials
// and the Granville unit decomposition of binomial coefficients mod p^q, plus
// the Wolstenholme and Morley congruence checks.
namespace cayley::exactnum {

using Int = mpz_class;
using Rat = mpq_class;

// p-adic order with a distinguished value for ord_p(0) = infinity.
class PadicOrder {
 public:
  static PadicOrder infinity() { return PadicOrder(true, 0); }
  static PadicOrder finite(long v) { return PadicOrder(false, v); }

  bool is_infinite() const { return infinite_; }
  // Finite value; calling this on the infinite order is a programming error.
  long value() const {
    if (infinite_) throw std::logic_error("PadicOrder: value() of infinity");
    return value_;
  }

  // Additivity ord(ab) = ord(a) + ord(b) extends to infinity absorbingly.
  PadicOrder operator+(const PadicOrder& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return finite(value_ + o.value_);
  }
  bool operator==(const PadicOrder& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  bool operator!=(const PadicOrder& o) const { return !(*this == o); }
  // infinity compares greater than every finite order.
  bool operator<(const PadicOrder& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }
  bool operator<=(const PadicOrder& o) const { return *this < o || *this == o; }

 private:
  PadicOrder(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

std::ostream& operator<<(std::ostream& os, const PadicOrder& o);

// Deterministic primality for the scan ranges used here (trial division below
// 2^32, strengthened probable-prime testing above; all artifact inputs are
// far below the first gap in either method).
bool is_prime(const Int& n);

// Throws std::invalid_argument unless p is a prime.
void require_prime(const Int& p);

// ord_p(x): exact p-adic order; ord_p(0) is the infinite order.
PadicOrder ord_p(const Int& x, const Int& p);
PadicOrder ord_p(const Rat& x, const Int& p);

// C(n, k). k outside [0, n] yields 0; negative n is rejected.
Int binomial(const Int& n, const Int& k);
Int binomial(long n, long k);

// Base-p digits, least significant first. reconstruct() re-evaluates the
// expansion and must return the original value.
struct DigitExpansion {
  Int base;
  std::vector<long> digits;

  static DigitExpansion of(const Int& n, const Int& p);
  Int reconstruct() const;
  long digit(std::size_t j) const { return j < digits.size() ? digits[j] : 0; }
};

// Number of carries when adding m + r in base p; equals ord_p C(m+r, m).
long kummer_carries(const Int& m, const Int& r, const Int& p);

// prod_j C(n_j, k_j) mod p over base-p digits; equals C(n, k) mod p.
long lucas_residue(const Int& n, const Int& k, const Int& p);

// (n!)_p mod modulus: the product of all 1 <= k <= n coprime to p, where
// modulus is the prime power p^q. Literal running product.
Int generalized_factorial_p(const Int& n, const Int& p, const Int& modulus);
// Same value computed via the p^q-periodicity of the unit blocks; kept as an
// optional fast path, guarded by the literal product in tests.
Int generalized_factorial_p_periodic(const Int& n, const Int& p, const Int& modulus);

// Working data for the binomial decomposition mod p^q: base-p digit windows
// N_j, M_j, R_j of length q for n, m, r = n - m, and the suffix carry counts
// e_j (carries of m + r on or beyond digit j). e_0 = ord_p C(n, m).
struct GranvilleContext {
  Int p;
  long q = 0;
  Int modulus;  // p^q
  std::vector<Int> N, M, R;
  std::vector<long> e;

  static GranvilleContext build(const Int& n, const Int& m, const Int& p, long q);
  long e_at(std::size_t j) const { return j < e.size() ? e[j] : 0; }
};

// C(n, m) = p^e0 * unit with the unit given mod p^q as
//   (+-1)^{e_{q-1}} * prod_j (N_j!)_p / ((M_j!)_p (R_j!)_p),
// the sign being -1 except when p = 2 and q >= 3. unit is reduced to [0, p^q).
struct GranvilleResult {
  long e0 = 0;
  Int unit;
};
GranvilleResult granville_binomial(const Int& n, const Int& m, const Int& p, long q);

// Numerator of H_{p-1} = 1 + 1/2 + ... + 1/(p-1) has ord_p >= 2 (p > 3).
bool wolstenholme_check(const Int& p);

// (-1)^{(p-1)/2} C(p-1, (p-1)/2) == 2^{2(p-1)} mod p^2 (p > 3).
bool morley_check(const Int& p);

// Exact harmonic number H_n as a rational (used by the Wolstenholme check).
Rat harmonic(long n);

// Odd primes in [lo, hi], ascending.
std::vector<long> odd_primes_in(long lo, long hi);

}  // namespace cayley::exactnum

#endif  // CAYLEY_EXACTNUM_HPP
