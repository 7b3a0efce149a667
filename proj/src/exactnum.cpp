#include "cayley/exactnum.hpp"

#include <ostream>

namespace cayley::exactnum {

std::ostream& operator<<(std::ostream& os, const PadicOrder& o) {
  if (o.is_infinite()) return os << "inf";
  return os << o.value();
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (n < (Int(1) << 32)) {
    // Deterministic trial division; the scans here stay far below 2^32.
    for (Int d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

void require_prime(const Int& p) {
  if (!is_prime(p))
    throw std::invalid_argument("expected a prime, got " + p.get_str());
}

PadicOrder ord_p(const Int& x, const Int& p) {
  require_prime(p);
  if (x == 0) return PadicOrder::infinity();
  Int reduced;
  mp_bitcnt_t k = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return PadicOrder::finite(static_cast<long>(k));
}

PadicOrder ord_p(const Rat& x, const Int& p) {
  if (x == 0) {
    require_prime(p);
    return PadicOrder::infinity();
  }
  long num = ord_p(Int(x.get_num()), p).value();
  long den = ord_p(Int(x.get_den()), p).value();
  return PadicOrder::finite(num - den);
}

Int binomial(const Int& n, const Int& k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  if (!n.fits_ulong_p())
    throw std::invalid_argument("binomial: upper index too large");
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

Int binomial(long n, long k) { return binomial(Int(n), Int(k)); }

DigitExpansion DigitExpansion::of(const Int& n, const Int& p) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("DigitExpansion: negative value");
  DigitExpansion out;
  out.base = p;
  Int rest = n;
  while (rest > 0) {
    Int digit = rest % p;
    out.digits.push_back(digit.get_si());
    rest /= p;
  }
  return out;
}

Int DigitExpansion::reconstruct() const {
  Int acc = 0;
  for (std::size_t j = digits.size(); j-- > 0;) acc = acc * base + digits[j];
  return acc;
}

long kummer_carries(const Int& m, const Int& r, const Int& p) {
  require_prime(p);
  if (m < 0 || r < 0) throw std::invalid_argument("kummer_carries: negative addend");
  // carry out of digit i equals floor(n/p^{i+1}) - floor(m/p^{i+1}) - floor(r/p^{i+1}).
  Int n = m + r;
  long carries = 0;
  Int nn = n / p, mm = m / p, rr = r / p;
  while (nn > 0) {
    carries += Int(nn - mm - rr).get_si();
    nn /= p;
    mm /= p;
    rr /= p;
  }
  return carries;
}

long lucas_residue(const Int& n, const Int& k, const Int& p) {
  require_prime(p);
  if (n < 0 || k < 0) throw std::invalid_argument("lucas_residue: negative index");
  Int nn = n, kk = k, acc = 1;
  while (kk > 0 || nn > 0) {
    Int nd = nn % p, kd = kk % p;
    acc = (acc * binomial(nd, kd)) % p;
    if (acc == 0) return 0;
    nn /= p;
    kk /= p;
  }
  return acc.get_si();
}

Int generalized_factorial_p(const Int& n, const Int& p, const Int& modulus) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("generalized_factorial_p: negative n");
  if (modulus <= 1 || !is_prime(p))
    throw std::invalid_argument("generalized_factorial_p: bad modulus");
  Int acc = 1;
  for (Int k = 1; k <= n; ++k) {
    if (k % p == 0) continue;
    acc = (acc * k) % modulus;
  }
  return acc;
}

Int generalized_factorial_p_periodic(const Int& n, const Int& p, const Int& modulus) {
  // The unit group of Z/p^q has product -1 (odd p; also p=2,q<3), so each full
  // block of p^q consecutive integers contributes (-1) times nothing new.
  require_prime(p);
  if (n < 0) throw std::invalid_argument("generalized_factorial_p: negative n");
  Int blocks = n / modulus, tail = n % modulus;
  Int block_sign = 1;
  if (!(p == 2 && modulus >= 8)) block_sign = -1;
  Int acc = 1;
  if (mpz_odd_p(blocks.get_mpz_t()) && block_sign == -1) acc = modulus - 1;
  for (Int k = 1; k <= tail; ++k) {
    if (k % p == 0) continue;
    acc = (acc * k) % modulus;
  }
  return acc;
}

GranvilleContext GranvilleContext::build(const Int& n, const Int& m, const Int& p, long q) {
  require_prime(p);
  if (q < 1) throw std::invalid_argument("GranvilleContext: q must be >= 1");
  if (m < 0 || m > n) throw std::invalid_argument("GranvilleContext: need 0 <= m <= n");
  GranvilleContext ctx;
  ctx.p = p;
  ctx.q = q;
  mpz_pow_ui(ctx.modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(q));

  Int r = n - m;
  DigitExpansion dn = DigitExpansion::of(n, p);
  DigitExpansion dm = DigitExpansion::of(m, p);
  DigitExpansion dr = DigitExpansion::of(r, p);
  std::size_t d = dn.digits.size();  // n >= m, r so n has the most digits

  auto window = [&](const DigitExpansion& e, std::size_t j) {
    Int acc = 0;
    for (long t = q; t-- > 0;) acc = acc * p + e.digit(j + static_cast<std::size_t>(t));
    return acc;
  };
  for (std::size_t j = 0; j < d; ++j) {
    ctx.N.push_back(window(dn, j));
    ctx.M.push_back(window(dm, j));
    ctx.R.push_back(window(dr, j));
  }

  // Suffix carry counts: e_j = #(carries at digit positions >= j).
  std::vector<int> carry(d, 0);
  Int nn = n / p, mm = m / p, rr = r / p;
  for (std::size_t i = 0; i < d; ++i) {
    carry[i] = static_cast<int>(Int(nn - mm - rr).get_si());
    nn /= p;
    mm /= p;
    rr /= p;
  }
  ctx.e.assign(d, 0);
  long suffix = 0;
  for (std::size_t j = d; j-- > 0;) {
    suffix += carry[j];
    ctx.e[j] = suffix;
  }
  return ctx;
}

GranvilleResult granville_binomial(const Int& n, const Int& m, const Int& p, long q) {
  GranvilleContext ctx = GranvilleContext::build(n, m, p, q);
  const Int& pq = ctx.modulus;

  Int unit = 1;
  for (std::size_t j = 0; j < ctx.N.size(); ++j) {
    Int num = generalized_factorial_p(ctx.N[j], p, pq);
    Int den = (generalized_factorial_p(ctx.M[j], p, pq) *
               generalized_factorial_p(ctx.R[j], p, pq)) % pq;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pq.get_mpz_t()) == 0)
      throw std::logic_error("granville_binomial: factorial unit not invertible");
    unit = (unit * num % pq) * inv % pq;
  }

  // Sign (+-1)^{e_{q-1}}: the base is -1 except in the p=2, q>=3 regime.
  bool base_is_minus_one = !(p == 2 && q >= 3);
  if (base_is_minus_one && ctx.e_at(static_cast<std::size_t>(q) - 1) % 2 != 0)
    unit = (pq - unit) % pq;

  GranvilleResult res;
  res.e0 = ctx.e_at(0);
  res.unit = unit;
  return res;
}

Rat harmonic(long n) {
  Rat acc = 0;
  for (long k = 1; k <= n; ++k) acc += Rat(1, k);
  return acc;
}

bool wolstenholme_check(const Int& p) {
  require_prime(p);
  if (p <= 3) throw std::invalid_argument("wolstenholme_check: need p > 3");
  Rat h = harmonic(p.get_si() - 1);
  PadicOrder o = ord_p(Rat(h.get_num()), p);
  return PadicOrder::finite(2) <= o;
}

bool morley_check(const Int& p) {
  require_prime(p);
  if (p <= 3) throw std::invalid_argument("morley_check: need p > 3");
  Int p2 = p * p;
  long half = (p.get_si() - 1) / 2;
  Int lhs = binomial(p - 1, Int(half)) % p2;
  if (half % 2 != 0) lhs = (p2 - lhs) % p2;
  Int rhs, two = 2;
  Int expo = 2 * (p - 1);
  mpz_powm(rhs.get_mpz_t(), two.get_mpz_t(), expo.get_mpz_t(), p2.get_mpz_t());
  return lhs == rhs;
}

std::vector<long> odd_primes_in(long lo, long hi) {
  std::vector<long> out;
  if (lo < 3) lo = 3;
  for (long p = lo | 1; p <= hi; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace cayley::exactnum
