#include "cayley/exactnum.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace cayley::exactnum;

TEST_CASE("padic order values and comparisons") {
  PadicOrder inf = PadicOrder::infinity();
  PadicOrder two = PadicOrder::finite(2);
  CHECK(inf.is_infinite());
  CHECK_FALSE(two.is_infinite());
  CHECK(two.value() == 2);
  CHECK_THROWS_AS(inf.value(), std::logic_error);

  CHECK((two + PadicOrder::finite(3)) == PadicOrder::finite(5));
  CHECK((two + inf).is_infinite());
  CHECK((inf + inf).is_infinite());

  CHECK(two < inf);
  CHECK_FALSE(inf < two);
  CHECK_FALSE(inf < inf);
  CHECK(two <= PadicOrder::finite(2));
  CHECK(PadicOrder::finite(1) < two);
  CHECK(inf == PadicOrder::infinity());
  CHECK(inf != two);
}

TEST_CASE("ord_p on integers and rationals") {
  CHECK(ord_p(Int(0), Int(5)).is_infinite());
  CHECK(ord_p(Int(45), Int(3)) == PadicOrder::finite(2));
  CHECK(ord_p(Int(45), Int(5)) == PadicOrder::finite(1));
  CHECK(ord_p(Int(-45), Int(3)) == PadicOrder::finite(2));
  CHECK(ord_p(Int(7), Int(5)) == PadicOrder::finite(0));

  CHECK(ord_p(Rat(45, 8), Int(2)) == PadicOrder::finite(-3));
  CHECK(ord_p(Rat(9, 4), Int(3)) == PadicOrder::finite(2));
  CHECK(ord_p(Rat(0), Int(7)).is_infinite());

  CHECK_THROWS_AS(ord_p(Int(5), Int(4)), std::invalid_argument);
}

TEST_CASE("primality helpers") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(3)));
  CHECK(is_prime(Int(61)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(91)));  // 7 * 13
  CHECK_NOTHROW(require_prime(Int(13)));
  CHECK_THROWS_AS(require_prime(Int(12)), std::invalid_argument);

  CHECK(odd_primes_in(3, 30) ==
        std::vector<long>{3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(odd_primes_in(5, 5) == std::vector<long>{5});
  CHECK(odd_primes_in(2, 2).empty());
  CHECK(odd_primes_in(10, 4).empty());
}

TEST_CASE("binomial values and edges") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(Int(600), Int(300)) % Int(601) != 0);  // 601 is prime
  CHECK_THROWS_AS(binomial(Int(-1), Int(0)), std::invalid_argument);

  for (long n = 0; n <= 30; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(Int(n), Int(k)));
}

TEST_CASE("digit expansions round-trip") {
  DigitExpansion d = DigitExpansion::of(Int(1234), Int(7));
  CHECK(d.digits == std::vector<long>{2, 1, 4, 3});  // 1234 = 2 + 7 + 4*49 + 3*343
  CHECK(d.digit(0) == 2);
  CHECK(d.digit(9) == 0);
  CHECK(d.reconstruct() == 1234);

  for (long n : {0L, 1L, 7L, 124L, 625L, 9999L})
    for (long p : {2L, 3L, 5L, 7L})
      CHECK(DigitExpansion::of(Int(n), Int(p)).reconstruct() == n);
}

TEST_CASE("kummer carries equal the p-adic order of the binomial") {
  for (long p : {2L, 3L, 5L, 7L})
    for (long n = 0; n <= 60; ++n)
      for (long k = 0; k <= n; ++k) {
        long carries = kummer_carries(Int(k), Int(n - k), Int(p));
        CHECK(PadicOrder::finite(carries) == ord_p(binomial(n, k), Int(p)));
      }
}

TEST_CASE("lucas residues equal the binomial mod p") {
  for (long p : {2L, 3L, 5L, 13L})
    for (long n = 0; n <= 60; ++n)
      for (long k = 0; k <= n; ++k) {
        Int expect = binomial(n, k) % p;
        CHECK(lucas_residue(Int(n), Int(k), Int(p)) == expect.get_si());
      }
}

TEST_CASE("generalized factorial: periodic route equals the literal product") {
  for (long p : {2L, 3L, 5L})
    for (long q = 1; q <= 3; ++q) {
      Int modulus;
      mpz_pow_ui(modulus.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(q));
      for (long n = 0; n <= 200; ++n) {
        Int lit = generalized_factorial_p(Int(n), Int(p), modulus);
        Int per = generalized_factorial_p_periodic(Int(n), Int(p), modulus);
        CHECK(lit == per);
        CHECK(lit % p != 0);  // product of units stays a unit
      }
    }
}

TEST_CASE("binomial unit decomposition reconstructs the binomial mod p^q") {
  for (long p : {2L, 3L, 5L, 7L})
    for (long q = 1; q <= 3; ++q) {
      Int modulus;
      mpz_pow_ui(modulus.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(q));
      for (long n = 0; n <= 120; ++n)
        for (long k = 0; k <= n; k += 3) {
          GranvilleResult r = granville_binomial(Int(n), Int(k), Int(p), q);
          CHECK(r.e0 == kummer_carries(Int(k), Int(n - k), Int(p)));
          CHECK(r.unit % p != 0);
          CHECK(r.unit >= 0);
          CHECK(r.unit < modulus);
          Int pe;
          long e = r.e0 < q ? r.e0 : q;
          mpz_pow_ui(pe.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(e));
          Int recon = (pe * r.unit) % modulus;
          Int direct = binomial(n, k) % modulus;
          CHECK(recon == direct);
        }
    }
}

TEST_CASE("digit-window context bookkeeping") {
  GranvilleContext ctx = GranvilleContext::build(Int(123), Int(45), Int(5), 2);
  CHECK(ctx.q == 2);
  CHECK(ctx.modulus == 25);
  CHECK(ctx.N.size() == ctx.M.size());
  CHECK(ctx.M.size() == ctx.R.size());
  CHECK(ctx.e_at(0) == kummer_carries(Int(45), Int(78), Int(5)));
  CHECK(ctx.e_at(99) == 0);
}

TEST_CASE("harmonic numbers are exact rationals") {
  CHECK(harmonic(1) == Rat(1));
  CHECK(harmonic(4) == Rat(25, 12));
  CHECK(harmonic(5) == Rat(137, 60));
}

TEST_CASE("prime-square congruence checks hold for small primes") {
  for (long p : odd_primes_in(5, 100)) {
    CHECK(wolstenholme_check(Int(p)));
    CHECK(morley_check(Int(p)));
  }
}
