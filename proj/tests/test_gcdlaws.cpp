#include "cayley/gcdlaws.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace cayley::gcdlaws;
using cayley::exactnum::Int;
using cayley::exactnum::odd_primes_in;
using cayley::exactnum::ord_p;

TEST_CASE("odd-row GCD matches the prime-power classifier") {
  for (long n = 2; n <= 80; ++n) {
    Int g = gcd_row(n);
    CHECK(g > 0);
    for (long p : odd_primes_in(3, 2 * n + 1)) {
      INFO("n=", n, " p=", p);
      CHECK(ord_p(g, Int(p)).value() == predicted_ord(GcdKind::Row, n, Int(p)));
    }
  }
}

TEST_CASE("even-column GCD matches the two-prime-power classifier") {
  CHECK(gcd_even(7) == 91);  // C(14, 2k) share exactly 7 * 13
  for (long n = 2; n <= 80; ++n) {
    Int g = gcd_even(n);
    for (long p : odd_primes_in(3, 2 * n + 1)) {
      INFO("n=", n, " p=", p);
      CHECK(ord_p(g, Int(p)).value() == predicted_ord(GcdKind::Even, n, Int(p)));
    }
  }
}

TEST_CASE("difference GCD matches its classifier at odd primes") {
  for (long n = 4; n <= 80; ++n) {
    Int g = gcd_diff(n);
    CHECK(g > 0);
    for (long p : odd_primes_in(3, 2 * n + 1)) {
      INFO("n=", n, " p=", p);
      CHECK(ord_p(g, Int(p)).value() == predicted_ord(GcdKind::Diff, n, Int(p)));
    }
  }
}

TEST_CASE("classifier cases by hand") {
  // 2n+1 = 9 = 3^2
  CHECK(classify(GcdKind::Row, 4, Int(3)).classifier == OrdClassifier::RowPower);
  CHECK(classify(GcdKind::Row, 4, Int(3)).predicted == 1);
  CHECK(classify(GcdKind::Row, 4, Int(5)).classifier == OrdClassifier::None);

  // 2n = 6 = 3 + 3 = 1 + 5
  CHECK(classify(GcdKind::Even, 3, Int(3)).classifier == OrdClassifier::TwoPrimePowers);
  CHECK(classify(GcdKind::Even, 3, Int(5)).predicted == 1);
  CHECK(classify(GcdKind::Even, 3, Int(7)).predicted == 0);

  // 2n = 18 = 17 + 1 and 9 + 9; 2n = 24 = 5^2 - 1
  CHECK(classify(GcdKind::Diff, 9, Int(17)).predicted == 1);
  CHECK(classify(GcdKind::Diff, 9, Int(3)).predicted == 1);
  CHECK(classify(GcdKind::Diff, 12, Int(5)).classifier == OrdClassifier::PowerMinusOne);
  CHECK(classify(GcdKind::Diff, 12, Int(23)).predicted == 1);  // 24 = 23 + 1
  CHECK(classify(GcdKind::Diff, 12, Int(7)).predicted == 0);
}

TEST_CASE("GCD functions reject out-of-range indices") {
  CHECK_THROWS_AS(gcd_row(1), std::invalid_argument);
  CHECK_THROWS_AS(gcd_even(1), std::invalid_argument);
  CHECK_THROWS_AS(gcd_diff(3), std::invalid_argument);
}

TEST_CASE("degree split n = 3a + 8b") {
  for (long n = 14; n <= 300; ++n) {
    TwoThreeSquares s = two_three_squares(n);
    CHECK(s.a >= 0);
    CHECK(s.b >= 0);
    CHECK(3 * s.a + 8 * s.b == n);
    // a twos and b threes: total square minus count balances the target
    CHECK(4 * s.a + 9 * s.b == n + (s.a + s.b));
  }
  CHECK_THROWS_AS(two_three_squares(13), std::invalid_argument);
}

TEST_CASE("four-square representations of 4n + 5") {
  auto reps = four_square_representations(105);  // n = 25
  CHECK(!reps.empty());
  for (const auto& r : reps) {
    long sum = 0;
    for (long d : r) {
      CHECK(d > 0);
      sum += d * d;
    }
    CHECK(sum == 105);
    CHECK(r[0] <= r[1]);
    CHECK(r[1] <= r[2]);
    CHECK(r[2] <= r[3]);
  }
}

TEST_CASE("four-square product GCD follows the length-6 cycle") {
  auto cycle = four_square_cycle();
  CHECK(cycle == std::array<long, 6>{48, 8, 144, 24, 16, 72});
  for (long n = 25; n <= 80; ++n)
    CHECK(four_square_gcd(n) == cycle[static_cast<std::size_t>((n - 25) % 6)]);
}
