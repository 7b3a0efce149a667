#include "cayley/gcdlaws.hpp"

#include <cmath>
#include <stdexcept>

namespace cayley::gcdlaws {

using exactnum::binomial;

Int gcd_row(long n) {
  if (n <= 1) throw std::invalid_argument("gcd_row: need n > 1");
  // Walk C(2n+1, i) multiplicatively across the row.
  Int g = 0, c = 2 * n + 1;  // C(2n+1, 1)
  for (long i = 2; i < 2 * n; ++i) {
    c = c * (2 * n + 2 - i) / i;
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Int gcd_even(long n) {
  if (n <= 1) throw std::invalid_argument("gcd_even: need n > 1");
  Int g = 0;
  for (long k = 1; k < n; ++k) {
    g = gcd(g, binomial(2 * n, 2 * k));
    if (g == 1) break;
  }
  return g;
}

Int gcd_diff(long n) {
  if (n < 4) throw std::invalid_argument("gcd_diff: need n >= 4");
  Int c2 = binomial(2 * n, 2);
  Int g = 0;
  for (long k = 2; k < n - 1; ++k) {
    g = gcd(g, c2 - binomial(2 * n, 2 * k));
    if (g == 1) break;
  }
  return g;
}

namespace {

// 2n+1 = p^i for some i > 0 (equivalently 2n = p^i - 1).
bool is_power_of(const Int& target, const Int& p) {
  Int v = p;
  while (v < target) v *= p;
  return v == target;
}

// 2n = p^i + p^j with 0 <= i <= j.
bool is_two_prime_powers(long n2, const Int& p) {
  std::vector<Int> powers;
  for (Int v = 1; v <= n2; v *= p) powers.push_back(v);
  for (const Int& a : powers)
    for (const Int& b : powers)
      if (a <= b && a + b == n2) return true;
  return false;
}

}  // namespace

OrdPattern classify(GcdKind kind, long n, const Int& p) {
  exactnum::require_prime(p);
  if (p == 2) throw std::invalid_argument("classify: p must be odd");
  long min_n = (kind == GcdKind::Diff) ? 4 : 2;
  if (n < min_n) throw std::invalid_argument("classify: n below valid range");

  OrdPattern pat;
  bool row_power = is_power_of(Int(2 * n + 1), p);
  bool two_powers = is_two_prime_powers(2 * n, p);
  switch (kind) {
    case GcdKind::Row:
      if (row_power) pat = {OrdClassifier::RowPower, 1};
      break;
    case GcdKind::Even:
      if (two_powers) pat = {OrdClassifier::TwoPrimePowers, 1};
      break;
    case GcdKind::Diff:
      if (row_power)
        pat = {OrdClassifier::PowerMinusOne, 1};
      else if (two_powers)
        pat = {OrdClassifier::TwoPrimePowers, 1};
      break;
  }
  return pat;
}

int predicted_ord(GcdKind kind, long n, const Int& p) {
  return classify(kind, n, p).predicted;
}

TwoThreeSquares two_three_squares(long n) {
  if (n < 14) throw std::invalid_argument("two_three_squares: need n >= 14");
  long ceil_n3 = (n + 2) / 3;
  TwoThreeSquares s;
  s.a = 3 * n - 8 * ceil_n3;
  s.b = 3 * ceil_n3 - n;
  // a = t-5 on n = 3t+1, so that residue class needs n >= 16; n = 14, 15 fall
  // in the other classes and every n >= 14 decomposes with a, b >= 0.
  if (s.a < 0 || s.b < 0 || 3 * s.a + 8 * s.b != n)
    throw std::logic_error("two_three_squares: decomposition failed");
  return s;
}

std::vector<std::array<long, 4>> four_square_representations(long s) {
  std::vector<std::array<long, 4>> out;
  for (long d1 = 1; 4 * d1 * d1 <= s; ++d1)
    for (long d2 = d1; d1 * d1 + 3 * d2 * d2 <= s; ++d2)
      for (long d3 = d2; d1 * d1 + d2 * d2 + 2 * d3 * d3 <= s; ++d3) {
        long rest = s - d1 * d1 - d2 * d2 - d3 * d3;
        long d4 = std::lround(std::sqrt(static_cast<double>(rest)));
        while (d4 * d4 > rest) --d4;
        while ((d4 + 1) * (d4 + 1) <= rest) ++d4;
        if (d4 >= d3 && d4 * d4 == rest) out.push_back({d1, d2, d3, d4});
      }
  return out;
}

Int four_square_gcd(long n) {
  if (n < 1) throw std::invalid_argument("four_square_gcd: need n >= 1");
  auto reps = four_square_representations(4 * n + 5);
  if (reps.empty()) throw std::logic_error("four_square_gcd: no representations");
  Int g = 0;
  for (const auto& r : reps) {
    Int prod = Int(r[0]) * r[1] * r[2] * r[3];
    g = gcd(g, prod);
    if (g == 1) break;
  }
  return g;
}

std::array<long, 6> four_square_cycle() { return {48, 8, 144, 24, 16, 72}; }

}  // namespace cayley::gcdlaws
