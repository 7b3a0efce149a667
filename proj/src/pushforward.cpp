#include "cayley/pushforward.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

#include "cayley/exactnum.hpp"

namespace cayley::pushforward {
namespace {

using exactnum::binomial;
using f4roots::RootSystem;
using f4roots::SignedPerm;
using f4roots::Weight;
using f4roots::WeylElement;
using polyalg::make_rat;
using polyalg::Monomial;

Weight doubled(const Weight& w) {
  Weight d;
  for (std::size_t i = 0; i < 4; ++i) d.c[i] = 2 * w.c[i];
  return d;
}

// Per-coset images of the doubled complementary roots (integer coordinates),
// as linear forms and their squares. Working with doubled roots keeps every
// intermediate coefficient integral; the final result is rescaled by
// 2^(8-2|I|) to undo the doubling.
struct CosetData {
  std::array<std::vector<Poly>, 3> factors;  // 8 linear forms per coset
  std::array<std::vector<Poly>, 3> squares;  // their squares
};

const CosetData& coset_data() {
  static const CosetData data = [] {
    CosetData d;
    const auto& reps = f4roots::coset_reps();
    const auto& comp = RootSystem::get().complementary_positive;
    for (int c = 0; c < 3; ++c) {
      for (const Weight& r : comp) {
        Poly form = doubled(reps[static_cast<std::size_t>(c)].apply(r)).to_poly();
        d.factors[static_cast<std::size_t>(c)].push_back(form);
        d.squares[static_cast<std::size_t>(c)].push_back(form * form);
      }
    }
    return d;
  }();
  return data;
}

// Power sums p_k = sum_i values[i]^k for the requested exponents, sharing one
// multiplication ladder per value.
std::map<int, Poly> power_sums_at(const std::vector<Poly>& values,
                                  std::initializer_list<int> ks) {
  std::map<int, Poly> out;
  int kmax = 0;
  for (int k : ks) {
    out.emplace(k, Poly::zero(4));
    kmax = std::max(kmax, k);
  }
  for (const Poly& v : values) {
    Poly acc = Poly::constant(4, 1);
    for (int k = 1; k <= kmax; ++k) {
      acc = acc * v;
      auto it = out.find(k);
      if (it != out.end()) it->second = it->second + acc;
    }
  }
  return out;
}

// Monomial symmetric polynomial at the given values. One- and two-part
// shapes go through power sums (m_(a) = p_a, m_(a,b) = p_a p_b - p_{a+b},
// halved when a = b); other shapes use the generic evaluator.
Poly s_I_at(const Partition& I, const std::vector<Poly>& values) {
  const auto& parts = I.parts();
  if (parts.size() == 1) {
    auto ps = power_sums_at(values, {parts[0]});
    return std::move(ps.at(parts[0]));
  }
  if (parts.size() == 2) {
    const int a = parts[0];
    const int b = parts[1];
    if (a == b) {
      auto ps = power_sums_at(values, {a, 2 * a});
      return (ps.at(a) * ps.at(a) - ps.at(2 * a)) * make_rat(1, 2);
    }
    auto ps = power_sums_at(values, {a, b, a + b});
    return ps.at(a) * ps.at(b) - ps.at(a + b);
  }
  return polyalg::s_I_eval(I, std::span<const Poly>(values.data(), values.size()));
}

Poly compute_coset_pushforward(const Partition& I) {
  if (I.empty()) throw std::invalid_argument("coset_pushforward: empty partition");
  const CosetData& cd = coset_data();
  const int w = I.weight();
  // Common denominator across the three cosets: multiply each coset's s_I by
  // the 16 linear denominator factors of the other two cosets, one factor at
  // a time (multiplying by a 4-term linear form is far cheaper than by the
  // expanded degree-16 cofactor).
  Poly num = Poly::zero(4);
  for (int c = 0; c < 3; ++c) {
    Poly term = s_I_at(I, cd.squares[static_cast<std::size_t>(c)]);
    for (int o = 0; o < 3; ++o) {
      if (o == c) continue;
      for (const Poly& f : cd.factors[static_cast<std::size_t>(o)]) term = term * f;
    }
    num = num + term;
  }
  if (num.is_zero()) return Poly::zero(4);
  std::vector<Poly> all_factors;
  all_factors.reserve(24);
  for (int c = 0; c < 3; ++c)
    for (const Poly& f : cd.factors[static_cast<std::size_t>(c)]) all_factors.push_back(f);
  Poly q = polyalg::divide_by_factors(num, all_factors);
  // Undo the doubling: s_I picked up 4^|I| and each of the 8 denominator
  // roots a factor 2.
  q = q * make_rat(Int(1) << 8, Int(1) << (2 * w));
  if (2 * w < 8 && !q.is_zero())
    throw std::logic_error("coset_pushforward: nonzero result below the vanishing degree");
  if (!q.is_zero() && q.degree() != 2 * w - 8)
    throw std::logic_error("coset_pushforward: result has unexpected degree");
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<Partition, Poly>& epoly_cache() {
  static std::map<Partition, Poly> c;
  return c;
}

std::map<std::pair<Partition, Int>, Poly>& xpoly_cache() {
  static std::map<std::pair<Partition, Int>, Poly> c;
  return c;
}

// Signed-permutation forms of the 384 subgroup elements, with a one-time
// check that transversal x subgroup tiles the whole 1152-element group (the
// grouped summation below is only the full group sum under exact tiling).
const std::vector<std::pair<SignedPerm, int>>& spin9_perms() {
  static const std::vector<std::pair<SignedPerm, int>> perms = [] {
    std::vector<std::pair<SignedPerm, int>> v;
    for (const WeylElement& u : f4roots::weyl_spin9())
      v.emplace_back(*u.as_signed_perm(), u.sign());
    std::set<std::array<int, 16>> cover;
    for (const WeylElement& c : f4roots::coset_reps())
      for (const WeylElement& u : f4roots::weyl_spin9()) cover.insert((c * u).key());
    if (cover.size() != f4roots::weyl_f4().size())
      throw std::logic_error("full_weyl_oracle: transversal does not tile the Weyl group");
    return v;
  }();
  return perms;
}

Monomial permuted(Monomial m, const SignedPerm& sp, bool& negate) {
  std::array<int, 4> e{};
  int parity = 0;
  for (int i = 0; i < 4; ++i) {
    const int ei = m.exponent(i);
    e[static_cast<std::size_t>(sp.to[static_cast<std::size_t>(i)])] = ei;
    if (sp.sign[static_cast<std::size_t>(i)] < 0) parity ^= (ei & 1);
  }
  negate = parity != 0;
  return Monomial::from_exponents(std::span<const int>(e.data(), e.size()));
}

}  // namespace

Poly s_I_of_root_squares(const Partition& I) {
  static const std::vector<Poly> squares = [] {
    std::vector<Poly> sq;
    for (const Weight& r : RootSystem::get().complementary_positive) {
      Poly form = r.to_poly();
      sq.push_back(form * form);
    }
    return sq;
  }();
  return s_I_at(I, squares);
}

const Poly& spin9_euler() {
  static const Poly e = f4roots::euler_product(RootSystem::get().spin9_positive);
  return e;
}

const Poly& f4_euler() {
  static const Poly e = f4roots::euler_product(RootSystem::get().f4_positive);
  return e;
}

const Poly& coset_pushforward(const Partition& I) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = epoly_cache().find(I);
    if (it != epoly_cache().end()) return it->second;
  }
  Poly r = compute_coset_pushforward(I);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = epoly_cache().try_emplace(I, std::move(r));
  return it->second;
}

Poly full_weyl_oracle(const Poly& t) {
  if (t.nvars() != 4)
    throw std::invalid_argument("full_weyl_oracle: expected a polynomial in e1..e4");
  const auto& perms = spin9_perms();
  // Inner sum over the 384 subgroup elements, term by term: a signed
  // coordinate permutation only relabels monomials.
  Poly inner = Poly::zero(4);
  for (const auto& [sp, sgn] : perms) {
    for (const auto& [m, coef] : t.terms()) {
      bool neg = false;
      Monomial pm = permuted(m, sp, neg);
      if ((sgn < 0) != neg)
        inner.add_term(pm, Rat(-coef));
      else
        inner.add_term(pm, coef);
    }
  }
  // Outer sum over the transversal, pulled out of the inner sum by linearity;
  // together these enumerate all 1152 group elements exactly once.
  Poly total = Poly::zero(4);
  for (const WeylElement& c : f4roots::coset_reps()) {
    Poly img = c.apply(inner);
    total = (c.sign() < 0) ? total - img : total + img;
  }
  std::vector<Poly> factors;
  factors.reserve(24);
  for (const Weight& r : RootSystem::get().f4_positive) factors.push_back(r.to_poly());
  return polyalg::divide_by_factors(total, factors);
}

Poly substitute_f(const Poly& e_poly, const Int& n_f) {
  if (n_f < 1) throw std::invalid_argument("substitute_f: n_f must be positive");
  if (e_poly.nvars() != 4)
    throw std::invalid_argument("substitute_f: expected a polynomial in e1..e4");
  const Rat nf(n_f);
  const std::array<Poly, 4> images = {
      Poly::monomial(2, Monomial::variable(0), nf),        // e1 -> n_f x1
      Poly::monomial(2, Monomial::variable(0), nf),        // e2 -> n_f x1
      Poly::monomial(2, Monomial::variable(1), nf),        // e3 -> n_f x2
      Poly::monomial(2, Monomial::variable(1), Rat(-nf)),  // e4 -> -n_f x2
  };
  return polyalg::linear_substitute(e_poly, 2, images);
}

const Poly& pushforward_x_poly(const Partition& I, const Int& n_f) {
  const std::pair<Partition, Int> key(I, n_f);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = xpoly_cache().find(key);
    if (it != xpoly_cache().end()) return it->second;
  }
  Poly r = substitute_f(coset_pushforward(I), n_f);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = xpoly_cache().try_emplace(key, std::move(r));
  return it->second;
}

PushforwardResult pushforward_result(const Partition& I, const Int& n_f) {
  return PushforwardResult{coset_pushforward(I), pushforward_x_poly(I, n_f)};
}

Poly closed_form_sn(long n, const Int& n_f) {
  if (n < 2) throw std::invalid_argument("closed_form_sn: need n >= 2");
  if (n_f < 1) throw std::invalid_argument("closed_form_sn: n_f must be positive");
  Poly out = Poly::zero(2);
  if (n < 4) return out;
  Int nfpow;
  mpz_pow_ui(nfpow.get_mpz_t(), n_f.get_mpz_t(), static_cast<unsigned long>(2 * n - 8));
  const Int c2 = binomial(2 * n, 2);
  for (long k = 2; k <= n - 2; ++k) {
    const Int coeff = 2 * nfpow * (c2 - binomial(2 * n, 2 * k));
    const std::array<int, 2> exps = {static_cast<int>(2 * k - 4),
                                     static_cast<int>(2 * n - 2 * k - 4)};
    out.add_term(Monomial::from_exponents(exps), Rat(coeff));
  }
  return out;
}

ClosedFormSn1n2 closed_form_sn1n2(long n1, long n2, const Int& n_f) {
  if (!(n1 > n2 && n2 >= 1))
    throw std::invalid_argument("closed_form_sn1n2: need n1 > n2 >= 1");
  if (n_f < 1) throw std::invalid_argument("closed_form_sn1n2: n_f must be positive");
  ClosedFormSn1n2 res{Poly::zero(2), {}};
  const long e = n1 + n2 - 8;
  Rat nfpow;
  {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), n_f.get_mpz_t(),
               static_cast<unsigned long>(e >= 0 ? e : -e));
    nfpow = e >= 0 ? Rat(p) : make_rat(1, p);
  }
  const Rat prefactor = -4 * nfpow;
  const Int c1 = binomial(2 * n1, 2);
  const Int c2 = binomial(2 * n2, 2);
  for (long k = 2; k <= n1 + n2 - 1; ++k) {
    Rat bracket(binomial(2 * n1, 2 * k) + binomial(2 * n2, 2 * k) +
                binomial(2 * n2, 2 * k - 2 * n1) + binomial(2 * n1, 2 * k - 2 * n2));
    Int alt = 0;
    for (long l = 0; l <= k; ++l) {
      const Int term = binomial(2 * n2, l) * binomial(2 * n1 - 2 * n2, 2 * k - 2 * l);
      if (l % 2 == 0)
        alt += term;
      else
        alt -= term;
    }
    bracket += make_rat(alt, 2);
    Int win1 = 0;
    for (long l = 1; l <= n1 - 1; ++l) win1 += binomial(2 * n2, 2 * k - 2 * l);
    Int win2 = 0;
    for (long l = 1; l <= n2 - 1; ++l) win2 += binomial(2 * n1, 2 * k - 2 * l);
    bracket -= Rat(c1 * win1);
    bracket -= Rat(c2 * win2);
    const bool in_wide = (n2 <= k && k <= n1);
    const bool in_narrow = (n2 + 1 <= k && k <= n1 - 1);
    if (!in_wide) bracket -= Rat(c2);
    bracket -= Rat(c1 * (in_narrow ? 2 : 1));
    bracket += make_rat(binomial(2 * (n1 + n2), 2), 2);
    if (k == n1 || k == n2) bracket -= 3;
    if (bracket == 0) continue;
    const Rat coeff = prefactor * bracket;
    const long x1e = 2 * k - 4;
    const long x2e = 2 * (n1 + n2) - 2 * k - 4;
    if (x2e < 0) {
      res.discrepancies.push_back(DroppedTerm{k, coeff, x1e, x2e});
      continue;
    }
    const std::array<int, 2> exps = {static_cast<int>(x1e), static_cast<int>(x2e)};
    res.poly.add_term(Monomial::from_exponents(exps), coeff);
  }
  return res;
}

Poly series_oracle_sn(long n) {
  if (n < 2) throw std::invalid_argument("series_oracle_sn: need n >= 2");
  const long cap = 2 * n + 2;
  // B(x) = [-2 + (x+1)^{2n} + (x-1)^{2n}]                       (even part)
  //        - x^2 [same + 2 C(2n,2)]
  //        + x^{2n} [2 C(2n,2) - 2] + 2 x^{2n+2}
  std::vector<Rat> b(static_cast<std::size_t>(cap) + 1);
  const Int c2 = binomial(2 * n, 2);
  for (long d = 2; d <= 2 * n && d <= cap; d += 2)
    b[static_cast<std::size_t>(d)] += 2 * Rat(binomial(2 * n, d));
  // the shifted copy: constant term of the inner bracket is 2 C(2n,2)
  if (2 <= cap) b[2] -= 2 * Rat(c2);
  for (long d = 2; d <= 2 * n && d + 2 <= cap; d += 2)
    b[static_cast<std::size_t>(d + 2)] -= 2 * Rat(binomial(2 * n, d));
  if (2 * n <= cap) b[static_cast<std::size_t>(2 * n)] += 2 * Rat(c2) - 2;
  b[static_cast<std::size_t>(cap)] += 2;
  // multiply by the geometric series 1 + x^2 + x^4 + ... : even prefix sums
  std::vector<Rat> s(b);
  for (long d = 2; d <= cap; d += 2)
    s[static_cast<std::size_t>(d)] += s[static_cast<std::size_t>(d - 2)];
  if (s[0] != 0 || s[2] != 0)
    throw std::logic_error("series_oracle_sn: series is not divisible by x^4");
  // shift down by x^4, negate, and rehomogenize to total degree 2n - 8
  Poly out = Poly::zero(2);
  for (long d = 4; d <= cap; d += 2) {
    const Rat& coef = s[static_cast<std::size_t>(d)];
    if (coef == 0) continue;
    const long x1e = d - 4;
    const long x2e = 2 * n - 8 - x1e;
    if (x2e < 0)
      throw std::logic_error("series_oracle_sn: nonzero coefficient above the target degree");
    const std::array<int, 2> exps = {static_cast<int>(x1e), static_cast<int>(x2e)};
    out.add_term(Monomial::from_exponents(exps), Rat(-coef));
  }
  return out;
}

Rat x_coefficient(const Poly& x_poly, long a, long b) {
  if (a < 0 || b < 0) return Rat(0);
  if (a > Monomial::kMaxExponent || b > Monomial::kMaxExponent) return Rat(0);
  const std::array<int, 2> exps = {static_cast<int>(a), static_cast<int>(b)};
  return x_poly.coefficient(Monomial::from_exponents(exps));
}

}  // namespace cayley::pushforward
