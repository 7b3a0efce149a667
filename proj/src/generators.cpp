#include "cayley/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayley/gcdlaws.hpp"
#include "cayley/parallel.hpp"
#include "cayley/pushforward.hpp"

namespace cayley::generators {

using bundles::BordismCombination;
using bundles::CayleyBundleSpec;
using exactnum::Rat;
using exactnum::binomial;
using exactnum::is_prime;
using exactnum::odd_primes_in;
using exactnum::ord_p;
using polyalg::Partition;

namespace {

long pow_long(long p, long e) {
  Int v;
  mpz_pow_ui(v.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(e));
  if (!v.fits_slong_p()) throw std::overflow_error("prime power out of range");
  return v.get_si();
}

void require_pij(long p, long i, long j) {
  if (!is_prime(Int(p)) || p <= 3)
    throw std::invalid_argument("need a prime p > 3");
  if (!(0 < i && i < j)) throw std::invalid_argument("need 0 < i < j");
}

// Smallest n_f >= 1 making 4 n_f + m + 1 >= 14 for the smallest factor
// dimension in play.
Int smallest_feasible_nf(long min_m) {
  Int n_f = 1;
  while (4 * n_f + min_m + 1 < 14) ++n_f;
  return n_f;
}

// Smallest feasible n_f that is neither 0 nor 1 mod p. Residues 0 and 1 are
// excluded because s_{n1,n2} of the second bundle is congruent to
// 8p * n_f^{p^j-8} * (n_f - 1) mod p^2: it collapses mod p^2 exactly when
// n_f(n_f - 1) is divisible by p, killing the nonvanishing the difference
// construction needs.
Int smallest_unit_nf(long min_m, long p) {
  Int n_f = 1;
  while (4 * n_f + min_m + 1 < 14 || n_f % p == 0 || n_f % p == 1) ++n_f;
  return n_f;
}

Int coefficient_as_int(const Rat& c) {
  if (c.get_den() != 1)
    throw std::logic_error("expected an integer coefficient");
  return c.get_num();
}

}  // namespace

GeneratorReport construct_M(long n, long prime_cap) {
  if (n < 4) throw std::invalid_argument("construct_M: need n >= 4");
  GeneratorReport rep;
  rep.family = Family::M;
  rep.n = n;
  rep.dimension = 4 * n;

  long min_m = 2 * n;
  for (long k = 2; k <= n - 2; ++k)
    min_m = std::min({min_m, 2 * k - 4, 2 * n - 2 * k - 4});
  rep.n_f = smallest_feasible_nf(min_m);

  std::vector<CayleyBundleSpec> specs;
  std::vector<Int> values;
  for (long k = 2; k <= n - 2; ++k) {
    auto spec = bundles::make_string_bundle(2 * k - 4, 2 * n - 2 * k - 4, rep.n_f);
    values.push_back(bundles::s_n_total_space(spec, n));
    specs.push_back(std::move(spec));
  }

  // Fold the extended GCD over the values in ascending k; mpz_gcdext keeps
  // the running GCD non-negative, so the final s_value is positive as long as
  // any value is nonzero.
  std::vector<Int> coeffs(values.size());
  Int g = 0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    Int g2, s, u;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), g.get_mpz_t(),
               values[t].get_mpz_t());
    for (std::size_t q = 0; q < t; ++q) coeffs[q] *= s;
    coeffs[t] = u;
    g = g2;
  }
  if (g == 0) throw std::logic_error("construct_M: all split values vanished");

  Int recombined = 0;
  for (std::size_t t = 0; t < values.size(); ++t) recombined += coeffs[t] * values[t];
  if (recombined != g)
    throw std::logic_error("construct_M: Bezout recombination mismatch");

  rep.s_value = g;
  for (std::size_t t = 0; t < specs.size(); ++t)
    rep.combination.terms.emplace_back(coeffs[t], specs[t]);

  for (const auto& spec : specs) {
    auto [c1, c2] = bundles::string_defect(spec);
    if (c1 != 0 || c2 != 0) rep.failures.push_back("string-defect-nonzero");
  }

  long bound = 2 * n + 1;
  if (prime_cap > 0) bound = std::min(bound, prime_cap);
  for (long p : odd_primes_in(5, bound)) {
    PrimeOrd row;
    row.p = p;
    row.observed = ord_p(g, Int(p)).value();
    row.predicted = gcdlaws::predicted_ord(gcdlaws::GcdKind::Diff, n, Int(p));
    row.pass = row.observed == row.predicted;
    if (!row.pass)
      rep.failures.push_back("ord-mismatch p=" + std::to_string(p) +
                             " observed=" + std::to_string(row.observed) +
                             " predicted=" + std::to_string(row.predicted));
    rep.prime_table.push_back(row);
  }
  rep.pass = rep.failures.empty();
  return rep;
}

GeneratorReport construct_N(long p, long i, long j, long pj_cap) {
  require_pij(p, i, j);
  long pi = pow_long(p, i);
  long pj = pow_long(p, j);
  long pj1 = pow_long(p, j - 1);
  if (pj > pj_cap)
    throw std::invalid_argument("construct_N: p^j exceeds the cap (" +
                                std::to_string(pj) + " > " + std::to_string(pj_cap) +
                                "); raise the cap for a longer run");

  GeneratorReport rep;
  rep.family = Family::N;
  rep.p = p;
  rep.i = i;
  rep.j = j;
  rep.n1 = (pj - 1) / 2;
  rep.n2 = (pi + 1) / 2;
  rep.n = rep.n1 + rep.n2;
  rep.dimension = 2 * (pi + pj);

  const long m1 = pj - 3, mp1 = pi - 5;
  const long m2 = pj1 - 3, mp2 = pj - pj1 + pi - 5;
  rep.n_f = smallest_unit_nf(std::min({m1, mp1, m2, mp2}), p);

  auto e1 = bundles::make_string_bundle(m1, mp1, rep.n_f);
  auto e2 = bundles::make_string_bundle(m2, mp2, rep.n_f);

  rep.s_top_e1 = bundles::s_n_total_space(e1, rep.n);
  rep.s_top_e2 = bundles::s_n_total_space(e2, rep.n);
  if (rep.s_top_e1 == 0 || rep.s_top_e2 == 0)
    throw std::logic_error("construct_N: a top s-number vanished; the difference is undefined");

  Int lcm;
  mpz_lcm(lcm.get_mpz_t(), rep.s_top_e1.get_mpz_t(), rep.s_top_e2.get_mpz_t());
  rep.combination.terms.emplace_back(lcm / rep.s_top_e1, e1);
  rep.combination.terms.emplace_back(-(lcm / rep.s_top_e2), e2);

  rep.snn_e1 = bundles::s_n1n2_total_space(e1, rep.n1, rep.n2);
  rep.snn_e2 = bundles::s_n1n2_total_space(e2, rep.n1, rep.n2);

  rep.s_top = bundles::s_n_combination(rep.combination, rep.n);
  rep.s_value = bundles::s_n1n2_combination(rep.combination, rep.n1, rep.n2);

  rep.top_vanishes = rep.s_top == 0;
  rep.snn_nonzero_mod_p2 = rep.s_value % (Int(p) * p) != 0;
  rep.ord_inequality =
      ord_p(rep.s_top_e1, Int(p)) <= ord_p(rep.s_top_e2, Int(p));

  if (!rep.top_vanishes) rep.failures.push_back("top-s-number-nonzero");
  if (!rep.snn_nonzero_mod_p2) rep.failures.push_back("s-n1n2-divisible-by-p2");
  if (!rep.ord_inequality) rep.failures.push_back("ord-inequality-violated");
  rep.pass = rep.failures.empty();
  return rep;
}

std::pair<bool, bool> verify_cor_sn1n2eta(long p, long i, long j) {
  require_pij(p, i, j);
  long pi = pow_long(p, i);
  long pj = pow_long(p, j);
  long pj1 = pow_long(p, j - 1);
  int n1 = static_cast<int>((pj - 1) / 2);
  int n2 = static_cast<int>((pi + 1) / 2);

  const auto& poly = pushforward::pushforward_x_poly(Partition({n1, n2}), Int(1));
  Int p2 = Int(p) * p;

  Int c1 = coefficient_as_int(pushforward::x_coefficient(poly, pj - 3, pi - 5));
  Int c2 = coefficient_as_int(
      pushforward::x_coefficient(poly, pj1 - 3, pj - pj1 + pi - 5));

  bool part1 = c1 % p2 == 0;
  Int delta = c2 - 8 * Int(p);
  bool part2 = delta % p2 == 0;
  return {part1, part2};
}

namespace {

// 2^p mod p^2.
Int two_pow_p_mod(long p, const Int& p2) {
  Int r;
  mpz_powm(r.get_mpz_t(), Int(2).get_mpz_t(), Int(p).get_mpz_t(), p2.get_mpz_t());
  return r;
}

Int mod_positive(const Int& x, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool verify_A_congruence(long p, long i, long j) {
  require_pij(p, i, j);
  long pi = pow_long(p, i);
  long pj = pow_long(p, j);
  Int p2 = Int(p) * p;
  Int inv2 = (p2 + 1) / 2;

  Int sum = 0;
  for (long l = 0; l <= (pj + 1) / 2; ++l) {
    Int term = binomial(Int(pi + 1), Int(l)) * binomial(Int(pj - pi - 2), Int(pj - 2 * l + 1));
    sum += (l % 2 == 0) ? term : -term;
  }
  Int lhs = mod_positive(sum * inv2, p2);
  Int rhs = mod_positive(two_pow_p_mod(p, p2) - 1 - inv2 * pi, p2);
  return lhs == rhs;
}

bool verify_B_congruence(long p, long i, long j) {
  require_pij(p, i, j);
  long pi = pow_long(p, i);
  long pj = pow_long(p, j);
  long pj1 = pow_long(p, j - 1);
  Int p2 = Int(p) * p;
  Int inv2 = (p2 + 1) / 2;

  Int sum = 0;
  for (long l = 0; l <= (pj1 + 1) / 2; ++l) {
    Int term = binomial(Int(pi + 1), Int(l)) * binomial(Int(pj - pi - 2), Int(pj1 - 2 * l + 1));
    sum += (l % 2 == 0) ? term : -term;
  }
  Int lhs = mod_positive(sum * inv2, p2);
  Int rhs = mod_positive(two_pow_p_mod(p, p2) - p, p2);
  return lhs == rhs;
}

TheoremReport check_theorem_conditions(long dim_cap, long prime_cap, int threads) {
  TheoremReport report;
  report.dim_cap = dim_cap;
  report.prime_cap = prime_cap;

  struct NTask {
    long p, i, j;
  };
  std::vector<long> m_tasks;
  for (long n = 4; n <= dim_cap; ++n) m_tasks.push_back(n);

  std::vector<NTask> n_tasks;
  for (long p : odd_primes_in(5, prime_cap)) {
    for (long i = 1;; ++i) {
      long pi = pow_long(p, i);
      if (pi >= dim_cap) break;  // p^j > p^i forces p^i + p^j > 2*dim_cap
      for (long j = i + 1;; ++j) {
        long pj = pow_long(p, j);
        if (pi + pj > 2 * dim_cap) break;
        n_tasks.push_back({p, i, j});
      }
    }
  }

  report.m_reports.resize(m_tasks.size());
  report.n_reports.resize(n_tasks.size());
  const long total = static_cast<long>(m_tasks.size() + n_tasks.size());

  parallel::for_each_index(total, threads, [&](long idx) {
    if (idx < static_cast<long>(m_tasks.size())) {
      long n = m_tasks[static_cast<std::size_t>(idx)];
      GeneratorReport rep;
      try {
        rep = construct_M(n, prime_cap);
      } catch (const std::exception& ex) {
        rep.family = Family::M;
        rep.n = n;
        rep.dimension = 4 * n;
        rep.error = ex.what();
        rep.pass = false;
        rep.failures.push_back("construction-error");
      }
      report.m_reports[static_cast<std::size_t>(idx)] = std::move(rep);
    } else {
      auto task = n_tasks[static_cast<std::size_t>(idx) - m_tasks.size()];
      GeneratorReport rep;
      try {
        rep = construct_N(task.p, task.i, task.j, 2 * dim_cap);
      } catch (const std::exception& ex) {
        rep.family = Family::N;
        rep.p = task.p;
        rep.i = task.i;
        rep.j = task.j;
        rep.error = ex.what();
        rep.pass = false;
        rep.failures.push_back("construction-error");
      }
      report.n_reports[static_cast<std::size_t>(idx) - m_tasks.size()] = std::move(rep);
    }
  });

  report.pass = true;
  for (const auto& r : report.m_reports) report.pass = report.pass && r.pass;
  for (const auto& r : report.n_reports) report.pass = report.pass && r.pass;
  return report;
}

}  // namespace cayley::generators
