#include "cayley/f4roots.hpp"

#include <map>
#include <set>

#include "doctest.h"

using namespace cayley::f4roots;
using cayley::exactnum::Rat;
using cayley::polyalg::Monomial;
using cayley::polyalg::Poly;

namespace {

Rat norm2(const Weight& w) {
  Rat s = 0;
  for (const Rat& c : w.c) s += c * c;
  return s;
}

}  // namespace

TEST_CASE("root system inventory") {
  const RootSystem& rs = RootSystem::get();
  CHECK(rs.spin9_positive.size() == 16);
  CHECK(rs.complementary_positive.size() == 8);
  CHECK(rs.f4_positive.size() == 24);
  CHECK(rs.spin9_all().size() == 32);
  CHECK(rs.f4_all().size() == 48);

  // 12 long roots (norm 2) and 4 short (norm 1) on the subsystem side,
  // 8 short spinor roots on the complementary side
  std::map<Rat, int> counts;
  for (const Weight& w : rs.spin9_positive) counts[norm2(w)]++;
  CHECK(counts[Rat(1)] == 4);
  CHECK(counts[Rat(2)] == 12);
  for (const Weight& w : rs.complementary_positive) CHECK(norm2(w) == 1);

  // positive systems are closed under no sign flip: -w never appears
  std::set<Weight> pos(rs.f4_positive.begin(), rs.f4_positive.end());
  CHECK(pos.size() == 24);
  for (const Weight& w : rs.f4_positive) CHECK(pos.count(-w) == 0);

  // simple roots are four of the positive roots
  for (const Weight& s : rs.simple) CHECK(pos.count(s) == 1);
}

TEST_CASE("weyl group sizes and structure") {
  CHECK(weyl_f4().size() == 1152);
  CHECK(weyl_spin9().size() == 384);

  int minus = 0;
  std::set<std::array<int, 16>> keys;
  for (const WeylElement& w : weyl_f4()) {
    CHECK(w.sign() * w.sign() == 1);
    CHECK(w.determinant() == w.sign());
    if (w.sign() == -1) ++minus;
    keys.insert(w.key());
  }
  CHECK(minus == 576);
  CHECK(keys.size() == 1152);  // key() separates elements

  for (const WeylElement& w : weyl_spin9()) {
    CHECK(w.as_signed_perm().has_value());
    CHECK(preserves_spin9_roots(w));
  }
}

TEST_CASE("reflections are involutions of determinant -1") {
  const RootSystem& rs = RootSystem::get();
  for (const Weight& a : rs.simple) {
    WeylElement r = WeylElement::reflection(a);
    CHECK(r.sign() == -1);
    CHECK((r * r) == WeylElement::identity());
    CHECK(r.apply(a) == -a);
  }
}

TEST_CASE("coset transversal tiles the big group") {
  const auto& reps = coset_reps();
  CHECK(reps[0] == WeylElement::identity());
  CHECK(preserves_spin9_roots(reps[0]));
  CHECK_FALSE(preserves_spin9_roots(reps[1]));
  CHECK_FALSE(preserves_spin9_roots(reps[2]));
  CHECK_FALSE(reps[1] == reps[2]);

  std::set<std::array<int, 16>> covered;
  for (const WeylElement& w : weyl_spin9())
    for (const WeylElement& c : reps) covered.insert((c * w).key());
  CHECK(covered.size() == 1152);

  std::set<std::array<int, 16>> full;
  for (const WeylElement& w : weyl_f4()) full.insert(w.key());
  CHECK(covered == full);
}

TEST_CASE("matrix action is a ring homomorphism compatible with composition") {
  const RootSystem& rs = RootSystem::get();
  WeylElement a = WeylElement::reflection(rs.simple[3]);
  WeylElement b = WeylElement::reflection(rs.simple[2]);

  Poly p = rs.f4_positive[0].to_poly() * rs.f4_positive[20].to_poly() +
           rs.complementary_positive[3].to_poly().pow(2);
  Poly q = rs.spin9_positive[5].to_poly();

  CHECK(a.apply(p * q) == a.apply(p) * a.apply(q));
  CHECK((a * b).apply(p) == a.apply(b.apply(p)));
  CHECK(WeylElement::identity().apply(p) == p);

  // weight action matches the induced substitution on linear forms
  for (const Weight& w : rs.f4_positive) CHECK(a.apply(w).to_poly() == a.apply(w.to_poly()));
}

TEST_CASE("top antisymmetric product changes by the determinant sign") {
  const RootSystem& rs = RootSystem::get();
  Poly top = euler_product(rs.f4_positive);
  CHECK(top.degree() == 24);
  for (const Weight& s : rs.simple) {
    WeylElement r = WeylElement::reflection(s);
    CHECK(r.apply(top) == -top);
  }
}

TEST_CASE("euler products multiply by subsystem") {
  const RootSystem& rs = RootSystem::get();
  Poly sub = euler_product(rs.spin9_positive);
  Poly comp = euler_product(rs.complementary_positive);
  Poly top = euler_product(rs.f4_positive);
  CHECK(sub.degree() == 16);
  CHECK(comp.degree() == 8);
  CHECK(sub * comp == top);

  // each complementary factor contributes e1/2 to the leading power
  CHECK(comp.coefficient(Monomial::variable(0, 8)) == Rat(1, 256));
}
