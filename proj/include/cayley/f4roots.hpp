#ifndef CAYLEY_F4ROOTS_HPP
#define CAYLEY_F4ROOTS_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cayley/polyalg.hpp"

// Exact root data for F4 restricted to its Spin(9) subsystem, the Weyl groups
// W(F4) (order 1152) and W(Spin9) (order 384), and the three-element coset
// transversal {1, s4, s4 s3 s4} used by the pushforward engine. Everything is
// exact: weights have rational (half-integer) coordinates, Weyl elements are
// 4x4 rational matrices.
namespace cayley::f4roots {

using exactnum::Rat;
using polyalg::Poly;

// A weight of the rank-4 torus, written in the orthonormal e-basis.
struct Weight {
  std::array<Rat, 4> c;

  Poly to_poly() const;  // the corresponding linear form in e1..e4
  Weight operator-() const;
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator<(const Weight& o) const;
};

// Compact form of an element acting as a signed coordinate permutation:
// e_i -> sign[i] * e_{to[i]}.
struct SignedPerm {
  std::array<int, 4> to;
  std::array<int, 4> sign;
};

// Orthogonal transformation of the weight lattice plus its determinant sign.
class WeylElement {
 public:
  static WeylElement identity();
  // Reflection across the hyperplane orthogonal to the given root.
  static WeylElement reflection(const Weight& root);

  // Group composition: (a * b) acts as a after b.
  WeylElement operator*(const WeylElement& o) const;

  Weight apply(const Weight& w) const;
  // Ring substitution e_i -> (image of e_i); preserves grading.
  Poly apply(const Poly& p) const;

  int sign() const { return sign_; }
  Rat determinant() const;  // recomputed from the matrix; equals sign()
  const Rat& entry(int row, int col) const { return m_[static_cast<std::size_t>(row * 4 + col)]; }

  // Doubled matrix entries as integers; a collision-free identity key.
  std::array<int, 16> key() const;
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }

  // Present exactly when the matrix is a signed coordinate permutation.
  std::optional<SignedPerm> as_signed_perm() const;

 private:
  WeylElement() = default;
  std::array<Rat, 16> m_;  // row-major; column j is the image of e_j
  int sign_ = 1;
};

struct RootSystem {
  std::vector<Weight> spin9_positive;          // 16: e_i and e_i +- e_j (i<j)
  std::vector<Weight> complementary_positive;  // 8: (e1 +- e2 +- e3 +- e4)/2
  std::array<Weight, 4> simple;                // a1..a4 of F4
  std::vector<Weight> f4_positive;             // 24 = 16 + 8

  static const RootSystem& get();

  std::vector<Weight> spin9_all() const;  // 32 signed roots
  std::vector<Weight> f4_all() const;     // 48 signed roots
};

// All 1152 elements of W(F4), generated as the closure of the four simple
// reflections (aborts if the closure runs past a safety bound). Cached.
const std::vector<WeylElement>& weyl_f4();

// The subgroup preserving the Spin(9) root set; 384 elements, all signed
// coordinate permutations. Cached.
const std::vector<WeylElement>& weyl_spin9();

// Coset transversal of W(Spin9) in W(F4): {identity, s4, s4*s3*s4}.
const std::array<WeylElement, 3>& coset_reps();

bool preserves_spin9_roots(const WeylElement& w);

// Product of the linear forms of the given weights.
Poly euler_product(std::span<const Weight> weights);

}  // namespace cayley::f4roots

#endif  // CAYLEY_F4ROOTS_HPP
