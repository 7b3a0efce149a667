#include "cayley/f4roots.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cayley::f4roots {

using polyalg::make_rat;

Poly Weight::to_poly() const {
  return Poly::linear(4, std::span<const Rat>(c.data(), c.size()));
}

Weight Weight::operator-() const {
  Weight r;
  for (int i = 0; i < 4; ++i) r.c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
  return r;
}

bool Weight::operator<(const Weight& o) const {
  for (std::size_t i = 0; i < 4; ++i) {
    int s = cmp(c[i], o.c[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

WeylElement WeylElement::identity() {
  WeylElement w;
  for (int i = 0; i < 4; ++i) w.m_[static_cast<std::size_t>(i * 4 + i)] = 1;
  return w;
}

WeylElement WeylElement::reflection(const Weight& root) {
  Rat norm;
  for (const Rat& x : root.c) norm += x * x;
  if (norm == 0) throw std::invalid_argument("reflection: zero root");
  WeylElement w;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Rat v = -2 * root.c[static_cast<std::size_t>(i)] * root.c[static_cast<std::size_t>(j)] / norm;
      if (i == j) v += 1;
      w.m_[static_cast<std::size_t>(i * 4 + j)] = std::move(v);
    }
  }
  w.sign_ = -1;
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Rat acc;
      for (int k = 0; k < 4; ++k) acc += entry(i, k) * o.entry(k, j);
      r.m_[static_cast<std::size_t>(i * 4 + j)] = std::move(acc);
    }
  }
  r.sign_ = sign_ * o.sign_;
  return r;
}

Weight WeylElement::apply(const Weight& w) const {
  Weight r;
  for (int i = 0; i < 4; ++i) {
    Rat acc;
    for (int j = 0; j < 4; ++j) acc += entry(i, j) * w.c[static_cast<std::size_t>(j)];
    r.c[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return r;
}

Poly WeylElement::apply(const Poly& p) const {
  std::array<Poly, 4> images = {Poly::zero(4), Poly::zero(4), Poly::zero(4), Poly::zero(4)};
  for (int j = 0; j < 4; ++j) {
    std::array<Rat, 4> col;
    for (int i = 0; i < 4; ++i) col[static_cast<std::size_t>(i)] = entry(i, j);
    images[static_cast<std::size_t>(j)] = Poly::linear(4, col);
  }
  return polyalg::linear_substitute(p, 4, images);
}

Rat WeylElement::determinant() const {
  auto at = [&](int i, int j) -> const Rat& { return entry(i, j); };
  auto det3 = [&](int c0, int c1, int c2) -> Rat {
    return at(1, c0) * (at(2, c1) * at(3, c2) - at(2, c2) * at(3, c1)) -
           at(1, c1) * (at(2, c0) * at(3, c2) - at(2, c2) * at(3, c0)) +
           at(1, c2) * (at(2, c0) * at(3, c1) - at(2, c1) * at(3, c0));
  };
  return at(0, 0) * det3(1, 2, 3) - at(0, 1) * det3(0, 2, 3) + at(0, 2) * det3(0, 1, 3) -
         at(0, 3) * det3(0, 1, 2);
}

std::array<int, 16> WeylElement::key() const {
  std::array<int, 16> k;
  for (std::size_t i = 0; i < 16; ++i) {
    Rat d = 2 * m_[i];
    d.canonicalize();
    if (d.get_den() != 1)
      throw std::logic_error("WeylElement::key: entry is not half-integral");
    k[i] = static_cast<int>(d.get_num().get_si());
  }
  return k;
}

std::optional<SignedPerm> WeylElement::as_signed_perm() const {
  SignedPerm sp{};
  std::array<bool, 4> row_used{};
  for (int col = 0; col < 4; ++col) {
    int found = -1;
    int sgn = 0;
    for (int row = 0; row < 4; ++row) {
      const Rat& e = entry(row, col);
      if (e == 0) continue;
      if (found >= 0) return std::nullopt;
      if (e == 1) {
        sgn = 1;
      } else if (e == -1) {
        sgn = -1;
      } else {
        return std::nullopt;
      }
      found = row;
    }
    if (found < 0 || row_used[static_cast<std::size_t>(found)]) return std::nullopt;
    row_used[static_cast<std::size_t>(found)] = true;
    sp.to[static_cast<std::size_t>(col)] = found;
    sp.sign[static_cast<std::size_t>(col)] = sgn;
  }
  return sp;
}

const RootSystem& RootSystem::get() {
  static const RootSystem rs = [] {
    RootSystem r;
    auto basis = [](int i) {
      Weight w{};
      w.c[static_cast<std::size_t>(i)] = 1;
      return w;
    };
    for (int i = 0; i < 4; ++i) r.spin9_positive.push_back(basis(i));
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        Weight diff{};
        diff.c[static_cast<std::size_t>(i)] = 1;
        diff.c[static_cast<std::size_t>(j)] = -1;
        r.spin9_positive.push_back(diff);
        Weight sum{};
        sum.c[static_cast<std::size_t>(i)] = 1;
        sum.c[static_cast<std::size_t>(j)] = 1;
        r.spin9_positive.push_back(sum);
      }
    }
    const Rat half = make_rat(1, 2);
    for (int mask = 0; mask < 8; ++mask) {
      Weight w{};
      w.c[0] = half;
      for (int i = 1; i < 4; ++i)
        w.c[static_cast<std::size_t>(i)] = ((mask >> (i - 1)) & 1) ? -half : half;
      r.complementary_positive.push_back(w);
    }
    Weight a1{};
    a1.c[1] = 1;
    a1.c[2] = -1;
    Weight a2{};
    a2.c[2] = 1;
    a2.c[3] = -1;
    Weight a3{};
    a3.c[3] = 1;
    Weight a4{};
    a4.c[0] = half;
    a4.c[1] = -half;
    a4.c[2] = -half;
    a4.c[3] = -half;
    r.simple = {a1, a2, a3, a4};
    r.f4_positive = r.spin9_positive;
    r.f4_positive.insert(r.f4_positive.end(), r.complementary_positive.begin(),
                         r.complementary_positive.end());
    return r;
  }();
  return rs;
}

std::vector<Weight> RootSystem::spin9_all() const {
  std::vector<Weight> all = spin9_positive;
  for (const Weight& w : spin9_positive) all.push_back(-w);
  return all;
}

std::vector<Weight> RootSystem::f4_all() const {
  std::vector<Weight> all = f4_positive;
  for (const Weight& w : f4_positive) all.push_back(-w);
  return all;
}

const std::vector<WeylElement>& weyl_f4() {
  static const std::vector<WeylElement> group = [] {
    const RootSystem& rs = RootSystem::get();
    std::array<WeylElement, 4> gens = {
        WeylElement::reflection(rs.simple[0]), WeylElement::reflection(rs.simple[1]),
        WeylElement::reflection(rs.simple[2]), WeylElement::reflection(rs.simple[3])};
    std::map<std::array<int, 16>, WeylElement> seen;
    WeylElement id = WeylElement::identity();
    seen.emplace(id.key(), id);
    std::vector<WeylElement> frontier{id};
    while (!frontier.empty()) {
      std::vector<WeylElement> next;
      for (const WeylElement& w : frontier) {
        for (const WeylElement& g : gens) {
          WeylElement prod = g * w;
          auto [it, inserted] = seen.emplace(prod.key(), prod);
          if (inserted) next.push_back(std::move(prod));
        }
      }
      if (seen.size() > 5000)
        throw std::logic_error("weyl_f4: closure exceeded safety bound");
      frontier = std::move(next);
    }
    if (seen.size() != 1152) throw std::logic_error("weyl_f4: unexpected group order");
    std::vector<WeylElement> out;
    out.reserve(seen.size());
    for (const auto& [k, w] : seen) out.push_back(w);
    return out;
  }();
  return group;
}

const std::vector<WeylElement>& weyl_spin9() {
  static const std::vector<WeylElement> sub = [] {
    std::vector<WeylElement> out;
    for (const WeylElement& w : weyl_f4())
      if (preserves_spin9_roots(w)) out.push_back(w);
    if (out.size() != 384) throw std::logic_error("weyl_spin9: unexpected subgroup order");
    for (const WeylElement& w : out)
      if (!w.as_signed_perm())
        throw std::logic_error("weyl_spin9: element is not a signed permutation");
    return out;
  }();
  return sub;
}

const std::array<WeylElement, 3>& coset_reps() {
  static const std::array<WeylElement, 3> reps = [] {
    const RootSystem& rs = RootSystem::get();
    WeylElement s3 = WeylElement::reflection(rs.simple[2]);
    WeylElement s4 = WeylElement::reflection(rs.simple[3]);
    return std::array<WeylElement, 3>{WeylElement::identity(), s4, s4 * s3 * s4};
  }();
  return reps;
}

bool preserves_spin9_roots(const WeylElement& w) {
  static const std::set<Weight> roots = [] {
    std::vector<Weight> all = RootSystem::get().spin9_all();
    return std::set<Weight>(all.begin(), all.end());
  }();
  for (const Weight& r : roots)
    if (roots.find(w.apply(r)) == roots.end()) return false;
  return true;
}

Poly euler_product(std::span<const Weight> weights) {
  Poly prod = Poly::constant(4, 1);
  for (const Weight& w : weights) prod = prod * w.to_poly();
  return prod;
}

}  // namespace cayley::f4roots
