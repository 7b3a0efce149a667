#include "cayley/polyalg.hpp"

#include <algorithm>
#include <sstream>

namespace cayley::polyalg {

Monomial Monomial::variable(int i, int exponent) {
  if (i < 0 || i >= kMaxVars) throw std::invalid_argument("Monomial: bad variable index");
  if (exponent < 0 || exponent > kMaxExponent)
    throw std::overflow_error("Monomial: exponent exceeds packed capacity");
  Monomial m;
  m.key_ = (static_cast<std::uint64_t>(exponent) << shift(i)) |
           (static_cast<std::uint64_t>(exponent) << 49);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) m = m * variable(static_cast<int>(i), exps[i]);
  return m;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(Monomial::unit(), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  if (i < 0 || i >= nvars) throw std::invalid_argument("Poly: bad variable index");
  p.terms_.emplace(Monomial::variable(i), Rat(1));
  return p;
}

Poly Poly::linear(int nvars, std::span<const Rat> coeffs) {
  Poly p(nvars);
  if (static_cast<int>(coeffs.size()) != nvars)
    throw std::invalid_argument("Poly::linear: coefficient count mismatch");
  for (int i = 0; i < nvars; ++i)
    if (coeffs[i] != 0) p.terms_.emplace(Monomial::variable(i), coeffs[i]);
  return p;
}

Poly Poly::monomial(int nvars, Monomial m, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rat Poly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly& Poly::add_term(Monomial m, const Rat& c) {
  if (c == 0) return *this;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  // Iterate the smaller factor outside so map probes stay warm.
  const Poly& outer = a.term_count() <= b.term_count() ? a : b;
  const Poly& inner = a.term_count() <= b.term_count() ? b : a;
  mpq_class scratch;
  for (const auto& [ma, ca] : outer.terms_) {
    for (const auto& [mb, cb] : inner.terms_) {
      mpq_mul(scratch.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, fresh] = out.terms_.try_emplace(ma * mb, scratch);
      if (!fresh) it->second += scratch;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  return out;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(nvars_, Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

namespace {

void append_rat(std::ostringstream& os, const Rat& c) {
  os << c.get_num().get_str();
  if (c.get_den() != 1) os << '/' << c.get_den().get_str();
}

}  // namespace

std::string Poly::to_string(std::span<const std::string> names) const {
  if (static_cast<int>(names.size()) < nvars_)
    throw std::invalid_argument("Poly::to_string: not enough variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded lex: leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& c = it->second;
    bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    bool has_vars = it->first.degree() > 0;
    if (!has_vars || mag != 1) {
      append_rat(os, mag);
      if (has_vars) os << '*';
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      int e = it->first.exponent(i);
      if (e == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << names[static_cast<std::size_t>(i)];
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

std::string Poly::to_string() const {
  std::vector<std::string> names;
  for (int i = 1; i <= nvars_; ++i) names.push_back("v" + std::to_string(i));
  return to_string(names);
}

Poly exact_divide(const Poly& num, const Poly& den) {
  if (num.nvars() != den.nvars()) throw std::invalid_argument("exact_divide: variable mismatch");
  if (den.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  Poly quotient(num.nvars());
  Poly rem = num;
  const auto lead = den.terms().rbegin();
  const Monomial lead_m = lead->first;
  const Rat lead_c = lead->second;
  mpq_class scratch;
  while (!rem.is_zero()) {
    auto lt = rem.terms().rbegin();
    auto [ok, qm] = Monomial::try_divide(lt->first, lead_m);
    if (!ok) {
      auto remainder = std::make_shared<const Poly>(std::move(rem));
      throw NotDivisibleError("exact_divide: remainder is nonzero", remainder);
    }
    Rat qc = lt->second / lead_c;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : den.terms()) {
      mpq_mul(scratch.get_mpq_t(), qc.get_mpq_t(), dc.get_mpq_t());
      mpq_neg(scratch.get_mpq_t(), scratch.get_mpq_t());
      rem.add_term(dm * qm, scratch);
    }
  }
  return quotient;
}

Poly divide_by_factors(const Poly& num, std::span<const Poly> factors) {
  Poly acc = num;
  for (const Poly& f : factors) acc = exact_divide(acc, f);
  return acc;
}

Poly linear_substitute(const Poly& p, int out_nvars, std::span<const Poly> images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw std::invalid_argument("linear_substitute: one image per variable required");
  for (const Poly& img : images) {
    if (img.nvars() != out_nvars)
      throw std::invalid_argument("linear_substitute: image variable mismatch");
    if (!img.is_zero() && !(img.is_homogeneous() && img.degree() == 1))
      throw std::invalid_argument("linear_substitute: images must be homogeneous linear");
  }
  // Memoized powers of each image, grown on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& ladder = powers[i];
    if (ladder.empty()) ladder.push_back(Poly::constant(out_nvars, Rat(1)));
    while (static_cast<int>(ladder.size()) <= e) ladder.push_back(ladder.back() * images[i]);
    return ladder[static_cast<std::size_t>(e)];
  };
  Poly out(out_nvars);
  for (const auto& [m, c] : p.terms()) {
    Poly prod = Poly::constant(out_nvars, c);
    for (int i = 0; i < p.nvars() && !prod.is_zero(); ++i) {
      int e = m.exponent(i);
      if (e > 0) prod = prod * power(static_cast<std::size_t>(i), e);
    }
    out += prod;
  }
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_)
    if (v <= 0) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::weight() const {
  int w = 0;
  for (int v : parts_) w += v;
  return w;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

// distinct part values with multiplicities, descending
std::vector<std::pair<int, int>> multiplicities(const Partition& I) {
  std::vector<std::pair<int, int>> out;
  for (int v : I.parts()) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

void s_I_recurse(const std::vector<std::pair<int, int>>& groups, std::size_t gi,
                 std::vector<int>& slot_of, std::span<const Poly> values,
                 const Poly& partial, Poly& acc) {
  if (gi == groups.size()) {
    acc += partial;
    return;
  }
  auto [part, mult] = groups[gi];
  // choose `mult` free slots (ascending, each combination once)
  std::vector<std::size_t> free_slots;
  for (std::size_t s = 0; s < values.size(); ++s)
    if (slot_of[s] == 0) free_slots.push_back(s);
  if (static_cast<int>(free_slots.size()) < mult) return;
  std::vector<std::size_t> pick(static_cast<std::size_t>(mult));
  auto choose = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == pick.size()) {
      Poly prod = partial;
      for (std::size_t idx : pick) prod = prod * values[idx].pow(static_cast<unsigned>(part));
      for (std::size_t idx : pick) slot_of[idx] = 1;
      s_I_recurse(groups, gi + 1, slot_of, values, prod, acc);
      for (std::size_t idx : pick) slot_of[idx] = 0;
      return;
    }
    for (std::size_t j = from; j < free_slots.size(); ++j) {
      pick[depth] = free_slots[j];
      self(self, depth + 1, j + 1);
    }
  };
  choose(choose, 0, 0);
}

}  // namespace

Poly s_I_eval(const Partition& I, std::span<const Poly> values) {
  if (values.empty()) throw std::invalid_argument("s_I_eval: need at least one value");
  int nvars = values[0].nvars();
  for (const Poly& v : values)
    if (v.nvars() != nvars) throw std::invalid_argument("s_I_eval: value variable mismatch");
  if (I.empty()) return Poly::constant(nvars, Rat(1));
  if (I.size() > static_cast<int>(values.size())) return Poly::zero(nvars);
  Poly acc(nvars);
  auto groups = multiplicities(I);
  std::vector<int> used(values.size(), 0);
  s_I_recurse(groups, 0, used, values, Poly::constant(nvars, Rat(1)), acc);
  return acc;
}

std::vector<std::pair<Partition, Partition>> two_way_splits(const Partition& I) {
  auto groups = multiplicities(I);
  std::vector<std::pair<Partition, Partition>> out;
  std::vector<int> take(groups.size(), 0);
  auto rec = [&](auto&& self, std::size_t gi) -> void {
    if (gi == groups.size()) {
      std::vector<int> j, k;
      for (std::size_t t = 0; t < groups.size(); ++t) {
        for (int c = 0; c < take[t]; ++c) j.push_back(groups[t].first);
        for (int c = take[t]; c < groups[t].second; ++c) k.push_back(groups[t].first);
      }
      out.emplace_back(Partition(std::move(j)), Partition(std::move(k)));
      return;
    }
    for (int c = 0; c <= groups[gi].second; ++c) {
      take[gi] = c;
      self(self, gi + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace cayley::polyalg
