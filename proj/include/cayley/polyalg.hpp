#ifndef CAYLEY_POLYALG_HPP
#define CAYLEY_POLYALG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayley/exactnum.hpp"

// Exact sparse multivariate polynomials over Q under graded-lex order, with
// exact division by reduction, homogeneous-linear substitution, monomial
// symmetric evaluation and a canonical bit-stable text form. Supports up to 7
// variables with exponents below 128 (enough for every computation here; the
// packed representation checks both bounds and refuses to overflow).
namespace cayley::polyalg {

using exactnum::Int;
using exactnum::Rat;

// Normalized rational constructor (mpq_class does not canonicalize on its own).
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Exponent vector packed into one 64-bit key so that unsigned comparison is
// graded lex: [deg:15][v0:7][v1:7][v2:7][v3:7][v4:7][v5:7][v6:7].
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr int kMaxExponent = 127;

  Monomial() : key_(0) {}

  static Monomial unit() { return Monomial(); }
  static Monomial variable(int i, int exponent = 1);
  static Monomial from_exponents(std::span<const int> exps);

  int exponent(int i) const {
    return static_cast<int>((key_ >> shift(i)) & 0x7f);
  }
  int degree() const { return static_cast<int>(key_ >> 49); }
  std::uint64_t key() const { return key_; }

  // Product of monomials = field-wise exponent sum; throws on overflow past
  // the packed field width.
  friend Monomial operator*(Monomial a, Monomial b) {
    std::uint64_t sum = a.key_ + b.key_;
    if (((sum ^ a.key_ ^ b.key_) & kBoundary) != 0)
      throw std::overflow_error("Monomial: exponent exceeds packed capacity");
    Monomial m;
    m.key_ = sum;
    return m;
  }

  // Exact quotient a / b when b divides a field-wise; false otherwise.
  static std::pair<bool, Monomial> try_divide(Monomial a, Monomial b) {
    std::uint64_t diff = a.key_ - b.key_;
    if (((diff ^ a.key_ ^ b.key_) & kBoundary) != 0) return {false, Monomial()};
    Monomial m;
    m.key_ = diff;
    return {true, m};
  }

  bool operator<(const Monomial& o) const { return key_ < o.key_; }
  bool operator==(const Monomial& o) const { return key_ == o.key_; }
  bool operator!=(const Monomial& o) const { return key_ != o.key_; }

 private:
  static constexpr int shift(int i) { return 42 - 7 * i; }
  // Carry/borrow detector bits at each packed-field boundary.
  static constexpr std::uint64_t kBoundary =
      (1ull << 7) | (1ull << 14) | (1ull << 21) | (1ull << 28) |
      (1ull << 35) | (1ull << 42) | (1ull << 49);
  std::uint64_t key_;
};

class Poly;

// Exact division failed: carries the offending remainder.
class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError(std::string what, std::shared_ptr<const Poly> remainder)
      : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}
  const Poly& remainder() const { return *remainder_; }

 private:
  std::shared_ptr<const Poly> remainder_;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rat>;

  explicit Poly(int nvars) : nvars_(check_nvars(nvars)) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  // Homogeneous linear form sum_i coeffs[i] * v_i.
  static Poly linear(int nvars, std::span<const Rat> coeffs);
  static Poly monomial(int nvars, Monomial m, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  bool is_homogeneous() const;
  Rat coefficient(Monomial m) const;

  // Accumulates c on monomial m, erasing the entry if it cancels to zero.
  Poly& add_term(Monomial m, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Canonical text form: terms in descending graded-lex order, explicit
  // rational coefficients; bit-stable across runs.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;  // default names v1..vN

 private:
  static int check_nvars(int nvars) {
    if (nvars < 1 || nvars > Monomial::kMaxVars)
      throw std::invalid_argument("Poly: unsupported variable count");
    return nvars;
  }
  int nvars_;
  TermMap terms_;
};

// Quotient num / den under graded-lex reduction against the single divisor;
// throws NotDivisibleError (with remainder) when den does not divide num.
Poly exact_divide(const Poly& num, const Poly& den);

// Equivalent route dividing by each factor in turn; must agree with a single
// exact_divide against the product of the factors.
Poly divide_by_factors(const Poly& num, std::span<const Poly> factors);

// Substitute images[i] (a homogeneous linear form over out_nvars variables,
// or zero) for variable i of p.
Poly linear_substitute(const Poly& p, int out_nvars, std::span<const Poly> images);

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  std::string to_string() const;  // "(a,b,...)"

 private:
  std::vector<int> parts_;
};

// Monomial symmetric polynomial m_I evaluated at the given values: the sum
// over distinct assignments of the parts of I to value slots (each distinct
// monomial counted once). Empty partition gives 1; more parts than values
// gives 0.
Poly s_I_eval(const Partition& I, std::span<const Poly> values);

// All ordered two-way multiset splits (J, K) of I with J + K = I (as
// multisets); used by the disjoint-union product rule for s_I.
std::vector<std::pair<Partition, Partition>> two_way_splits(const Partition& I);

}  // namespace cayley::polyalg

#endif  // CAYLEY_POLYALG_HPP
