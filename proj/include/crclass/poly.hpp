#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crclass/gaussian_rational.hpp"
#include "crclass/variables.hpp"

namespace crclass {

/// Exponent vector over the fixed slots, with cached total degree.
struct Monomial {
  std::array<std::uint16_t, kNumSlots> exp{};
  std::uint32_t degree{0};

  static Monomial of(std::size_t slot, unsigned power = 1);

  bool is_one() const noexcept { return degree == 0; }
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires a.divides(b) to hold in reverse: computes b / a.
  friend Monomial operator/(const Monomial& b, const Monomial& a);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp == b.exp; }

  std::size_t hash() const noexcept;
};

/// Graded order: total degree first, then lexicographic with
/// z1 < z2 < zb1 < zb2 < u1 < u2 < u3 (u3 compared first).
bool mono_less(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Sparse multivariate polynomial over Q(i).
///
/// Terms are stored in strictly decreasing monomial order with no zero
/// coefficients, so two polynomials are equal iff their term vectors are.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    GaussianRational coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
  };

  MultiPoly() = default;
  MultiPoly(GaussianRational c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(GaussianRational(c)) {}  // NOLINT

  static MultiPoly variable(VarId v) { return monomial(Monomial::of(v.slot()), 1); }
  static MultiPoly monomial(const Monomial& m, GaussianRational c);
  /// Sorts and merges arbitrary terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Value of a constant polynomial (0 for the zero polynomial).
  GaussianRational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const GaussianRational& leading_coeff() const { return terms_.front().coeff; }

  unsigned degree_in(std::size_t slot) const noexcept;
  unsigned min_degree_in(std::size_t slot) const noexcept;
  unsigned total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree; }
  /// Bit s set iff slot s occurs.
  unsigned used_slots() const noexcept;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly scaled(const GaussianRational& c) const;
  MultiPoly times_monomial(const Monomial& m, const GaussianRational& c) const;
  MultiPoly pow(unsigned e) const;

  /// Formal partial derivative in one slot.
  MultiPoly diff(std::size_t slot) const;
  /// Conjugates coefficients and swaps z_k <-> zb_k.
  MultiPoly conj() const;
  GaussianRational eval(std::span<const GaussianRational, kNumSlots> values) const;

  /// Coefficient of slot^k as a polynomial free of that slot.
  MultiPoly coeff_in(std::size_t slot, unsigned k) const;
  /// Divides out slot^k (all exponents must be >= k).
  MultiPoly shifted_down(std::size_t slot, unsigned k) const;

  /// Makes the leading coefficient 1 (zero stays zero).
  MultiPoly monic() const;

  /// Canonical text, leading term first, e.g. "z1^2*zb1 - 2*I*u1 + 1/2".
  std::string to_string() const;
  /// True when to_string() is a single product that needs no parentheses as a factor.
  bool is_atomic_factor() const;

  std::size_t hash() const noexcept;

 private:
  std::vector<Term> terms_;
};

/// q with a == q*b, or nullopt when b does not divide a. Throws on b == 0.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Monic greatest common divisor (0 only when both inputs are 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace crclass
