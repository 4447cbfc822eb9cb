#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "crclass/poly.hpp"

namespace crclass {

/// Values for every slot, z-bar slots included. Built from a PointAssignment so
/// that zb_k = conj(z_k) always holds.
using SlotValues = std::array<GaussianRational, kNumSlots>;

/// Reduced fraction num/den of polynomials over Q(i).
///
/// Invariants: den != 0, gcd(num, den) = 1, den is monic under the fixed
/// monomial order, and zero is stored as 0/1. Equality is therefore
/// structural equality of the two polynomials.
class RationalExpr {
 public:
  RationalExpr() : den_(1) {}
  RationalExpr(GaussianRational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RationalExpr(long c) : RationalExpr(GaussianRational(c)) {}        // NOLINT
  RationalExpr(MultiPoly p) : num_(std::move(p)), den_(1) {}         // NOLINT

  /// Reduces num/den; throws ArithmeticError when den is zero.
  static RationalExpr fraction(MultiPoly num, MultiPoly den);
  static RationalExpr variable(VarId v) { return RationalExpr(MultiPoly::variable(v)); }

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  GaussianRational constant_value() const { return num_.constant_value(); }

  RationalExpr operator-() const;
  RationalExpr& operator+=(const RationalExpr& o);
  RationalExpr& operator-=(const RationalExpr& o);
  RationalExpr& operator*=(const RationalExpr& o);
  RationalExpr& operator/=(const RationalExpr& o);

  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) { return a += b; }
  friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) { return a -= b; }
  friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) { return a *= b; }
  friend RationalExpr operator/(RationalExpr a, const RationalExpr& b) { return a /= b; }
  friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalExpr& a, const RationalExpr& b) { return !(a == b); }

  /// Throws ArithmeticError for the zero expression.
  RationalExpr inverse() const;
  RationalExpr pow(unsigned e) const;

  /// Formal partial derivative; z, zb and u are independent variables.
  RationalExpr diff(VarId v) const { return diff_slot(v.slot()); }
  RationalExpr diff_slot(std::size_t slot) const;
  /// Conjugates coefficients and swaps z_k <-> zb_k.
  RationalExpr conj() const;
  /// True iff conj() == *this.
  bool is_real() const { return conj() == *this; }
  /// Throws PoleError when the denominator vanishes at the point.
  GaussianRational eval(const SlotValues& values) const;

  /// Canonical text: "num" or "num/den" with parentheses where needed.
  std::string to_string() const;

  std::size_t hash() const noexcept { return num_.hash() * 31u + den_.hash(); }

 private:
  /// den_ = product of base^exp over monic, nonconstant bases. Not canonical
  /// (bases need not be coprime or irreducible); only used to keep
  /// cancellation cheap. Equality never looks at it.
  struct Factor {
    MultiPoly base;
    unsigned exp;
  };
  using Factors = std::vector<Factor>;

  RationalExpr(MultiPoly num, MultiPoly den, Factors factors)
      : num_(std::move(num)), den_(std::move(den)), factors_(std::move(factors)) {}
  static RationalExpr normalized(MultiPoly num, MultiPoly den);
  static RationalExpr reduced(MultiPoly num, Factors factors);
  static void cancel(MultiPoly& num, Factors& factors);
  static MultiPoly expand(const Factors& factors);

  MultiPoly num_;
  MultiPoly den_;
  Factors factors_;
};

inline bool expr_is_zero(const RationalExpr& a) { return a.is_zero(); }

}  // namespace crclass
