#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace crclass {

/// Exact element a + b*i of Q(i).
///
/// Both parts are GMP rationals, which keep themselves in lowest terms with a
/// positive denominator after every operation, so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value), im_(0) {}  // NOLINT: implicit on purpose
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return GaussianRational(0, 1); }
  static GaussianRational fraction(long num, long den);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  /// |a|^2 = re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws ArithmeticError on zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Textual form "a/b + c/d*I"; see to_string() for the exact shapes.
  std::string to_string() const;
  /// True when to_string() is a single signed factor that needs no parentheses
  /// in a product (a rational, or a pure imaginary).
  bool is_atomic() const noexcept { return sgn(re_) == 0 || sgn(im_) == 0; }

  std::size_t hash() const noexcept;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& a);

/// Rational in "p" or "p/q" form.
std::string rational_to_string(const mpq_class& q);

}  // namespace crclass
