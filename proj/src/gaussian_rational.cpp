#include "crclass/gaussian_rational.hpp"

#include <functional>
#include <ostream>

#include "crclass/errors.hpp"

namespace crclass {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator in rational literal");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q, 0);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(i)");
  mpq_class n = norm();
  return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

namespace {

// "I", "2*I", "1/2*I" for a positive imaginary magnitude.
std::string imaginary_magnitude(const mpq_class& m) {
  if (m == 1) return "I";
  return rational_to_string(m) + "*I";
}

}  // namespace

std::string GaussianRational::to_string() const {
  const int sr = sgn(re_);
  const int si = sgn(im_);
  if (si == 0) return rational_to_string(re_);
  if (sr == 0) {
    return si < 0 ? "-" + imaginary_magnitude(-im_) : imaginary_magnitude(im_);
  }
  std::string out = rational_to_string(re_);
  out += si < 0 ? " - " : " + ";
  out += imaginary_magnitude(si < 0 ? mpq_class(-im_) : im_);
  return out;
}

std::size_t GaussianRational::hash() const noexcept {
  auto h = [](const mpz_class& z) { return std::hash<std::string>{}(z.get_str(16)); };
  std::size_t seed = h(re_.get_num());
  seed ^= h(re_.get_den()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  seed ^= h(im_.get_num()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  seed ^= h(im_.get_den()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << a.to_string(); }

}  // namespace crclass
