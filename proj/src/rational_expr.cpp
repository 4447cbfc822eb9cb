#include "crclass/rational_expr.hpp"

#include "crclass/errors.hpp"

namespace crclass {

namespace {

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InternalError("expected exact polynomial division");
  return *std::move(q);
}

}  // namespace

MultiPoly RationalExpr::expand(const Factors& factors) {
  MultiPoly den(1);
  for (const auto& f : factors) den *= f.exp == 1 ? f.base : f.base.pow(f.exp);
  return den;
}

namespace {

// Adds (base, exp) to a factor list, merging equal bases with `combine`.
template <class Combine, class List, class F>
void add_factor(List& list, F f, Combine combine) {
  for (auto& g : list) {
    if (g.base == f.base) {
      g.exp = combine(g.exp, f.exp);
      return;
    }
  }
  list.push_back(std::move(f));
}

}  // namespace

void RationalExpr::cancel(MultiPoly& num, Factors& factors) {
  // One pass suffices: for each prime p, the pass removes
  // min(v_p(num), v_p(den)) copies of p spread over the entries.
  Factors out;
  auto plus = [](unsigned a, unsigned b) { return a + b; };
  for (auto& f : factors) {
    unsigned left = f.exp;
    while (left > 0 && !num.is_constant()) {
      if (auto q = exact_divide(num, f.base)) {
        num = *std::move(q);
        --left;
        continue;
      }
      const MultiPoly h = gcd(num, f.base);
      if (h.is_constant()) break;
      num = divide_exact(num, h);
      add_factor(out, Factor{divide_exact(f.base, h), 1}, plus);
      --left;
    }
    if (left > 0) add_factor(out, Factor{std::move(f.base), left}, plus);
  }
  factors = std::move(out);
}

RationalExpr RationalExpr::reduced(MultiPoly num, Factors factors) {
  if (num.is_zero()) return RationalExpr();
  if (!factors.empty()) cancel(num, factors);
  MultiPoly den = expand(factors);
  return RationalExpr(std::move(num), std::move(den), std::move(factors));
}

RationalExpr RationalExpr::normalized(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw ArithmeticError("division by the zero expression");
  if (num.is_zero()) return RationalExpr();
  if (!den.is_constant()) {
    MultiPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  const GaussianRational lc = den.leading_coeff();
  if (!lc.is_one()) {
    const GaussianRational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  Factors factors;
  if (!den.is_constant()) factors.push_back({den, 1});
  return RationalExpr(std::move(num), std::move(den), std::move(factors));
}

RationalExpr RationalExpr::fraction(MultiPoly num, MultiPoly den) { return normalized(std::move(num), std::move(den)); }

RationalExpr RationalExpr::operator-() const { return RationalExpr(-num_, den_, factors_); }

RationalExpr& RationalExpr::operator+=(const RationalExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = reduced(num_ + o.num_, factors_);

  // Common multiple from the factor lists; only shared parts can cancel.
  Factors common = factors_;
  for (const auto& f : o.factors_) add_factor(common, f, [](unsigned a, unsigned b) { return std::max(a, b); });
  auto cofactor = [&](const Factors& own) {
    MultiPoly m(1);
    for (const auto& f : common) {
      unsigned e = f.exp;
      for (const auto& g : own) {
        if (g.base == f.base) e -= g.exp;
      }
      if (e > 0) m *= e == 1 ? f.base : f.base.pow(e);
    }
    return m;
  };
  MultiPoly sum = num_ * cofactor(factors_) + o.num_ * cofactor(o.factors_);
  return *this = reduced(std::move(sum), std::move(common));
}

RationalExpr& RationalExpr::operator-=(const RationalExpr& o) { return *this += -o; }

RationalExpr& RationalExpr::operator*=(const RationalExpr& o) {
  if (is_zero() || o.is_zero()) return *this = RationalExpr();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  MultiPoly a = num_;
  MultiPoly c = o.num_;
  Factors b = factors_;
  Factors d = o.factors_;
  if (!d.empty()) cancel(a, d);
  if (!b.empty()) cancel(c, b);
  for (auto& f : d) add_factor(b, std::move(f), [](unsigned x, unsigned y) { return x + y; });
  MultiPoly den = expand(b);
  return *this = RationalExpr(a * c, std::move(den), std::move(b));
}

RationalExpr& RationalExpr::operator/=(const RationalExpr& o) { return *this *= o.inverse(); }

RationalExpr RationalExpr::inverse() const {
  if (is_zero()) throw ArithmeticError("division by the zero expression");
  const GaussianRational inv = num_.leading_coeff().inverse();
  MultiPoly den = num_.scaled(inv);
  Factors factors;
  if (!den.is_constant()) factors.push_back({den, 1});
  return RationalExpr(den_.scaled(inv), std::move(den), std::move(factors));
}

RationalExpr RationalExpr::pow(unsigned e) const {
  // gcd(num^e, den^e) = 1 and monic^e is monic.
  if (e == 0) return RationalExpr(1);
  Factors factors = factors_;
  for (auto& f : factors) f.exp *= e;
  return RationalExpr(num_.pow(e), den_.pow(e), std::move(factors));
}

RationalExpr RationalExpr::diff_slot(std::size_t slot) const {
  const MultiPoly dn = num_.diff(slot);
  if (den_.is_constant()) return RationalExpr(dn, den_, {});
  // With D = prod f_i^e_i and P = prod of the f_i that depend on the slot:
  // (N/D)' = (N' P - N sum_i e_i f_i' P/f_i) / (D P).
  Factors factors = factors_;
  MultiPoly p(1);
  std::vector<std::size_t> moving;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].base.degree_in(slot) == 0) continue;
    moving.push_back(i);
    p *= factors[i].base;
  }
  if (moving.empty()) return reduced(dn, std::move(factors));
  MultiPoly sum;
  for (std::size_t i : moving) {
    MultiPoly rest(1);
    for (std::size_t j : moving) {
      if (j != i) rest *= factors[j].base;
    }
    sum += factors[i].base.diff(slot).scaled(GaussianRational(static_cast<long>(factors[i].exp))) * rest;
  }
  for (std::size_t i : moving) ++factors[i].exp;
  return reduced(dn * p - num_ * sum, std::move(factors));
}

RationalExpr RationalExpr::conj() const {
  if (den_.is_constant()) return RationalExpr(num_.conj(), den_, {});
  Factors factors;
  GaussianRational scale(1);
  for (const auto& f : factors_) {
    MultiPoly b = f.base.conj();
    const GaussianRational lc = b.leading_coeff();
    for (unsigned e = 0; e < f.exp; ++e) scale *= lc;
    factors.push_back({b.scaled(lc.inverse()), f.exp});
  }
  MultiPoly den = expand(factors);
  return RationalExpr(num_.conj().scaled(scale.inverse()), std::move(den), std::move(factors));
}

GaussianRational RationalExpr::eval(const SlotValues& values) const {
  const GaussianRational d = den_.eval(values);
  if (d.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes at the evaluation point");
  return num_.eval(values) / d;
}

std::string RationalExpr::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string out = num_.is_atomic_factor() ? num_.to_string() : "(" + num_.to_string() + ")";
  const auto& lead = den_.leading();
  bool single_power = den_.size() == 1 && lead.coeff.is_one();
  if (single_power) {
    int vars = 0;
    for (auto e : lead.mono.exp) vars += e != 0;
    single_power = vars == 1;
  }
  out += "/";
  out += single_power ? den_.to_string() : "(" + den_.to_string() + ")";
  return out;
}

}  // namespace crclass
