#include "crclass/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

#include "crclass/errors.hpp"

namespace crclass {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(std::size_t slot, unsigned power) {
  Monomial m;
  m.exp[slot] = static_cast<std::uint16_t>(power);
  m.degree = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree > other.degree) return false;
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    if (exp[s] > other.exp[s]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    const unsigned e = unsigned{a.exp[s]} + b.exp[s];
    if (e > 0xFFFFu) throw ArithmeticError("monomial exponent overflow");
    m.exp[s] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree + b.degree;
  return m;
}

Monomial operator/(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (std::size_t s = 0; s < kNumSlots; ++s) m.exp[s] = static_cast<std::uint16_t>(b.exp[s] - a.exp[s]);
  m.degree = b.degree - a.degree;
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = degree;
  for (auto e : exp) h = h * 1000003u + e;
  return h;
}

bool mono_less(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t s = kNumSlots; s-- > 0;) {
    if (a.exp[s] != b.exp[s]) return a.exp[s] < b.exp[s];
  }
  return false;
}

namespace {

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return mono_less(b, a); }
};

constexpr std::array<const char*, kNumSlots> kSlotNames = {"z1", "z2", "zb1", "zb2", "u1", "u2", "u3"};

std::string mono_to_string(const Monomial& m) {
  std::string out;
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    if (m.exp[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += kSlotNames[s];
    if (m.exp[s] > 1) out += "^" + std::to_string(m.exp[s]);
  }
  return out;
}

}  // namespace

std::string VarId::name() const { return kSlotNames[slot()]; }

// ---------------------------------------------------------------------------
// MultiPoly basics

MultiPoly::MultiPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)});
}

MultiPoly MultiPoly::monomial(const Monomial& m, GaussianRational c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return mono_less(b.mono, a.mono); });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

GaussianRational MultiPoly::constant_value() const {
  if (terms_.empty()) return GaussianRational{};
  if (!terms_[0].mono.is_one() || terms_.size() != 1) throw InternalError("constant_value of a non-constant polynomial");
  return terms_[0].coeff;
}

unsigned MultiPoly::degree_in(std::size_t slot) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[slot]);
  return d;
}

unsigned MultiPoly::min_degree_in(std::size_t slot) const noexcept {
  if (terms_.empty()) return 0;
  unsigned d = 0xFFFFu;
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.mono.exp[slot]);
  return d;
}

unsigned MultiPoly::used_slots() const noexcept {
  unsigned mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t s = 0; s < kNumSlots; ++s) {
      if (t.mono.exp[s] != 0) mask |= 1u << s;
    }
  }
  return mask;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

template <class Combine>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                         Combine combine, bool negate_b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && mono_less(b[j].mono, a[i].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || mono_less(a[i].mono, b[j].mono)) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      GaussianRational c = combine(a[i].coeff, b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const auto& x, const auto& y) { return x + y; }, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const auto& x, const auto& y) { return x - y; }, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly{};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, GaussianRational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono);
      if (inserted) {
        it->second = x.coeff * y.coeff;
      } else {
        it->second += x.coeff * y.coeff;
      }
    }
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return mono_less(y.mono, x.mono); });
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return MultiPoly{};
  if (c.is_one()) return *this;
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const GaussianRational& c) const {
  if (c.is_zero()) return MultiPoly{};
  MultiPoly p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    if (!c.is_one()) t.coeff *= c;
  }
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::diff(std::size_t slot) const {
  MultiPoly p;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exp[slot];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exp[slot] = static_cast<std::uint16_t>(e - 1);
    m.degree -= 1;
    p.terms_.push_back({m, t.coeff * GaussianRational(static_cast<long>(e))});
  }
  return p;
}

MultiPoly MultiPoly::conj() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t s = 0; s < kNumSlots; ++s) m.exp[conj_slot(s)] = t.mono.exp[s];
    m.degree = t.mono.degree;
    terms.push_back({m, t.coeff.conj()});
  }
  return from_terms(std::move(terms));
}

GaussianRational MultiPoly::eval(std::span<const GaussianRational, kNumSlots> values) const {
  std::array<std::vector<GaussianRational>, kNumSlots> powers;
  auto power = [&](std::size_t s, unsigned e) -> const GaussianRational& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(GaussianRational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * values[s]);
    return cache[e];
  };
  GaussianRational sum;
  for (const auto& t : terms_) {
    GaussianRational v = t.coeff;
    for (std::size_t s = 0; s < kNumSlots; ++s) {
      if (t.mono.exp[s] != 0) v *= power(s, t.mono.exp[s]);
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::coeff_in(std::size_t slot, unsigned k) const {
  MultiPoly p;
  for (const auto& t : terms_) {
    if (t.mono.exp[slot] != k) continue;
    Monomial m = t.mono;
    m.exp[slot] = 0;
    m.degree -= k;
    p.terms_.push_back({m, t.coeff});
  }
  return p;
}

MultiPoly MultiPoly::shifted_down(std::size_t slot, unsigned k) const {
  if (k == 0) return *this;
  MultiPoly p = *this;
  for (auto& t : p.terms_) {
    t.mono.exp[slot] = static_cast<std::uint16_t>(t.mono.exp[slot] - k);
    t.mono.degree -= k;
  }
  return p;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || terms_[0].coeff.is_one()) return *this;
  return scaled(terms_[0].coeff.inverse());
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string term;
    if (t.mono.is_one()) {
      term = t.coeff.to_string();
    } else if (t.coeff.is_one()) {
      term = mono_to_string(t.mono);
    } else if (t.coeff == GaussianRational(-1)) {
      term = "-" + mono_to_string(t.mono);
    } else if (t.coeff.is_atomic()) {
      term = t.coeff.to_string() + "*" + mono_to_string(t.mono);
    } else {
      term = "(" + t.coeff.to_string() + ")*" + mono_to_string(t.mono);
    }
    if (first) {
      out = term;
      first = false;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

bool MultiPoly::is_atomic_factor() const {
  if (terms_.size() != 1) return terms_.empty();
  const auto& t = terms_[0];
  return !t.mono.is_one() || t.coeff.is_atomic();
}

std::size_t MultiPoly::hash() const noexcept {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= t.coeff.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Division

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return MultiPoly{};
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    if (a.degree_in(s) < b.degree_in(s)) return std::nullopt;
  }
  if (!b.terms().back().mono.divides(a.terms().back().mono)) return std::nullopt;

  const auto& lead = b.leading();
  const GaussianRational lead_inv = lead.coeff.inverse();
  std::map<Monomial, GaussianRational, MonoGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);

  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    const Monomial qm = it->first / lead.mono;
    const GaussianRational qc = it->second * lead_inv;
    rem.erase(it);
    for (std::size_t k = 1; k < b.size(); ++k) {
      const auto& t = b.terms()[k];
      auto [pos, inserted] = rem.try_emplace(t.mono * qm);
      if (inserted) {
        pos->second = -(qc * t.coeff);
      } else {
        pos->second -= qc * t.coeff;
        if (pos->second.is_zero()) rem.erase(pos);
      }
    }
    quotient.push_back({qm, qc});
  }
  return MultiPoly::from_terms(std::move(quotient));
}

// ---------------------------------------------------------------------------
// GCD: recursive content / primitive part over Q(i), with a subresultant PRS
// for the primitive parts and an evaluation shortcut that proves coprimality.

namespace {

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InternalError("expected exact polynomial division");
  return *std::move(q);
}

Monomial min_monomial(const MultiPoly& p) {
  Monomial m;
  m.degree = 0;
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    m.exp[s] = static_cast<std::uint16_t>(p.min_degree_in(s));
    m.degree += m.exp[s];
  }
  return m;
}

MultiPoly divide_monomial(const MultiPoly& p, const Monomial& m) {
  MultiPoly q = p;
  for (std::size_t s = 0; s < kNumSlots; ++s) q = q.shifted_down(s, m.exp[s]);
  return q;
}

Monomial min_of(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    m.exp[s] = std::min(a.exp[s], b.exp[s]);
    m.degree += m.exp[s];
  }
  return m;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t s) {
  std::vector<MultiPoly> out;
  const unsigned d = p.degree_in(s);
  for (unsigned k = 0; k <= d; ++k) {
    MultiPoly c = p.coeff_in(s, k);
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const MultiPoly& x, const MultiPoly& y) { return x.size() < y.size(); });
  return out;
}

// gcd(seed, c_1, c_2, ...) with early exit on a unit.
MultiPoly gcd_with_all(MultiPoly seed, const std::vector<MultiPoly>& polys) {
  for (const auto& c : polys) {
    if (seed.is_constant()) return MultiPoly(1);
    seed = gcd_rec(seed, c);
  }
  return seed.is_constant() ? MultiPoly(1) : seed;
}

MultiPoly content_in(const MultiPoly& p, std::size_t s) {
  auto coeffs = coefficients_in(p, s);
  MultiPoly seed = coeffs.front();
  coeffs.erase(coeffs.begin());
  return gcd_with_all(std::move(seed), coeffs).monic();
}

MultiPoly primitive_part(const MultiPoly& p, std::size_t s) {
  MultiPoly c = content_in(p, s);
  return c.is_constant() ? p : divide_or_throw(p, c);
}

MultiPoly lc_in(const MultiPoly& p, std::size_t s) { return p.coeff_in(s, p.degree_in(s)); }

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t s) {
  const unsigned db = b.degree_in(s);
  const MultiPoly lb = lc_in(b, s);
  MultiPoly r = a;
  unsigned dr = r.degree_in(s);
  int missing = static_cast<int>(dr) - static_cast<int>(db) + 1;
  while (!r.is_zero() && dr >= db) {
    const MultiPoly lr = lc_in(r, s);
    MultiPoly shifted = b * lr;
    shifted = shifted.times_monomial(Monomial::of(s, dr - db), 1);
    r = r * lb - shifted;
    --missing;
    dr = r.degree_in(s);
  }
  if (missing > 0 && !r.is_zero()) r *= lb.pow(static_cast<unsigned>(missing));
  return r;
}

// Univariate Euclid over Q(i); coefficients indexed by degree.
std::size_t univariate_gcd_degree(std::vector<GaussianRational> a, std::vector<GaussianRational> b) {
  auto trim = [](std::vector<GaussianRational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const GaussianRational inv = b.back().inverse();
    while (a.size() >= b.size()) {
      const GaussianRational f = a.back() * inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True only when the primitive parts are certainly coprime: at a point where
// both leading coefficients survive, a nontrivial common factor in slot s
// would leave a univariate image gcd of positive degree.
bool images_prove_coprime(const MultiPoly& a, const MultiPoly& b, std::size_t s) {
  static constexpr std::array<long, 11> kValues = {3, -2, 5, 7, -4, 11, 2, -9, 13, 6, -5};
  const MultiPoly la = lc_in(a, s);
  const MultiPoly lb = lc_in(b, s);
  for (std::size_t attempt = 0; attempt < 3; ++attempt) {
    std::array<GaussianRational, kNumSlots> pt;
    for (std::size_t t = 0; t < kNumSlots; ++t) pt[t] = GaussianRational(kValues[(t * 3 + attempt * 5) % kValues.size()]);
    pt[s] = GaussianRational(0);
    if (la.eval(pt).is_zero() || lb.eval(pt).is_zero()) continue;
    auto image = [&](const MultiPoly& p) {
      std::vector<GaussianRational> u(p.degree_in(s) + 1);
      for (const auto& t : p.terms()) {
        GaussianRational v = t.coeff;
        for (std::size_t k = 0; k < kNumSlots; ++k) {
          if (k == s || t.mono.exp[k] == 0) continue;
          GaussianRational pw(1);
          for (unsigned e = 0; e < t.mono.exp[k]; ++e) pw *= pt[k];
          v *= pw;
        }
        u[t.mono.exp[s]] += v;
      }
      return u;
    };
    return univariate_gcd_degree(image(a), image(b)) == 0;
  }
  return false;
}

// gcd of two polynomials primitive in slot s, both of positive degree in s.
MultiPoly subresultant_gcd(MultiPoly a, MultiPoly b, std::size_t s) {
  if (a.degree_in(s) < b.degree_in(s)) std::swap(a, b);
  MultiPoly g(1);
  MultiPoly h(1);
  for (;;) {
    const unsigned delta = a.degree_in(s) - b.degree_in(s);
    MultiPoly r = pseudo_remainder(a, b, s);
    if (r.is_zero()) return primitive_part(b, s);
    if (r.degree_in(s) == 0) return MultiPoly(1);
    a = std::move(b);
    b = divide_or_throw(r, g * h.pow(delta));
    g = lc_in(a, s);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(delta), h.pow(delta - 1));
    }
  }
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a == b) return a;

  const Monomial ma = min_monomial(a);
  const Monomial mb = min_monomial(b);
  const Monomial m = min_of(ma, mb);
  const MultiPoly a1 = ma.is_one() ? a : divide_monomial(a, ma);
  const MultiPoly b1 = mb.is_one() ? b : divide_monomial(b, mb);
  const MultiPoly mono = MultiPoly::monomial(m, 1);
  if (a1.is_constant() || b1.is_constant()) return mono;

  const unsigned ua = a1.used_slots();
  const unsigned ub = b1.used_slots();
  if (ua != ub) {
    // A slot missing from one side can only divide the other's content in it.
    for (std::size_t s = 0; s < kNumSlots; ++s) {
      const unsigned bit = 1u << s;
      if ((ua & bit) && !(ub & bit)) return mono * gcd_with_all(b1, coefficients_in(a1, s));
      if ((ub & bit) && !(ua & bit)) return mono * gcd_with_all(a1, coefficients_in(b1, s));
    }
  }

  // Coprime in every shared slot means coprime.
  bool coprime = true;
  for (std::size_t s = 0; s < kNumSlots && coprime; ++s) {
    if (ua & (1u << s)) coprime = images_prove_coprime(a1, b1, s);
  }
  if (coprime) return mono;

  if (a1.size() >= b1.size()) {
    if (exact_divide(a1, b1)) return mono * b1;
  } else if (exact_divide(b1, a1)) {
    return mono * a1;
  }

  std::size_t main = kNumSlots;
  unsigned best = 0;
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    if (!(ua & (1u << s))) continue;
    const unsigned d = std::max(a1.degree_in(s), b1.degree_in(s));
    if (main == kNumSlots || d < best) {
      main = s;
      best = d;
    }
  }

  const MultiPoly ca = content_in(a1, main);
  const MultiPoly cb = content_in(b1, main);
  const MultiPoly pa = ca.is_constant() ? a1 : divide_or_throw(a1, ca);
  const MultiPoly pb = cb.is_constant() ? b1 : divide_or_throw(b1, cb);
  const MultiPoly c = gcd_rec(ca, cb);
  if (images_prove_coprime(pa, pb, main)) return mono * c;
  return mono * c * subresultant_gcd(pa, pb, main);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_rec(a, b).monic();
}

}  // namespace crclass
