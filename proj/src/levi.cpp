#include "crclass/levi.hpp"

#include "crclass/errors.hpp"

namespace crclass {

namespace {

void require_shape(const ValidatedSpec& spec, int n, const char* what) {
  if (spec.shape().c != 1 || (n > 0 && spec.shape().n != n)) {
    throw ValidationError(ValidationError::Kind::Dimension,
                          std::string(what) + " requires " + (n > 0 ? "(n, c) = (" + std::to_string(n) + ", 1)" : "c = 1"));
  }
}

const RationalExpr kI{GaussianRational::i()};

// Partial derivatives of a single graphing function.
struct PhiDerivs {
  explicit PhiDerivs(const RationalExpr& phi) : f(phi) {}
  RationalExpr d(VarId a) const { return f.diff(a); }
  RationalExpr d(VarId a, VarId b) const { return f.diff(a).diff(b); }
  const RationalExpr& f;
};

}  // namespace

LeviMatrix levi_matrix(const Frame& frame, const OneForm& rho) {
  const std::size_t n = frame.L.size();
  LeviMatrix m(n, std::vector<RationalExpr>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = kI * rho.apply(lie_bracket(frame.L[c], frame.Lbar[r]));
  }
  return m;
}

LeviMatrix levi_matrix(const ValidatedSpec& spec) {
  require_shape(spec, 0, "levi_matrix");
  const FrameSet fs = cramer_frame(spec);
  return levi_matrix(fs.frame, rho0(fs)[0]);
}

RationalExpr levi_det(const ValidatedSpec& spec) {
  require_shape(spec, 2, "levi_det");
  return determinant(levi_matrix(spec));
}

RationalExpr levi_det_closed_form(const ValidatedSpec& spec) {
  require_shape(spec, 2, "levi_det_closed_form");
  const PhiDerivs p(spec.phi()[0]);
  const VarId z1 = VarId::z(1), z2 = VarId::z(2), w1 = VarId::zbar(1), w2 = VarId::zbar(2), u = VarId::u(1);
  const RationalExpr f11 = p.d(z1, w1), f12 = p.d(z1, w2), f21 = p.d(z2, w1), f22 = p.d(z2, w2);
  const RationalExpr fz1 = p.d(z1), fz2 = p.d(z2), fw1 = p.d(w1), fw2 = p.d(w2);
  const RationalExpr pu = p.d(u), fuu = p.d(u, u);
  const RationalExpr fz1u = p.d(z1, u), fz2u = p.d(z2, u), fw1u = p.d(w1, u), fw2u = p.d(w2, u);

  RationalExpr b = f22 * f11 - f21 * f12;
  b += f21 * fw2 * fz1u * pu - f21 * fw2 * fz1 * fuu - fw1 * fz2u * fz1 * fw2u + fw1 * fz2u * pu * f12;
  b += -fz2 * fw1u * fw2 * fz1u - fz2 * fw1 * fuu * f12 + fz2 * fw1u * pu * f12 - f22 * fw1 * fz1u * pu;
  b += f22 * fz1 * fw1 * fuu - f22 * fz1 * fw1u * pu + f21 * fz1 * fw2u * pu + fz2 * fw2u * fw1 * fz1u;
  b += -fz2 * fw2u * f11 * pu + fw2 * fz2u * fz1 * fw1u - fw2 * fz2u * pu * f11 + fw2 * fz2 * fuu * f11;
  b += kI * (f22 * fz1 * fw1u + fw1 * fz2u * f12 + f21 * fw2 * fz1u + fz2 * fw2u * f11);
  b -= kI * (fw2 * fz2u * f11 + f21 * fz1 * fw2u + fz2 * fw1u * f12 + f22 * fw1 * fz1u);
  b += -f21 * f12 * pu * pu + f22 * f11 * pu * pu;

  const RationalExpr prefactor = RationalExpr(4) * ((kI + pu).pow(3) * (pu - kI).pow(3)).inverse();
  return prefactor * b;
}

RationalExpr l1a1(const ValidatedSpec& spec) {
  require_shape(spec, 2, "l1a1");
  const FrameSet fs = cramer_frame(spec);
  return fs.L()[0].apply(fs.A[0][0].conj());
}

RationalExpr l1a1_closed_form(const ValidatedSpec& spec) {
  require_shape(spec, 2, "l1a1_closed_form");
  const PhiDerivs p(spec.phi()[0]);
  const VarId z1 = VarId::z(1), w1 = VarId::zbar(1), u = VarId::u(1);
  const RationalExpr f11 = p.d(z1, w1), fz1 = p.d(z1), fw1 = p.d(w1);
  const RationalExpr pu = p.d(u), fuu = p.d(u, u), fz1u = p.d(z1, u), fw1u = p.d(w1, u);
  const RationalExpr num =
      -f11 * (RationalExpr(1) + pu * pu) + fw1 * fz1u * (kI + pu) + fz1 * fw1u * (pu - kI) - fz1 * fw1 * fuu;
  return num / ((kI + pu) * (pu - kI).pow(2));
}

namespace {

std::optional<RationalExpr> quotient(const RationalExpr& num, const RationalExpr& den) {
  if (den.is_zero()) return std::nullopt;
  return -num / den;
}

}  // namespace

KQuotients k_quotients(const ValidatedSpec& spec) {
  require_shape(spec, 2, "k_quotients");
  const FrameSet fs = cramer_frame(spec);
  const auto& L = fs.L();
  const auto& Lb = fs.Lbar();
  const RationalExpr a1 = fs.A[0][0], a2 = fs.A[1][0];
  const RationalExpr a1b = a1.conj();
  const RationalExpr l2a1b = L[1].apply(a1b), l1a1b = L[0].apply(a1b);
  const RationalExpr lb1a2 = Lb[0].apply(a2), lb1a1 = Lb[0].apply(a1);
  KQuotients q;
  q.main = quotient(l2a1b - lb1a2, l1a1b - lb1a1);
  q.via_l2 = quotient(l2a1b, l1a1b);
  q.via_lbar1 = quotient(lb1a2, lb1a1);
  return q;
}

namespace {

ExprMatrix constant_matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  ExprMatrix m;
  for (const auto& row : rows) {
    std::vector<RationalExpr> r;
    for (const auto& v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

KernelData slant_k(const ValidatedSpec& spec) {
  require_shape(spec, 2, "slant_k");
  const FrameSet fs = cramer_frame(spec);
  return slant_k(spec, fs.frame, rho0(fs)[0]);
}

KernelData slant_k(const ValidatedSpec& spec, const Frame& base_frame, const OneForm& rho) {
  require_shape(spec, 2, "slant_k");
  const LeviMatrix base = levi_matrix(base_frame, rho);
  const int rank = generic_rank(base).rank;
  if (rank != 1) throw RankMismatchError("slant function needs generic Levi rank 1, got " + std::to_string(rank));

  const GaussianRational one(1), zero(0), i = GaussianRational::i();
  const std::vector<ExprMatrix> candidates = {
      constant_matrix({{one, zero}, {zero, one}}),
      constant_matrix({{zero, one}, {one, zero}}),
      constant_matrix({{one, one}, {zero, one}}),
      constant_matrix({{one, i}, {zero, one}}),
  };

  for (const auto& m : candidates) {
    KernelData kd{RationalExpr(), VectorField(spec.shape()), OneForm(spec.shape()), m, {}, {}, RationalExpr(), {}};
    kd.frame = change_frame(base_frame, m);
    kd.levi = levi_matrix(kd.frame, rho);
    if (kd.levi[0][0].is_zero()) continue;
    kd.k = -kd.levi[0][1] / kd.levi[0][0];
    kd.K = kd.k * kd.frame.L[0] + kd.frame.L[1];
    const RationalExpr inv_det = determinant(m).inverse();
    kd.kappa0[0] = kd.K[1] * inv_det;
    kd.kappa0[1] = -kd.K[0] * inv_det;
    kd.freeman = kd.kappa0.apply(lie_bracket(kd.K, kd.frame.Lbar[0]));
    try {
      kd.freeman_at_point = kd.freeman.eval(spec.base_values());
    } catch (const PoleError&) {
    }
    return kd;
  }
  throw InternalError("no frame adjustment makes l11 nonzero although the Levi rank is 1");
}

RationalExpr freeman(const ValidatedSpec& spec) { return slant_k(spec).freeman; }

bool is_cr_function(const RationalExpr& f, const ValidatedSpec& spec) {
  const FrameSet fs = cramer_frame(spec);
  for (const auto& lb : fs.Lbar()) {
    if (!lb.apply(f).is_zero()) return false;
  }
  return true;
}

}  // namespace crclass
