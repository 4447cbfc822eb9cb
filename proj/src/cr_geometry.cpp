#include "crclass/cr_geometry.hpp"

#include "crclass/errors.hpp"

namespace crclass {

namespace {

std::string direction_name(Shape shape, int d) { return shape.direction_var(d).name(); }

void check_same_shape(Shape a, Shape b) {
  if (!(a == b)) throw InternalError("vector field shapes differ");
}

}  // namespace

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(Shape shape, std::vector<RationalExpr> coeffs) : shape_(shape), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != shape.dim()) throw InternalError("vector field has wrong dimension");
}

VectorField VectorField::coordinate(Shape shape, int direction) {
  VectorField x(shape);
  x[direction] = RationalExpr(1);
  return x;
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

RationalExpr VectorField::apply(const RationalExpr& f) const {
  RationalExpr sum;
  if (f.is_constant()) return sum;
  for (int d = 0; d < dim(); ++d) {
    if (coeffs_[d].is_zero()) continue;
    RationalExpr df = f.diff_slot(shape_.direction_slot(d));
    if (!df.is_zero()) sum += coeffs_[d] * df;
  }
  return sum;
}

VectorField VectorField::conj() const {
  VectorField out(shape_);
  for (int d = 0; d < dim(); ++d) out.coeffs_[shape_.conj_direction(d)] = coeffs_[d].conj();
  return out;
}

VectorField VectorField::operator-() const {
  VectorField out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  check_same_shape(shape_, o.shape_);
  for (int d = 0; d < dim(); ++d) coeffs_[d] += o.coeffs_[d];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  check_same_shape(shape_, o.shape_);
  for (int d = 0; d < dim(); ++d) coeffs_[d] -= o.coeffs_[d];
  return *this;
}

VectorField operator*(const RationalExpr& f, const VectorField& x) {
  VectorField out(x.shape_);
  for (int d = 0; d < x.dim(); ++d) {
    if (!x.coeffs_[d].is_zero()) out.coeffs_[d] = f * x.coeffs_[d];
  }
  return out;
}

std::string VectorField::to_string() const {
  std::string out;
  for (int d = 0; d < dim(); ++d) {
    if (coeffs_[d].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string partial = "d/d" + direction_name(shape_, d);
    out += coeffs_[d] == RationalExpr(1) ? partial : "(" + coeffs_[d].to_string() + ") " + partial;
  }
  return out.empty() ? "0" : out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  check_same_shape(x.shape(), y.shape());
  VectorField out(x.shape());
  for (int d = 0; d < x.dim(); ++d) out[d] = x.apply(y[d]) - y.apply(x[d]);
  return out;
}

// ---------------------------------------------------------------------------
// OneForm

OneForm::OneForm(Shape shape, std::vector<RationalExpr> coeffs) : shape_(shape), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != shape.dim()) throw InternalError("1-form has wrong dimension");
}

OneForm OneForm::differential(Shape shape, int direction) {
  OneForm w(shape);
  w[direction] = RationalExpr(1);
  return w;
}

RationalExpr OneForm::apply(const VectorField& x) const {
  check_same_shape(shape_, x.shape());
  RationalExpr sum;
  for (int d = 0; d < shape_.dim(); ++d) {
    if (!coeffs_[d].is_zero() && !x[d].is_zero()) sum += coeffs_[d] * x[d];
  }
  return sum;
}

OneForm OneForm::conj() const {
  OneForm out(shape_);
  for (int d = 0; d < shape_.dim(); ++d) out.coeffs_[shape_.conj_direction(d)] = coeffs_[d].conj();
  return out;
}

std::string OneForm::to_string() const {
  std::string out;
  // du first, matching how rho0 is usually written.
  auto emit = [&](int d) {
    if (coeffs_[d].is_zero()) return;
    if (!out.empty()) out += " + ";
    const std::string diff = "d" + direction_name(shape_, d);
    out += coeffs_[d] == RationalExpr(1) ? diff : "(" + coeffs_[d].to_string() + ") " + diff;
  };
  for (int d = 2 * shape_.n; d < shape_.dim(); ++d) emit(d);
  for (int d = 0; d < 2 * shape_.n; ++d) emit(d);
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Frames

FrameSet cramer_frame(Shape shape, const std::vector<RationalExpr>& phi) {
  const ExprMatrix system = cramer_system_matrix(shape, phi);
  const RationalExpr det = determinant(system);
  if (det.is_zero()) throw SingularSystemError("det(i*I + Phi_u) vanishes identically; no intrinsic frame");
  const RationalExpr det_inv = det.inverse();

  FrameSet fs;
  fs.shape = shape;
  fs.A.assign(shape.n, std::vector<RationalExpr>(shape.c));
  for (int i = 0; i < shape.n; ++i) {
    std::vector<RationalExpr> rhs(shape.c);
    for (int j = 0; j < shape.c; ++j) rhs[j] = -phi[j].diff(VarId::z(i + 1));
    for (int l = 0; l < shape.c; ++l) {
      if (shape.c == 1) {
        fs.A[i][l] = rhs[0] * det_inv;
        continue;
      }
      ExprMatrix replaced = system;
      for (int j = 0; j < shape.c; ++j) replaced[j][l] = rhs[j];
      fs.A[i][l] = determinant(replaced) * det_inv;
    }
    VectorField L = VectorField::coordinate(shape, i);
    for (int l = 0; l < shape.c; ++l) L[2 * shape.n + l] = fs.A[i][l];
    fs.frame.Lbar.push_back(L.conj());
    fs.frame.L.push_back(std::move(L));
  }
  return fs;
}

std::vector<OneForm> rho0(const FrameSet& fs) {
  const Shape shape = fs.shape;
  std::vector<OneForm> forms;
  for (int j = 0; j < shape.c; ++j) {
    OneForm w = OneForm::differential(shape, 2 * shape.n + j);
    for (int i = 0; i < shape.n; ++i) {
      w[i] = -fs.A[i][j];
      w[shape.n + i] = -fs.A[i][j].conj();
    }
    forms.push_back(std::move(w));
  }
  return forms;
}

RationalExpr tangency_residual(const FrameSet& fs, const std::vector<RationalExpr>& phi, int i, int j) {
  const ExprMatrix system = cramer_system_matrix(fs.shape, phi);
  RationalExpr sum = phi[j].diff(VarId::z(i + 1));
  for (int l = 0; l < fs.shape.c; ++l) sum += system[j][l] * fs.A[i][l];
  return sum;
}

ExprMatrix coefficient_matrix(const std::vector<VectorField>& fields) {
  if (fields.empty()) return {};
  const int rows = fields[0].dim();
  ExprMatrix m(rows, std::vector<RationalExpr>(fields.size()));
  for (std::size_t c = 0; c < fields.size(); ++c) {
    check_same_shape(fields[0].shape(), fields[c].shape());
    for (int r = 0; r < rows; ++r) m[r][c] = fields[c][r];
  }
  return m;
}

namespace {

// Calls visit(rows) for each k-subset of {0..n-1} in lexicographic order
// until it returns true.
template <class Visit>
bool for_each_subset(int n, int k, Visit visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Decomposition decompose_in_frame(const VectorField& x, const std::vector<VectorField>& frame) {
  const int k = static_cast<int>(frame.size());
  const int rows = x.dim();
  if (k == 0) {
    if (!x.is_zero()) throw NonMemberError("nonzero field is not in the empty span");
    return {};
  }
  const ExprMatrix m = coefficient_matrix(frame);
  std::vector<int> all_cols(k);
  for (int c = 0; c < k; ++c) all_cols[c] = c;

  Decomposition out;
  ExprMatrix square;
  RationalExpr det;
  const bool found = for_each_subset(rows, k, [&](const std::vector<int>& subset) {
    square = submatrix(m, subset, all_cols);
    det = determinant(square);
    if (det.is_zero()) return false;
    out.rows = subset;
    return true;
  });
  if (!found) throw DependentFrameError("frame fields are linearly dependent over the function field");

  // Cramer's rule on the chosen rows.
  const RationalExpr det_inv = det.inverse();
  out.coeffs.resize(k);
  for (int c = 0; c < k; ++c) {
    ExprMatrix replaced = square;
    for (int r = 0; r < k; ++r) replaced[r][c] = x[out.rows[r]];
    out.coeffs[c] = determinant(replaced) * det_inv;
  }

  VectorField residual = x;
  for (int c = 0; c < k; ++c) {
    if (!out.coeffs[c].is_zero()) residual -= out.coeffs[c] * frame[c];
  }
  if (!residual.is_zero()) throw NonMemberError("field is not in the span of the frame; residual " + residual.to_string());
  return out;
}

RankCertificate generic_rank(const std::vector<VectorField>& fields) {
  if (fields.empty()) return {};
  return generic_rank(coefficient_matrix(fields));
}

int rank_at_point(const std::vector<VectorField>& fields, const PointAssignment& point) {
  if (fields.empty()) return 0;
  return rank_at_point(coefficient_matrix(fields), point.slot_values());
}

Frame change_frame(const Frame& frame, const ExprMatrix& m) {
  const std::size_t n = frame.L.size();
  if (m.size() != n) throw InternalError("change-of-frame matrix has wrong size");
  if (determinant(m).is_zero()) throw SingularSystemError("change-of-frame matrix is singular");
  Frame out;
  for (std::size_t i = 0; i < n; ++i) {
    VectorField Li(frame.L[i].shape());
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j].is_zero()) Li += m[i][j] * frame.L[j];
    }
    out.Lbar.push_back(Li.conj());
    out.L.push_back(std::move(Li));
  }
  return out;
}

}  // namespace crclass
