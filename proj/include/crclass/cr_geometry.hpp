#pragma once

#include <string>
#include <vector>

#include "crclass/manifold.hpp"
#include "crclass/matrix.hpp"
#include "crclass/rational_expr.hpp"

namespace crclass {

/// Tangent vector field on M in the intrinsic directions
/// d/dz_1..d/dz_n, d/dzb_1..d/dzb_n, d/du_1..d/du_c.
class VectorField {
 public:
  explicit VectorField(Shape shape) : shape_(shape), coeffs_(shape.dim()) {}
  VectorField(Shape shape, std::vector<RationalExpr> coeffs);
  /// The coordinate field d/d(direction).
  static VectorField coordinate(Shape shape, int direction);

  Shape shape() const noexcept { return shape_; }
  int dim() const noexcept { return shape_.dim(); }
  const std::vector<RationalExpr>& coeffs() const noexcept { return coeffs_; }
  const RationalExpr& operator[](int d) const { return coeffs_.at(d); }
  RationalExpr& operator[](int d) { return coeffs_.at(d); }

  bool is_zero() const;
  /// X(f) = sum_d X_d * df/d(direction d).
  RationalExpr apply(const RationalExpr& f) const;
  VectorField conj() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const RationalExpr& f, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_;
  }

  /// e.g. "d/dz1 + (I*zb1) d/du1"; "0" for the zero field.
  std::string to_string() const;

 private:
  Shape shape_;
  std::vector<RationalExpr> coeffs_;
};

VectorField lie_bracket(const VectorField& x, const VectorField& y);
inline VectorField vf_conj(const VectorField& x) { return x.conj(); }

/// Complex 1-form in dz_1..dz_n, dzb_1..dzb_n, du_1..du_c.
class OneForm {
 public:
  explicit OneForm(Shape shape) : shape_(shape), coeffs_(shape.dim()) {}
  OneForm(Shape shape, std::vector<RationalExpr> coeffs);
  static OneForm differential(Shape shape, int direction);

  Shape shape() const noexcept { return shape_; }
  const RationalExpr& operator[](int d) const { return coeffs_.at(d); }
  RationalExpr& operator[](int d) { return coeffs_.at(d); }

  /// sum_d w_d * X_d.
  RationalExpr apply(const VectorField& x) const;
  OneForm conj() const;
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_; }

  /// e.g. "du1 + (-I*zb1) dz1 + (I*z1) dzb1".
  std::string to_string() const;

 private:
  Shape shape_;
  std::vector<RationalExpr> coeffs_;
};

inline RationalExpr one_form_apply(const OneForm& w, const VectorField& x) { return w.apply(x); }

/// Generators of T^{1,0}M and their conjugates.
struct Frame {
  std::vector<VectorField> L;
  std::vector<VectorField> Lbar;
};

/// Intrinsic frame L_i = d/dz_i + sum_l A_i^l d/du_l solved by Cramer's rule
/// from sum_l (i*delta_jl + phi_j,u_l) A_i^l = -phi_j,z_i.
struct FrameSet {
  Shape shape;
  Frame frame;
  /// A[i][l] is the coefficient of d/du_{l+1} in L_{i+1}.
  std::vector<std::vector<RationalExpr>> A;

  const std::vector<VectorField>& L() const noexcept { return frame.L; }
  const std::vector<VectorField>& Lbar() const noexcept { return frame.Lbar; }
};

/// Throws SingularSystemError when det(i*I + Phi_u) is identically zero.
FrameSet cramer_frame(Shape shape, const std::vector<RationalExpr>& phi);
inline FrameSet cramer_frame(const ValidatedSpec& spec) { return cramer_frame(spec.shape(), spec.phi()); }

/// rho0_j = du_j - sum_i A_i^j dz_i - sum_i conj(A_i^j) dzb_i.
std::vector<OneForm> rho0(const FrameSet& frame);

/// Residual of the defining system for L_i, row j:
/// sum_l (i*delta_jl + phi_j,u_l) A_i^l + phi_j,z_i. Zero for a correct frame.
RationalExpr tangency_residual(const FrameSet& frame, const std::vector<RationalExpr>& phi, int i, int j);

/// Coefficient matrix with one column per field (rows = directions).
ExprMatrix coefficient_matrix(const std::vector<VectorField>& fields);

/// Coefficients lambda with x = sum_m lambda_m * frame_m, solved on the
/// lexicographically first row subset with nonzero determinant and checked
/// on every row. Throws DependentFrameError or NonMemberError.
struct Decomposition {
  std::vector<RationalExpr> coeffs;
  std::vector<int> rows;
};
Decomposition decompose_in_frame(const VectorField& x, const std::vector<VectorField>& frame);

RankCertificate generic_rank(const std::vector<VectorField>& fields);
/// Exact rank of the coefficient matrix at a point. Throws PoleError.
int rank_at_point(const std::vector<VectorField>& fields, const PointAssignment& point);

/// L#_i = sum_j M_ij L_j and conjugates. Throws SingularSystemError when det M == 0.
Frame change_frame(const Frame& frame, const ExprMatrix& m);

}  // namespace crclass
