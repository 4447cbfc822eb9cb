#pragma once

#include <optional>

#include "crclass/cr_geometry.hpp"

namespace crclass {

/// n x n Hermitian matrix with entry(r, c) = rho(i*[L_c, Lbar_r]).
using LeviMatrix = ExprMatrix;

LeviMatrix levi_matrix(const Frame& frame, const OneForm& rho);
/// Levi matrix of the intrinsic frame against rho0. Requires c = 1.
LeviMatrix levi_matrix(const ValidatedSpec& spec);

/// Engine path: determinant of levi_matrix(spec). Requires n = 2, c = 1.
RationalExpr levi_det(const ValidatedSpec& spec);
/// Term-by-term closed form in the derivatives of phi. Requires n = 2, c = 1.
RationalExpr levi_det_closed_form(const ValidatedSpec& spec);

/// L1(conj(A1)) through the frame. Requires n = 2, c = 1.
RationalExpr l1a1(const ValidatedSpec& spec);
RationalExpr l1a1_closed_form(const ValidatedSpec& spec);

/// The three expressions for the slant function in the intrinsic frame:
///   -(L2(conj A1) - Lbar1(A2)) / (L1(conj A1) - Lbar1(A1)),
///   -L2(conj A1) / L1(conj A1),
///   -Lbar1(A2) / Lbar1(A1).
/// A quotient with an identically zero denominator is absent.
struct KQuotients {
  std::optional<RationalExpr> main;
  std::optional<RationalExpr> via_l2;
  std::optional<RationalExpr> via_lbar1;
};
KQuotients k_quotients(const ValidatedSpec& spec);

struct KernelData {
  /// Slant function -l12/l11 in the (possibly adjusted) frame.
  RationalExpr k;
  /// K = k*L1 + L2 in the adjusted frame.
  VectorField K;
  /// (K_z2 dz1 - K_z1 dz2) / det(frame_adjust); dz1 - k dz2 when unadjusted.
  OneForm kappa0;
  /// Constant GL2 matrix M with L#_i = sum_j M_ij L_j; identity if none.
  ExprMatrix frame_adjust;
  Frame frame;
  LeviMatrix levi;
  /// kappa0([K, Lbar1]) = -Lbar1(k) in the adjusted frame.
  RationalExpr freeman;
  /// Absent when freeman has a pole at the base point.
  std::optional<GaussianRational> freeman_at_point;
};

/// Requires n = 2, c = 1 and generic Levi rank 1 (RankMismatchError otherwise).
KernelData slant_k(const ValidatedSpec& spec);
/// Same on a given frame of T^{1,0}M (e.g. after a constant change) and rho.
KernelData slant_k(const ValidatedSpec& spec, const Frame& frame, const OneForm& rho);
RationalExpr freeman(const ValidatedSpec& spec);

/// True iff Lbar_i(f) == 0 for every i.
bool is_cr_function(const RationalExpr& f, const ValidatedSpec& spec);

}  // namespace crclass
