#pragma once

#include <vector>

#include "crclass/rational_expr.hpp"

namespace crclass {

/// Dense row-major matrix of rational expressions (at most 6x6 here).
using ExprMatrix = std::vector<std::vector<RationalExpr>>;
using NumberMatrix = std::vector<std::vector<GaussianRational>>;

ExprMatrix identity_matrix(int size);
ExprMatrix transpose(const ExprMatrix& m);
ExprMatrix multiply(const ExprMatrix& a, const ExprMatrix& b);
ExprMatrix conj(const ExprMatrix& m);
/// Submatrix on the given rows and columns, in that order.
ExprMatrix submatrix(const ExprMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Exact determinant of a square matrix by elimination over the function field.
RationalExpr determinant(const ExprMatrix& m);

/// Generic rank plus a nonzero maximal minor backing it.
struct RankCertificate {
  int rank{0};
  std::vector<int> rows;
  std::vector<int> cols;
  /// Determinant of the original matrix restricted to (rows, cols); 1 for rank 0.
  RationalExpr minor{1};
};

/// Largest r with a nonzero r x r minor, with the witness minor.
///
/// Each column is first cleared by the lcm of its denominators (this does not
/// change which minors vanish), then fraction-free Bareiss elimination with
/// full pivoting locates the witness. Pivots are chosen deterministically.
RankCertificate generic_rank(const ExprMatrix& m);

NumberMatrix evaluate(const ExprMatrix& m, const SlotValues& point);
int numeric_rank(NumberMatrix m);
/// Rank over Q(i) after substituting the point. Throws PoleError.
inline int rank_at_point(const ExprMatrix& m, const SlotValues& point) { return numeric_rank(evaluate(m, point)); }

}  // namespace crclass
