#include "crclass/matrix.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "crclass/errors.hpp"

namespace crclass {

ExprMatrix identity_matrix(int size) {
  ExprMatrix m(size, std::vector<RationalExpr>(size));
  for (int i = 0; i < size; ++i) m[i][i] = RationalExpr(1);
  return m;
}

ExprMatrix transpose(const ExprMatrix& m) {
  if (m.empty()) return {};
  ExprMatrix t(m[0].size(), std::vector<RationalExpr>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

ExprMatrix multiply(const ExprMatrix& a, const ExprMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  ExprMatrix out(rows, std::vector<RationalExpr>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw InternalError("matrix shape mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      RationalExpr sum;
      for (std::size_t k = 0; k < inner; ++k) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) sum += a[i][k] * b[k][j];
      }
      out[i][j] = std::move(sum);
    }
  }
  return out;
}

ExprMatrix conj(const ExprMatrix& m) {
  ExprMatrix out = m;
  for (auto& row : out) {
    for (auto& e : row) e = e.conj();
  }
  return out;
}

ExprMatrix submatrix(const ExprMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  ExprMatrix out;
  out.reserve(rows.size());
  for (int r : rows) {
    std::vector<RationalExpr> row;
    row.reserve(cols.size());
    for (int c : cols) row.push_back(m.at(r).at(c));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::size_t complexity(const RationalExpr& e) { return e.num().size() + e.den().size(); }
std::size_t complexity(const MultiPoly& p) { return p.size(); }

template <class T>
std::pair<int, int> simplest_pivot(const std::vector<std::vector<T>>& m, int from_row, int from_col, bool full) {
  std::pair<int, int> best{-1, -1};
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int j = from_col; j < (full ? cols : from_col + 1); ++j) {
    for (int i = from_row; i < rows; ++i) {
      if (m[i][j].is_zero()) continue;
      const std::size_t cost = complexity(m[i][j]);
      if (cost < best_cost) {
        best_cost = cost;
        best = {i, j};
      }
    }
  }
  return best;
}

}  // namespace

RationalExpr determinant(const ExprMatrix& input) {
  const int size = static_cast<int>(input.size());
  for (const auto& row : input) {
    if (static_cast<int>(row.size()) != size) throw InternalError("determinant of a non-square matrix");
  }
  if (size == 0) return RationalExpr(1);
  if (size == 1) return input[0][0];
  if (size == 2) return input[0][0] * input[1][1] - input[0][1] * input[1][0];
  ExprMatrix m = input;
  RationalExpr det(1);
  for (int k = 0; k < size; ++k) {
    auto [pr, pc] = simplest_pivot(m, k, k, false);
    if (pr < 0) return RationalExpr();
    if (pr != k) {
      std::swap(m[pr], m[k]);
      det = -det;
    }
    det *= m[k][k];
    const RationalExpr inv = m[k][k].inverse();
    for (int i = k + 1; i < size; ++i) {
      if (m[i][k].is_zero()) continue;
      const RationalExpr f = m[i][k] * inv;
      for (int j = k + 1; j < size; ++j) {
        if (!m[k][j].is_zero()) m[i][j] -= f * m[k][j];
      }
      m[i][k] = RationalExpr();
    }
  }
  return det;
}

namespace {

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  const MultiPoly g = gcd(a, b);
  if (g.is_constant()) return a * b;
  return *exact_divide(a, g) * b;
}

}  // namespace

RankCertificate generic_rank(const ExprMatrix& input) {
  const int rows = static_cast<int>(input.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(input[0].size());

  // Clear denominators column by column.
  std::vector<std::vector<MultiPoly>> m(rows, std::vector<MultiPoly>(cols));
  for (int j = 0; j < cols; ++j) {
    MultiPoly l(1);
    for (int i = 0; i < rows; ++i) {
      if (!input[i][j].is_zero()) l = lcm(l, input[i][j].den());
    }
    for (int i = 0; i < rows; ++i) {
      if (input[i][j].is_zero()) continue;
      m[i][j] = input[i][j].num() * *exact_divide(l, input[i][j].den());
    }
  }

  std::vector<int> row_of(rows), col_of(cols);
  for (int i = 0; i < rows; ++i) row_of[i] = i;
  for (int j = 0; j < cols; ++j) col_of[j] = j;

  MultiPoly prev(1);
  int k = 0;
  for (; k < std::min(rows, cols); ++k) {
    auto [pr, pc] = simplest_pivot(m, k, k, true);
    if (pr < 0) break;
    std::swap(m[pr], m[k]);
    std::swap(row_of[pr], row_of[k]);
    for (auto& row : m) std::swap(row[pc], row[k]);
    std::swap(col_of[pc], col_of[k]);
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        MultiPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (!prev.is_constant()) {
          auto q = exact_divide(v, prev);
          if (!q) throw InternalError("Bareiss step was not exact");
          v = *std::move(q);
        } else if (!prev.constant_value().is_one()) {
          v = v.scaled(prev.constant_value().inverse());
        }
        m[i][j] = std::move(v);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }

  RankCertificate cert;
  cert.rank = k;
  cert.rows.assign(row_of.begin(), row_of.begin() + k);
  cert.cols.assign(col_of.begin(), col_of.begin() + k);
  std::sort(cert.rows.begin(), cert.rows.end());
  std::sort(cert.cols.begin(), cert.cols.end());
  cert.minor = determinant(submatrix(input, cert.rows, cert.cols));
  if (cert.minor.is_zero()) throw InternalError("rank witness minor vanished");
  return cert;
}

NumberMatrix evaluate(const ExprMatrix& m, const SlotValues& point) {
  NumberMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& e : m[i]) out[i].push_back(e.is_zero() ? GaussianRational() : e.eval(point));
  }
  return out;
}

int numeric_rank(NumberMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int j = 0; j < cols && rank < rows; ++j) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (!m[i][j].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    const GaussianRational inv = m[rank][j].inverse();
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][j].is_zero()) continue;
      const GaussianRational f = m[i][j] * inv;
      for (int c = j; c < cols; ++c) m[i][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace crclass
