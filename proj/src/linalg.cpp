#include "symres/linalg.hpp"

#include "symres/errors.hpp"

namespace symres::linalg {

namespace {

// row echelon with partial "first nonzero" pivoting; returns pivot columns
std::vector<int> echelon(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int nrows = static_cast<int>(m.size());
  int ncols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int p = -1;
    for (int r = row; r < nrows; ++r)
      if (!m[r][col].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Scalar inv = m[row][col].inverse();
    for (int c = col; c < ncols; ++c) m[row][c] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(echelon(m).size()); }

bool is_invertible(const Matrix& m) {
  if (m.empty()) return true;
  if (m.size() != m[0].size()) return false;
  return rank(m) == static_cast<int>(m.size());
}

Matrix inverse(const Matrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return {};
  FieldSpec f = m[0][0].field();
  Matrix aug(n, std::vector<Scalar>(2 * n, Scalar::zero(f)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar::one(f);
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1 || pivots[0] != 0)
    fail(ErrorCode::TNotInvertible, "singular matrix");
  for (int i = 0; i < n; ++i)
    if (pivots[i] != i) fail(ErrorCode::TNotInvertible, "singular matrix");
  Matrix inv(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Scalar determinant(Matrix m, const FieldSpec& field) {
  int n = static_cast<int>(m.size());
  Scalar det = Scalar::one(field);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return Scalar::zero(field);
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = m[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar f = m[r][col] * inv;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> kernel(const Matrix& m, int ncols, const FieldSpec& field) {
  Matrix e = m;
  auto pivots = echelon(e);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(field));
    v[free] = Scalar::one(field);
    // back-substitute pivot coordinates (echelon is fully reduced)
    for (size_t r = 0; r < pivots.size(); ++r) {
      int pc = pivots[r];
      if (free < static_cast<int>(e[r].size())) v[pc] = -e[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs,
                                         const FieldSpec& field) {
  int nrows = static_cast<int>(m.size());
  int ncols = nrows == 0 ? 0 : static_cast<int>(m[0].size());
  if (nrows == 0) return std::vector<Scalar>(ncols, Scalar::zero(field));
  Matrix aug(nrows, std::vector<Scalar>(ncols + 1, Scalar::zero(field)));
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < ncols; ++j) aug[i][j] = m[i][j];
    aug[i][ncols] = rhs[i];
  }
  auto pivots = echelon(aug);
  // inconsistent if a pivot lands in the rhs column
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  std::vector<Scalar> x(ncols, Scalar::zero(field));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][ncols];
  return x;
}

}  // namespace symres::linalg
