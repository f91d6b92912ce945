#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

// Row echelon data: the reduced form, its pivot columns, and the rank.
template <class F>
struct Rref {
  Matrix<F> mat;
  std::vector<int> pivots;
  int rank = 0;
};

template <class F>
Rref<F> rref(const F& f, Matrix<F> m) {
  Rref<F> out;
  out.pivots.clear();
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    auto inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

template <class F>
int rank(const F& f, const Matrix<F>& m) {
  return rref(f, m).rank;
}

// Reduced column echelon form: the unique canonical basis matrix of the
// column space.  Pivot rows carry a single 1; nonzero columns come first.
template <class F>
Matrix<F> rcef(const F& f, const Matrix<F>& m) {
  auto r = rref(f, mat_transpose(f, m));
  r.mat.rows = r.rank;  // drop zero rows
  r.mat.a.resize(static_cast<std::size_t>(r.rank) * r.mat.cols);
  return mat_transpose(f, r.mat);
}

// Basis of the column space in reduced column echelon form, with the pivot
// rows (one per basis column, strictly increasing).
template <class F>
struct ColumnSpace {
  Matrix<F> basis;          // rows x rank, RCEF
  std::vector<int> pivots;  // pivot row of each column
};

template <class F>
ColumnSpace<F> column_space(const F& f, const Matrix<F>& m) {
  auto r = rref(f, mat_transpose(f, m));
  r.mat.rows = r.rank;
  r.mat.a.resize(static_cast<std::size_t>(r.rank) * r.mat.cols);
  return {mat_transpose(f, r.mat), r.pivots};
}

// Kernel basis as an RCEF matrix (cols(m) x nullity).
template <class F>
Matrix<F> kernel(const F& f, const Matrix<F>& m) {
  auto r = rref(f, m);
  int n = m.cols;
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[c] = true;
  Matrix<F> k(f, n, n - r.rank);
  int kcol = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    k.at(c, kcol) = f.one();
    for (int i = 0; i < r.rank; ++i)
      k.at(r.pivots[i], kcol) = f.neg(r.mat.at(i, c));
    ++kcol;
  }
  return rcef(f, k);
}

// Cokernel of m: a complement to the column space made of standard basis
// vectors, together with the projection onto it (projection * m = 0).
template <class F>
struct Cokernel {
  Matrix<F> complement;  // rows x corank; columns are standard vectors
  Matrix<F> projection;  // corank x rows; projection * complement = identity
  std::vector<int> free_rows;
};

template <class F>
Cokernel<F> cokernel(const F& f, const Matrix<F>& m) {
  auto cs = column_space(f, m);
  int n = m.rows;
  std::vector<bool> is_pivot(n, false);
  for (int p : cs.pivots) is_pivot[p] = true;
  Cokernel<F> out;
  out.complement = Matrix<F>(f, n, 0);
  out.projection = Matrix<F>(f, 0, n);
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) out.free_rows.push_back(i);
  int corank = static_cast<int>(out.free_rows.size());
  out.complement = Matrix<F>(f, n, corank);
  out.projection = Matrix<F>(f, corank, n);
  for (int j = 0; j < corank; ++j) {
    int row = out.free_rows[j];
    out.complement.at(row, j) = f.one();
    // projection of v: restrict v - basis * v[pivots] to the free rows
    out.projection.at(j, row) = f.one();
    for (std::size_t c = 0; c < cs.pivots.size(); ++c)
      out.projection.at(j, cs.pivots[c]) = f.neg(cs.basis.at(row, static_cast<int>(c)));
  }
  return out;
}

// Particular solution of m*x = b for every column of b, or nullopt when the
// system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const F& f, const Matrix<F>& m, const Matrix<F>& b) {
  if (m.rows != b.rows) throw std::invalid_argument("solve: row mismatch");
  auto r = rref(f, mat_hcat(f, m, b));
  // any pivot in the b-block means inconsistency
  for (int c : r.pivots)
    if (c >= m.cols) return std::nullopt;
  Matrix<F> x(f, m.cols, b.cols);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (int j = 0; j < b.cols; ++j)
      x.at(r.pivots[i], j) = r.mat.at(static_cast<int>(i), m.cols + j);
  return x;
}

template <class F>
typename F::Elem det(const F& f, Matrix<F> m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  auto d = f.one();
  for (int c = 0; c < m.cols; ++c) {
    int piv = -1;
    for (int i = c; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m.at(c, c));
    auto inv = f.inv(m.at(c, c));
    for (int i = c + 1; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      auto factor = f.mul(m.at(i, c), inv);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return d;
}

template <class F>
Matrix<F> inverse(const F& f, const Matrix<F>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
  auto r = rref(f, mat_hcat(f, m, mat_identity(f, m.rows)));
  if (static_cast<int>(r.pivots.size()) < m.rows || r.pivots[m.rows - 1] != m.rows - 1)
    throw std::domain_error("matrix is singular");
  Matrix<F> inv(f, m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) inv.at(i, j) = r.mat.at(i, m.cols + j);
  return inv;
}

template <class F>
bool is_invertible(const F& f, const Matrix<F>& m) {
  return m.rows == m.cols && rank(f, m) == m.rows;
}

}  // namespace qrep
