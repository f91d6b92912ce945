#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/rng.hpp"

namespace qrep {

// Dense matrix over an exact field.  The field object travels separately
// (all operations take it as their first argument).
template <class F>
struct Matrix {
  using Elem = typename F::Elem;

  int rows = 0;
  int cols = 0;
  std::vector<Elem> a;  // row-major

  Matrix() = default;
  Matrix(const F& f, int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}

  Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <class F>
Matrix<F> mat_identity(const F& f, int n) {
  Matrix<F> m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
bool mat_eq(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!f.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class F>
bool mat_is_zero(const F& f, const Matrix<F>& x) {
  for (const auto& e : x.a)
    if (!f.is_zero(e)) return false;
  return true;
}

template <class F>
Matrix<F> mat_add(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<F> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
  return r;
}

template <class F>
Matrix<F> mat_sub(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Matrix<F> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(r.a[i], y.a[i]);
  return r;
}

template <class F>
Matrix<F> mat_neg(const F& f, const Matrix<F>& x) {
  Matrix<F> r = x;
  for (auto& e : r.a) e = f.neg(e);
  return r;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix<F> r(f, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (f.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

template <class F>
Matrix<F> mat_scale(const F& f, const Matrix<F>& x, const typename F::Elem& c) {
  Matrix<F> r = x;
  for (auto& e : r.a) e = f.mul(e, c);
  return r;
}

template <class F>
Matrix<F> mat_transpose(const F&, const Matrix<F>& x) {
  Matrix<F> r;
  r.rows = x.cols;
  r.cols = x.rows;
  r.a.reserve(x.a.size());
  for (int j = 0; j < x.cols; ++j)
    for (int i = 0; i < x.rows; ++i) r.a.push_back(x.at(i, j));
  return r;
}

// [x | y] side by side
template <class F>
Matrix<F> mat_hcat(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  assert(x.rows == y.rows);
  Matrix<F> r(f, x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

template <class F>
Matrix<F> mat_random(const F& f, int rows, int cols, Rng& rng) {
  Matrix<F> r(f, rows, cols);
  for (auto& e : r.a) e = f.sample(rng);
  return r;
}

}  // namespace qrep
