// Dense square matrices over an arbitrary scalar and exact determinants.
//
// Determinants use fraction-free-friendly Gaussian elimination with row
// pivoting: over exact scalars any nonzero pivot is taken (no rounding
// exists), over floating scalars the largest-modulus pivot is chosen for
// stability.  Sizes here are tiny (≤ 8), so O(n^3) with exact arithmetic is
// the right tool.
#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shllab/scalar.hpp"

namespace shllab {

template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, T(0)) {
    if (n < 0) throw std::invalid_argument("SquareMatrix: negative size");
  }

  int size() const { return n_; }

  T& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
  const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

  void swap_rows(int i, int j) {
    for (int k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
  }

 private:
  int n_;
  std::vector<T> data_;
};

// Builds the n×n matrix with entries f(i, j), 0-based.
template <class T, class F>
SquareMatrix<T> make_matrix(int n, F f) {
  SquareMatrix<T> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = f(i, j);
  return m;
}

template <class T>
T det(SquareMatrix<T> m) {
  const int n = m.size();
  if (n == 0) return T(1);
  T result(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    if constexpr (scalar_traits<T>::is_exact) {
      for (int r = col; r < n; ++r)
        if (m.at(r, col) != T(0)) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (int r = col; r < n; ++r) {
        double a = abs_double(m.at(r, col));
        if (a > best) {
          best = a;
          pivot = r;
        }
      }
    }
    if (pivot < 0) return T(0);
    if (pivot != col) {
      m.swap_rows(pivot, col);
      result = -result;
    }
    const T p = m.at(col, col);
    result *= p;
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == T(0)) continue;
      T factor = m.at(r, col) / p;
      for (int c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
    }
  }
  return result;
}

// Matrix product, used by the triangular-factorization checks.
template <class T>
SquareMatrix<T> matmul(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matmul: size mismatch");
  const int n = a.size();
  SquareMatrix<T> out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.at(i, k) == T(0)) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

}  // namespace shllab
