#pragma once

#include <optional>
#include <vector>

namespace cuspg2::linalg {

// Dense exact linear algebra over any field type T with value semantics, T{} == 0 and
// T(1) == 1 (Rational, AlgebraicScalar, JetFunction).

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == T{}) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const T inv = T(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = T(a[r][j] * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == T{}) continue;
      const T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = T(a[i][j] - T(f * a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Unique solution of A x = b, or nothing when the system is inconsistent or underdetermined.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t rows = a.size();
  if (rows == 0) return std::nullopt;
  const std::size_t cols = a[0].size();
  Matrix<T> aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;
  std::vector<T> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

/// Basis of the right nullspace {x : A x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a, std::size_t cols) {
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(cols);
    x[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = T(-a[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return row_reduce(a).size();
}

}  // namespace cuspg2::linalg
