#pragma once

#include <cstddef>
#include <vector>

#include "tug/errors.hpp"
#include "tug/numeric.hpp"

namespace tug::detail {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Gauss-Jordan solve of A x = b. Exact pivoting in rational mode; partial
/// pivoting plus a max/min pivot-ratio conditioning gate in float mode.
template <class R>
std::vector<R> solve_linear(Matrix<R> a, std::vector<R> b, double cond_threshold = 1e12) {
  const std::size_t dim = a.size();
  double min_piv = 0.0, max_piv = 0.0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    if constexpr (ScalarTraits<R>::exact) {
      while (pivot < dim && a[pivot][col] == ScalarTraits<R>::zero()) ++pivot;
      if (pivot == dim) throw DegenerateObjective("singular linear system");
    } else {
      for (std::size_t r = col + 1; r < dim; ++r)
        if (ScalarTraits<R>::abs(a[r][col]) > ScalarTraits<R>::abs(a[pivot][col])) pivot = r;
      const double mag = ScalarTraits<R>::to_double(ScalarTraits<R>::abs(a[pivot][col]));
      if (mag == 0.0) throw DegenerateObjective("singular linear system");
      min_piv = (col == 0) ? mag : std::min(min_piv, mag);
      max_piv = (col == 0) ? mag : std::max(max_piv, mag);
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    const R inv_lead = a[col][col];
    for (std::size_t c = col; c < dim; ++c) a[col][c] = a[col][c] / inv_lead;
    b[col] = b[col] / inv_lead;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == col) continue;
      const R f = a[r][col];
      if (f == ScalarTraits<R>::zero()) continue;
      for (std::size_t c = col; c < dim; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  if constexpr (!ScalarTraits<R>::exact) {
    if (min_piv <= 0.0 || max_piv / min_piv > cond_threshold)
      throw DegenerateObjective("linear system is numerically degenerate");
  }
  return b;
}

/// Least-squares fit of A x ≈ b via normal equations (A must have full
/// column rank; callers guarantee this by construction of the fitting set).
template <class R>
std::vector<R> least_squares(const Matrix<R>& a, const std::vector<R>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Matrix<R> ata(cols, std::vector<R>(cols, ScalarTraits<R>::zero()));
  std::vector<R> atb(cols, ScalarTraits<R>::zero());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (a[r][i] == ScalarTraits<R>::zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) ata[i][j] += a[r][i] * a[r][j];
      atb[i] += a[r][i] * b[r];
    }
  }
  return solve_linear(std::move(ata), std::move(atb));
}

}  // namespace tug::detail
