#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ordk/error.hpp"
#include "ordk/exact.hpp"

// Exact linear algebra over Q, Q(sqrt D) and Z. Matrices are lists of rows.

namespace ordk::linalg {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
struct Echelon {
  Matrix<F> rows;                  // nonzero rows of the reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

template <typename F>
bool is_zero(const F& x) {
  return x == F(0);
}

/// Gauss-Jordan elimination. Pivots are 1 and their columns are cleared.
template <typename F>
Echelon<F> rref(Matrix<F> a, std::size_t columns) {
  Echelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && is_zero(a[pick][col])) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    const F inv = F(1) / a[row][col];
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const F factor = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] = a[r][c] - factor * a[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

template <typename F>
std::size_t rank(const Matrix<F>& a, std::size_t columns) {
  return rref(a, columns).pivots.size();
}

/// Basis of {x : a x = 0}, one vector per free column.
template <typename F>
Matrix<F> null_space(const Matrix<F>& a, std::size_t columns) {
  const Echelon<F> e = rref(a, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(columns, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A solution of a x = b (free variables set to zero), or nullopt.
template <typename F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b,
                                    std::size_t columns) {
  Matrix<F> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const Echelon<F> e = rref(aug, columns + 1);
  std::vector<F> x(columns, F(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == columns) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][columns];
  }
  return x;
}

template <typename F>
std::vector<F> multiply(const Matrix<F>& a, const std::vector<F>& x) {
  std::vector<F> y(a.size(), F(0));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) y[r] = y[r] + a[r][c] * x[c];
  return y;
}

template <typename F>
Matrix<F> transpose(const Matrix<F>& a, std::size_t columns) {
  Matrix<F> t(columns, std::vector<F>(a.size()));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < columns; ++c) t[c][r] = a[r][c];
  return t;
}

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) out.emplace_back(row.begin(), row.end());
  return out;
}

inline Rational determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix m = to_rational(a);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && m[pick][col] == 0) ++pick;
    if (pick == n) return 0;
    if (pick != col) {
      std::swap(m[pick], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug = a;
  for (std::size_t r = 0; r < n; ++r) {
    aug[r].resize(2 * n, Rational(0));
    aug[r][n + r] = 1;
  }
  const Echelon<Rational> e = rref(aug, n);
  if (e.pivots.size() != n) return std::nullopt;
  RatMatrix inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[r].assign(e.rows[r].begin() + n, e.rows[r].end());
  return inv;
}

/// Row Hermite normal form: nonzero rows only, positive pivots, entries
/// above each pivot reduced into [0, pivot). Spans the same lattice.
inline IntMatrix hermite_normal_form(IntMatrix a, std::size_t columns) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    // Euclid on the column until a single nonzero entry remains at `row`.
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t r = row; r < a.size(); ++r) {
        if (a[r][col] == 0) continue;
        if (best == a.size() || abs(a[r][col]) < abs(a[best][col])) best = r;
      }
      if (best == a.size()) break;
      std::swap(a[row], a[best]);
      bool done = true;
      for (std::size_t r = row + 1; r < a.size(); ++r) {
        if (a[r][col] == 0) continue;
        const Integer q = a[r][col] / a[row][col];
        for (std::size_t c = col; c < columns; ++c) a[r][c] -= q * a[row][c];
        if (a[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (row >= a.size() || a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (auto& x : a[row]) x = -x;
    for (std::size_t r = 0; r < row; ++r) {
      const Integer q = floor_div(a[r][col], a[row][col]);
      if (q == 0) continue;
      for (std::size_t c = col; c < columns; ++c) a[r][c] -= q * a[row][c];
    }
    ++row;
  }
  a.resize(row);
  return a;
}

/// Z-basis (in Hermite normal form) of {x in Z^n : a x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns) {
  const std::size_t m = a.size();
  // Row j of `work` is (column j of a | e_j); unimodular row operations that
  // zero the left block leave kernel vectors in the right block.
  IntMatrix work(columns, IntVector(m + columns, 0));
  for (std::size_t j = 0; j < columns; ++j) {
    for (std::size_t i = 0; i < m; ++i) work[j][i] = a[i][j];
    work[j][m + j] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < columns; ++col) {
    for (;;) {
      std::size_t best = columns;
      for (std::size_t r = row; r < columns; ++r) {
        if (work[r][col] == 0) continue;
        if (best == columns || abs(work[r][col]) < abs(work[best][col])) best = r;
      }
      if (best == columns) break;
      std::swap(work[row], work[best]);
      bool done = true;
      for (std::size_t r = row + 1; r < columns; ++r) {
        if (work[r][col] == 0) continue;
        const Integer q = work[r][col] / work[row][col];
        for (std::size_t c = 0; c < m + columns; ++c) work[r][c] -= q * work[row][c];
        if (work[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (row < columns && work[row][col] != 0) ++row;
  }
  IntMatrix kernel;
  for (std::size_t r = row; r < columns; ++r)
    kernel.emplace_back(work[r].begin() + m, work[r].end());
  return hermite_normal_form(std::move(kernel), columns);
}

/// Kernel of a rational matrix intersected with Z^n.
inline IntMatrix integer_kernel(const RatMatrix& a, std::size_t columns) {
  IntMatrix scaled;
  for (const auto& row : a) {
    Integer l = 1;
    for (const auto& x : row) l = lcm(l, denominator(x));
    IntVector r;
    for (const auto& x : row) r.push_back(numerator(x * Rational(l)));
    scaled.push_back(std::move(r));
  }
  return integer_kernel(scaled, columns);
}

inline bool lattice_contains(const IntMatrix& basis, const IntVector& x, std::size_t columns) {
  IntMatrix with = basis;
  with.push_back(x);
  return hermite_normal_form(with, columns) == hermite_normal_form(basis, columns);
}

/// True iff the lattice equals its rational span intersected with Z^n.
inline bool is_saturated(const IntMatrix& basis, std::size_t columns) {
  const IntMatrix annihilator = integer_kernel(basis, columns);
  return integer_kernel(annihilator, columns) == hermite_normal_form(basis, columns);
}

inline bool spans_integer_lattice(const IntMatrix& generators, std::size_t columns) {
  const IntMatrix h = hermite_normal_form(generators, columns);
  if (h.size() != columns) return false;
  for (std::size_t i = 0; i < columns; ++i)
    if (h[i][i] != 1) return false;
  return true;
}

inline IntMatrix identity(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

inline IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  IntVector out;
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(numerator(x * Rational(l)));
    g = gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace ordk::linalg
