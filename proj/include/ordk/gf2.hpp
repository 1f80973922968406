#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ordk::gf2 {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// Parity of the intersection with `other`.
  bool dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  /// Index of the lowest set bit.
  std::optional<std::size_t> lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return std::nullopt;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Matrix {
  std::size_t columns = 0;
  std::vector<BitVector> rows;

  BitVector apply(const BitVector& x) const {
    BitVector y(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].dot(x)) y.set(r);
    return y;
  }

  bool is_zero() const {
    for (const auto& r : rows)
      if (r.any()) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  // (a b)[r][c] = sum_j a[r][j] b[j][c]
  Matrix out{b.columns, {}};
  for (const auto& row : a.rows) {
    BitVector acc(b.columns);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row.get(j)) acc ^= b.rows[j];
    out.rows.push_back(std::move(acc));
  }
  return out;
}

/// Reduced row-echelon basis of a span: pivot = lowest set bit, and every
/// pivot column is cleared in all other rows. Rows are sorted by pivot.
struct Echelon {
  std::vector<BitVector> rows;
  std::vector<std::size_t> pivots;

  /// Unique representative of v modulo the span.
  BitVector reduce(BitVector v) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (v.get(pivots[r])) v ^= rows[r];
    return v;
  }
  bool contains(const BitVector& v) const { return !reduce(v).any(); }
  std::size_t rank() const { return rows.size(); }
};

inline Echelon echelon(const std::vector<BitVector>& vectors) {
  Echelon e;
  for (const auto& v0 : vectors) {
    BitVector v = e.reduce(v0);
    const auto p = v.lowest();
    if (!p) continue;
    for (auto& row : e.rows)
      if (row.get(*p)) row ^= v;
    std::size_t at = 0;
    while (at < e.pivots.size() && e.pivots[at] < *p) ++at;
    e.rows.insert(e.rows.begin() + at, v);
    e.pivots.insert(e.pivots.begin() + at, *p);
  }
  return e;
}

/// Basis of {x : m x = 0}, in reduced echelon form.
inline std::vector<BitVector> null_space(const Matrix& m) {
  const Echelon e = echelon(m.rows);
  std::vector<bool> is_pivot(m.columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.columns; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.columns);
    v.set(free);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      if (e.rows[r].get(free)) v.set(e.pivots[r]);
    basis.push_back(std::move(v));
  }
  return echelon(basis).rows;
}

/// Column span of m, as vectors of length m.rows.size().
inline std::vector<BitVector> column_space(const Matrix& m) {
  std::vector<BitVector> cols;
  for (std::size_t c = 0; c < m.columns; ++c) {
    BitVector v(m.rows.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      if (m.rows[r].get(c)) v.set(r);
    cols.push_back(std::move(v));
  }
  return cols;
}

/// Some x with m x = b, or nullopt.
inline std::optional<BitVector> solve(const Matrix& m, const BitVector& b) {
  // Track combinations of rows of the transpose: eliminate on columns of m.
  const std::vector<BitVector> cols = column_space(m);
  std::vector<BitVector> reduced;   // reduced column images
  std::vector<BitVector> recipe;    // which columns were combined
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    BitVector v = cols[c];
    BitVector how(m.columns);
    how.set(c);
    for (std::size_t r = 0; r < reduced.size(); ++r)
      if (v.get(pivots[r])) {
        v ^= reduced[r];
        how ^= recipe[r];
      }
    const auto p = v.lowest();
    if (!p) continue;
    reduced.push_back(v);
    recipe.push_back(how);
    pivots.push_back(*p);
  }
  BitVector target = b;
  BitVector x(m.columns);
  // reduced[r] vanishes on the pivots of earlier rows, so one ordered pass
  // clears every pivot of the target.
  for (std::size_t r = 0; r < reduced.size(); ++r)
    if (target.get(pivots[r])) {
      target ^= reduced[r];
      x ^= recipe[r];
    }
  if (target.any()) return std::nullopt;
  return x;
}

}  // namespace ordk::gf2
