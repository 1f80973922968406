#pragma once

#include <cstddef>
#include <vector>

#include "ordk/error.hpp"
#include "ordk/exact.hpp"
#include "ordk/linalg.hpp"
#include "ordk/ordered_group.hpp"

namespace ordk {

/// m linearly independent rational vectors in Q^k, 1 <= m <= k.
class Frame {
 public:
  Frame(std::size_t ambient, RatMatrix vectors) : ambient_(ambient), vectors_(std::move(vectors)) {
    const std::size_t m = vectors_.size();
    if (m < 1 || m > ambient_)
      fail(ErrorCode::Input, "frame of " + std::to_string(m) + " vectors in dimension " +
                                 std::to_string(ambient_));
    for (const auto& v : vectors_)
      if (v.size() != ambient_) fail(ErrorCode::Input, "frame vector has the wrong length");
    if (linalg::rank(vectors_, ambient_) != m) fail(ErrorCode::Rank, "frame vectors are linearly dependent");
  }

  static Frame from_integers(std::size_t ambient, const IntMatrix& vectors) {
    return Frame(ambient, linalg::to_rational(vectors));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return vectors_.size(); }
  const RatMatrix& vectors() const { return vectors_; }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::size_t ambient_;
  RatMatrix vectors_;
};

/// An oriented m-plane, stored through its standard frame.
struct OrientedPlane {
  IntMatrix canonical_frame;  // pairwise orthogonal primitive integer vectors
  int orientation = 1;        // sign of det of the change of basis to the input frame

  friend bool operator==(const OrientedPlane&, const OrientedPlane&) = default;
};

inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Frame-independent orthogonal frame of the oriented plane spanned by f.
///
/// The reduced row-echelon basis of span(f) is orthogonalized without
/// normalization, each vector is scaled to a primitive integer vector with
/// positive leading entry, and the last vector is negated when f and this
/// basis have opposite orientations.
inline OrientedPlane standard_frame(const Frame& f) {
  const std::size_t k = f.ambient();
  const std::size_t m = f.size();
  const RatMatrix echelon = linalg::rref(f.vectors(), k).rows;
  RatMatrix ortho;
  for (const auto& r : echelon) {
    RatVector w = r;
    for (const auto& u : ortho) {
      const Rational c = dot(r, u) / dot(u, u);
      for (std::size_t i = 0; i < k; ++i) w[i] -= c * u[i];
    }
    ortho.push_back(std::move(w));
  }
  OrientedPlane plane;
  for (const auto& w : ortho) {
    IntVector v = linalg::primitive(w);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] < 0)
      for (auto& x : v) x = -x;
    plane.canonical_frame.push_back(std::move(v));
  }
  // f = M W with W orthogonal, so sign det M = sign det(f Wᵀ).
  IntMatrix gram(m, IntVector(m));
  RatMatrix fw(m, RatVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational s = 0;
      for (std::size_t c = 0; c < k; ++c) s += f.vectors()[i][c] * Rational(plane.canonical_frame[j][c]);
      fw[i][j] = s;
    }
  Integer l = 1;
  for (const auto& row : fw)
    for (const auto& x : row) l = lcm(l, denominator(x));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = numerator(fw[i][j] * Rational(l));
  const int det_sign = linalg::determinant(gram).sign();
  plane.orientation = det_sign;
  if (det_sign < 0)
    for (auto& x : plane.canonical_frame.back()) x = -x;
  return plane;
}

inline bool same_oriented_plane(const Frame& a, const Frame& b) {
  if (a.ambient() != b.ambient() || a.size() != b.size())
    fail(ErrorCode::Input, "frames of different shapes");
  return standard_frame(a) == standard_frame(b);
}

/// (Z^k, {f > 0} ∪ {0}): the oriented hyperplane ker f with positive side f > 0.
inline OrderedGroup hyperplane_to_group(const LinearFunctional& normal) {
  if (normal.rank() < 2) fail(ErrorCode::Input, "hyperplane groups need rank >= 2");
  return OrderedGroup::hyperplane(normal);
}

}  // namespace ordk
