#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordk/error.hpp"
#include "ordk/exact.hpp"
#include "ordk/linalg.hpp"
#include "ordk/quad.hpp"

namespace ordk {

using GroupElement = IntVector;

/// Linear functional Z^k -> Q(sqrt D) with one shared radicand.
class LinearFunctional {
 public:
  LinearFunctional() = default;

  LinearFunctional(std::vector<QuadExact> coeffs, Integer radicand = 0)
      : coeffs_(std::move(coeffs)), radicand_(std::move(radicand)) {
    if (!is_squarefree(radicand_))
      fail(ErrorCode::Input, "radicand " + radicand_.str() + " is not squarefree");
    bool nonzero = false;
    for (auto& c : coeffs_) {
      if (!c.is_rational() && c.radicand() != radicand_)
        fail(ErrorCode::Input, "coefficient " + c.str() + " does not use radicand " +
                                   radicand_.str());
      if (radicand_ > 0) c = QuadExact(c.rational_part(), c.surd_part(), radicand_);
      nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) fail(ErrorCode::Input, "linear functional is identically zero");
  }

  static LinearFunctional rational(const RatVector& coeffs) {
    return LinearFunctional(std::vector<QuadExact>(coeffs.begin(), coeffs.end()), 0);
  }

  std::size_t rank() const { return coeffs_.size(); }
  const std::vector<QuadExact>& coeffs() const { return coeffs_; }
  const QuadExact& operator[](std::size_t i) const { return coeffs_[i]; }
  const Integer& radicand() const { return radicand_; }

  QuadExact operator()(const GroupElement& x) const {
    if (x.size() != coeffs_.size())
      fail(ErrorCode::Input, "element of length " + std::to_string(x.size()) +
                                 " for a functional of rank " + std::to_string(rank()));
    QuadExact sum;
    for (std::size_t i = 0; i < x.size(); ++i) sum += coeffs_[i] * QuadExact(x[i]);
    return sum;
  }

  RatVector rational_parts() const {
    RatVector out;
    for (const auto& c : coeffs_) out.push_back(c.rational_part());
    return out;
  }
  RatVector surd_parts() const {
    RatVector out;
    for (const auto& c : coeffs_) out.push_back(c.surd_part());
    return out;
  }

  LinearFunctional operator-() const {
    std::vector<QuadExact> neg;
    for (const auto& c : coeffs_) neg.push_back(-c);
    return LinearFunctional(std::move(neg), radicand_);
  }

  /// Coefficientwise division by a nonzero scalar.
  LinearFunctional scaled_by_inverse(const QuadExact& divisor) const {
    std::vector<QuadExact> out;
    for (const auto& c : coeffs_) out.push_back(c / divisor);
    return LinearFunctional(std::move(out), radicand_);
  }

  friend bool operator==(const LinearFunctional& a, const LinearFunctional& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<QuadExact> coeffs_;
  Integer radicand_{0};
};

struct HyperplaneCone {
  LinearFunctional functional;
  friend bool operator==(const HyperplaneCone&, const HyperplaneCone&) = default;
};

/// Nonnegative integer combinations of `basis` (one vector per entry).
struct SimplicialCone {
  IntMatrix basis;
  friend bool operator==(const SimplicialCone&, const SimplicialCone&) = default;
};

using Cone = std::variant<HyperplaneCone, SimplicialCone>;

enum class Ordering { Less, Equal, Greater, Incomparable };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
    case Ordering::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Z^k ordered by a positive cone.
///
/// Hyperplane cones are {x : f(x) > 0} together with 0; nonzero kernel
/// elements of f are incomparable with 0. Simplicial cones need a unimodular
/// basis. Rank 0 is the trivial group, carried as an empty simplicial cone.
class OrderedGroup {
 public:
  static OrderedGroup hyperplane(LinearFunctional f) {
    if (f.rank() == 0) fail(ErrorCode::Input, "hyperplane cone needs rank >= 1");
    OrderedGroup g;
    g.rank_ = f.rank();
    g.cone_ = HyperplaneCone{std::move(f)};
    return g;
  }

  static OrderedGroup simplicial(IntMatrix basis) {
    const std::size_t k = basis.size();
    for (const auto& b : basis)
      if (b.size() != k)
        fail(ErrorCode::Input, "simplicial basis must be square, got a vector of length " +
                                   std::to_string(b.size()) + " in rank " + std::to_string(k));
    const Rational det = k == 0 ? Rational(1) : linalg::determinant(basis);
    if (det != 1 && det != -1)
      fail(ErrorCode::Input, "simplicial basis is not unimodular (det " + to_string(det) + ")");
    OrderedGroup g;
    g.rank_ = k;
    // Columns of `basis_inverse_` map coordinates back; rows give the
    // coefficient functionals of the basis vectors.
    const linalg::Matrix<Rational> columns =
        k == 0 ? RatMatrix{} : linalg::transpose(linalg::to_rational(basis), k);
    g.basis_inverse_.clear();
    if (k > 0) {
      const RatMatrix inv = *linalg::inverse(columns);
      for (const auto& row : inv) {
        IntVector r;
        for (const auto& x : row) r.push_back(numerator(x));
        g.basis_inverse_.push_back(std::move(r));
      }
    }
    g.cone_ = SimplicialCone{std::move(basis)};
    return g;
  }

  static OrderedGroup standard_simplicial(std::size_t k) {
    return simplicial(linalg::identity(k));
  }

  std::size_t rank() const { return rank_; }
  const Cone& cone() const { return cone_; }
  bool is_hyperplane() const { return std::holds_alternative<HyperplaneCone>(cone_); }
  bool is_simplicial() const { return std::holds_alternative<SimplicialCone>(cone_); }

  const LinearFunctional& functional() const {
    if (!is_hyperplane()) fail(ErrorCode::UnsupportedVariant, "group has no hyperplane functional");
    return std::get<HyperplaneCone>(cone_).functional;
  }
  const IntMatrix& basis() const {
    if (!is_simplicial()) fail(ErrorCode::UnsupportedVariant, "group has no simplicial basis");
    return std::get<SimplicialCone>(cone_).basis;
  }

  /// Coordinates of x in the simplicial basis (exact; integral by unimodularity).
  IntVector basis_coordinates(const GroupElement& x) const {
    check_length(x);
    (void)basis();
    IntVector y(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) y[i] += basis_inverse_[i][j] * x[j];
    return y;
  }

  /// Row i is the functional returning the i-th basis coordinate.
  const IntMatrix& coordinate_functionals() const {
    (void)basis();
    return basis_inverse_;
  }

  void check_length(const GroupElement& x) const {
    if (x.size() != rank_)
      fail(ErrorCode::Input, "element of length " + std::to_string(x.size()) +
                                 " in a group of rank " + std::to_string(rank_));
  }

  friend bool operator==(const OrderedGroup& a, const OrderedGroup& b) {
    return a.rank_ == b.rank_ && a.cone_ == b.cone_;
  }

 private:
  OrderedGroup() = default;

  std::size_t rank_ = 0;
  Cone cone_;
  IntMatrix basis_inverse_;
};

/// A subgroup of Z^k given by a Hermite-normal-form basis.
class OrderIdeal {
 public:
  OrderIdeal(std::size_t ambient_rank, const IntMatrix& generators)
      : ambient_rank_(ambient_rank) {
    for (const auto& g : generators)
      if (g.size() != ambient_rank)
        fail(ErrorCode::Input, "ideal generator has the wrong length");
    basis_ = linalg::hermite_normal_form(generators, ambient_rank);
  }

  static OrderIdeal zero(std::size_t ambient_rank) { return OrderIdeal(ambient_rank, {}); }

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& generators() const { return basis_; }
  bool contains(const GroupElement& x) const {
    return linalg::lattice_contains(basis_, x, ambient_rank_);
  }

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  GroupElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  GroupElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
inline GroupElement operator-(const GroupElement& a) {
  GroupElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}
inline GroupElement operator*(const Integer& n, const GroupElement& a) {
  GroupElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = n * a[i];
  return c;
}
inline bool is_zero_element(const GroupElement& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

inline bool is_positive(const OrderedGroup& g, const GroupElement& x) {
  g.check_length(x);
  if (is_zero_element(x)) return true;
  if (g.is_hyperplane()) return g.functional()(x).sign() > 0;
  for (const auto& c : g.basis_coordinates(x))
    if (c < 0) return false;
  return true;
}

inline Ordering compare(const OrderedGroup& g, const GroupElement& x, const GroupElement& y) {
  g.check_length(x);
  g.check_length(y);
  if (x == y) return Ordering::Equal;
  if (is_positive(g, y - x)) return Ordering::Less;
  if (is_positive(g, x - y)) return Ordering::Greater;
  return Ordering::Incomparable;
}

inline bool less_equal(const OrderedGroup& g, const GroupElement& x, const GroupElement& y) {
  const Ordering o = compare(g, x, y);
  return o == Ordering::Less || o == Ordering::Equal;
}

/// ker f ∩ Z^k for a hyperplane cone: x lies in the kernel iff it is
/// orthogonal to both the rational and the surd coefficient vectors.
inline IntMatrix kernel_lattice(const OrderedGroup& g) {
  const LinearFunctional& f = g.functional();
  return linalg::integer_kernel(RatMatrix{f.rational_parts(), f.surd_parts()}, g.rank());
}

inline bool is_totally_ordered(const OrderedGroup& g) {
  if (g.is_simplicial()) return g.rank() <= 1;
  return kernel_lattice(g).empty();
}

/// Simple means no order ideals besides 0 and G.
inline bool is_simple(const OrderedGroup& g) {
  if (g.is_simplicial()) return g.rank() <= 1;
  // A nonzero kernel lattice is a proper nonzero order ideal; otherwise
  // the order is Archimedean and total.
  const IntMatrix kernel = kernel_lattice(g);
  return kernel.empty() || kernel.size() == g.rank();
}

inline OrderIdeal order_ideal_generated(const OrderedGroup& g,
                                        const std::vector<std::size_t>& basis_subset) {
  if (!g.is_simplicial())
    fail(ErrorCode::UnsupportedVariant,
         "basis-subset ideals need a simplicial cone; use the kernel ideal of a state");
  IntMatrix gens;
  for (auto i : basis_subset) {
    if (i >= g.rank())
      fail(ErrorCode::Input, "basis index " + std::to_string(i) + " out of range");
    gens.push_back(g.basis()[i]);
  }
  return OrderIdeal(g.rank(), gens);
}

namespace detail {

// Union of the supports of the nonnegative vectors in the rational span of
// `rows`. Every such vector is a conformal sum of elementary vectors
// (minimal supports), so it suffices to enumerate supports whose restricted
// subspace is one-dimensional.
inline std::vector<bool> nonnegative_support(const IntMatrix& rows, std::size_t k) {
  std::vector<bool> covered(k, false);
  if (rows.empty()) return covered;
  if (k > 20) fail(ErrorCode::UnsupportedVariant, "order-convexity test limited to rank <= 20");
  const std::size_t r = rows.size();
  const RatMatrix columns = linalg::transpose(linalg::to_rational(rows), k);  // k x r
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    RatMatrix outside;
    for (std::size_t j = 0; j < k; ++j)
      if (!(mask >> j & 1)) outside.push_back(columns[j]);
    const RatMatrix lambdas = linalg::null_space(outside, r);
    if (lambdas.size() != 1) continue;
    const RatVector x = linalg::multiply(columns, lambdas[0]);
    int s = 0;
    bool conformal = true;
    for (std::size_t j = 0; j < k && conformal; ++j) {
      if (!(mask >> j & 1)) continue;
      const int sj = x[j].sign();
      if (sj == 0 || (s != 0 && sj != s)) conformal = false;
      s = sj;
    }
    if (!conformal) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) covered[j] = true;
  }
  return covered;
}

}  // namespace detail

/// Exact order-convexity test for the supported cone variants.
///
/// Simplicial: H is convex iff every basis vector lying under some positive
/// element of H belongs to H. Hyperplane: every subgroup of the kernel
/// lattice is convex, and so is the whole group; other subgroups are not
/// decided and are rejected as unsupported.
inline bool is_order_convex(const OrderedGroup& g, const OrderIdeal& h) {
  if (h.ambient_rank() != g.rank()) fail(ErrorCode::Input, "ideal lives in a different rank");
  const std::size_t k = g.rank();
  if (h.rank() == 0 || (h.rank() == k && linalg::spans_integer_lattice(h.generators(), k)))
    return true;
  if (g.is_hyperplane()) {
    for (const auto& x : h.generators())
      if (!g.functional()(x).is_zero())
        fail(ErrorCode::UnsupportedVariant,
             "convexity of ideals not contained in the kernel lattice is not decided");
    return true;
  }
  IntMatrix coords;
  for (const auto& x : h.generators()) coords.push_back(g.basis_coordinates(x));
  const std::vector<bool> support = detail::nonnegative_support(coords, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!support[i]) continue;
    if (!h.contains(g.basis()[i])) return false;
  }
  return true;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// G/H with positive cone (G⁺ + H)/H, presented on Z^(k - rank H).
///
/// The projection is the primitive annihilator of H, so the quotient
/// coordinates are canonical (Hermite normal form order).
inline OrderedGroup quotient(const OrderedGroup& g, const OrderIdeal& h) {
  const std::size_t k = g.rank();
  if (!linalg::is_saturated(h.generators(), k))
    fail(ErrorCode::InvalidIdeal, "ideal is not saturated, the quotient has torsion");
  if (!is_order_convex(g, h)) fail(ErrorCode::InvalidIdeal, "subgroup is not order-convex");
  const IntMatrix projection = linalg::integer_kernel(h.generators(), k);
  const std::size_t q = projection.size();
  if (q == 0) return OrderedGroup::simplicial({});
  auto project = [&](const GroupElement& x) {
    IntVector y(q, 0);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < k; ++j) y[i] += projection[i][j] * x[j];
    return y;
  };
  if (g.is_hyperplane()) {
    // f vanishes on H, so f = f̄ ∘ projection for a unique f̄; solve the
    // rational and surd parts separately.
    const LinearFunctional& f = g.functional();
    const RatMatrix pt = linalg::transpose(linalg::to_rational(projection), k);
    const auto rational = linalg::solve(pt, f.rational_parts(), q);
    const auto surd = linalg::solve(pt, f.surd_parts(), q);
    if (!rational || !surd)
      fail(ErrorCode::InvalidIdeal, "functional does not vanish on the ideal");
    std::vector<QuadExact> coeffs;
    for (std::size_t i = 0; i < q; ++i)
      coeffs.push_back(f.radicand() > 0 ? QuadExact((*rational)[i], (*surd)[i], f.radicand())
                                        : QuadExact((*rational)[i]));
    return OrderedGroup::hyperplane(LinearFunctional(std::move(coeffs), f.radicand()));
  }
  // Simplicial: the image cone is generated by the projected basis vectors;
  // look for q of them forming a unimodular basis that dominates the rest.
  IntMatrix images;
  for (const auto& b : g.basis()) {
    IntVector y = project(b);
    if (is_zero_element(y)) continue;
    if (std::find(images.begin(), images.end(), y) == images.end()) images.push_back(y);
  }
  if (images.size() >= q) {
    std::vector<std::size_t> idx(q);
    for (std::size_t i = 0; i < q; ++i) idx[i] = i;
    do {
      IntMatrix candidate;
      for (auto i : idx) candidate.push_back(images[i]);
      const Rational det = linalg::determinant(candidate);
      if (det != 1 && det != -1) continue;
      std::sort(candidate.begin(), candidate.end(), std::greater<>());
      OrderedGroup result = OrderedGroup::simplicial(candidate);
      bool dominates = true;
      for (const auto& y : images) dominates = dominates && is_positive(result, y);
      if (dominates) return result;
    } while (detail::next_combination(idx, images.size()));
  }
  fail(ErrorCode::UnsupportedVariant, "quotient cone is not simplicial");
}

inline bool is_unperforated_witness(const OrderedGroup& g, const GroupElement& x,
                                    const Integer& n) {
  if (n <= 0) fail(ErrorCode::Input, "multiplier must be a positive integer");
  return !is_positive(g, n * x) || is_positive(g, x);
}

/// Bounded search for z with x1, x2 <= z <= y1, y2.
///
/// Scans the box of the given radius around floor((x1 + y1) / 2) in
/// lexicographic order (first coordinate outermost, ascending) and returns
/// the first interpolant. An empty result says nothing about the group.
inline std::optional<GroupElement> riesz_interpolate(const OrderedGroup& g, const GroupElement& x1,
                                                     const GroupElement& x2, const GroupElement& y1,
                                                     const GroupElement& y2,
                                                     const Integer& box_radius) {
  if (box_radius <= 0) fail(ErrorCode::Input, "box radius must be positive");
  for (const auto* x : {&x1, &x2})
    for (const auto* y : {&y1, &y2})
      if (!less_equal(g, *x, *y))
        fail(ErrorCode::Ordering, to_string(*x) + " is not below " + to_string(*y));
  const std::size_t k = g.rank();
  GroupElement center(k), z(k);
  for (std::size_t i = 0; i < k; ++i) {
    center[i] = floor_div(x1[i] + y1[i], 2);
    z[i] = center[i] - box_radius;
  }
  if (k == 0) return z;
  for (;;) {
    if (less_equal(g, x1, z) && less_equal(g, x2, z) && less_equal(g, z, y1) &&
        less_equal(g, z, y2))
      return z;
    std::size_t i = k;
    while (i-- > 0) {
      if (z[i] < center[i] + box_radius) {
        ++z[i];
        break;
      }
      z[i] = center[i] - box_radius;
    }
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

struct OrderUnitCheck {
  bool is_unit = false;
  std::optional<GroupElement> failing_generator;
  explicit operator bool() const { return is_unit; }
};

/// Hyperplane cones are Archimedean, so every nonzero positive element is an
/// order unit. Simplicial cones need each basis vector below n*u, n <= bound.
inline OrderUnitCheck is_order_unit(const OrderedGroup& g, const GroupElement& u,
                                    const Integer& generator_bound) {
  g.check_length(u);
  if (is_zero_element(u) || !is_positive(g, u))
    fail(ErrorCode::Input, "order unit candidate " + to_string(u) + " is not strictly positive");
  if (g.is_hyperplane()) return {true, std::nullopt};
  const IntVector c = g.basis_coordinates(u);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    // e_i <= n*u in basis coordinates means n*c_i >= 1.
    if (c[i] == 0 || c[i] * generator_bound < 1) return {false, g.basis()[i]};
  }
  return {true, std::nullopt};
}

}  // namespace ordk
