#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "ordk/error.hpp"
#include "ordk/gf2.hpp"

namespace ordk {

using Simplex = std::vector<int>;

inline std::string to_string(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

/// Finite simplicial complex on vertices 0..n-1.
///
/// Simplices are strictly increasing vertex tuples, stored per dimension in
/// lexicographic order; that order indexes cochain bits, and the vertex order
/// fixes front and back faces for the cup product. Every vertex is a
/// 0-simplex.
class SimplicialComplex {
 public:
  int vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  std::size_t count(int p) const {
    return p < 0 || p > dimension() ? 0 : by_dim_[static_cast<std::size_t>(p)].size();
  }
  const std::vector<Simplex>& simplices(int p) const {
    static const std::vector<Simplex> none;
    return p < 0 || p > dimension() ? none : by_dim_[static_cast<std::size_t>(p)];
  }
  std::optional<std::size_t> index_of(const Simplex& s) const {
    const int p = static_cast<int>(s.size()) - 1;
    if (p < 0 || p > dimension()) return std::nullopt;
    const auto& list = by_dim_[static_cast<std::size_t>(p)];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
  }
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Simplices of dimension >= 1 in storage order.
  std::vector<Simplex> positive_dimensional_simplices() const {
    std::vector<Simplex> out;
    for (int p = 1; p <= dimension(); ++p)
      out.insert(out.end(), simplices(p).begin(), simplices(p).end());
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend struct ComplexBuilder;
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

struct ValidatedComplex {
  SimplicialComplex complex;
  bool faces_added = false;  // permissive mode had to close the list under faces
};

struct ComplexBuilder {
  static ValidatedComplex build(int vertex_count, std::vector<Simplex> raw, bool strict) {
    if (vertex_count <= 0) fail(ErrorCode::Input, "a complex needs at least one vertex");
    std::set<Simplex> given;
    for (auto s : raw) {
      if (s.empty()) fail(ErrorCode::Input, "empty simplex");
      for (int v : s)
        if (v < 0 || v >= vertex_count)
          fail(ErrorCode::Input, "vertex " + std::to_string(v) + " out of range in " + to_string(s));
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        fail(ErrorCode::Input, "repeated vertex in simplex " + to_string(s));
      if (!given.insert(s).second) fail(ErrorCode::Input, "duplicate simplex " + to_string(s));
    }
    for (int v = 0; v < vertex_count; ++v) given.insert(Simplex{v});
    std::set<Simplex> closed = given;
    bool added = false;
    for (const auto& s : given) {
      if (s.size() < 2) continue;
      // All proper faces of dimension >= 1.
      const std::size_t n = s.size();
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) face.push_back(s[i]);
        if (face.size() < 2 || given.count(face)) continue;
        if (strict) fail(ErrorCode::Input, "missing face " + to_string(face) + " of " + to_string(s));
        closed.insert(face);
        added = true;
      }
    }
    ValidatedComplex out;
    out.faces_added = added;
    out.complex.vertex_count_ = vertex_count;
    for (const auto& s : closed) {
      const std::size_t p = s.size() - 1;
      if (out.complex.by_dim_.size() <= p) out.complex.by_dim_.resize(p + 1);
      out.complex.by_dim_[p].push_back(s);
    }
    for (auto& list : out.complex.by_dim_) std::sort(list.begin(), list.end());
    return out;
  }
};

/// Sorts tuples and checks ranges and duplicates. Missing faces are an
/// error in strict mode and are added (with `faces_added` set) otherwise.
inline ValidatedComplex validate_complex(int vertex_count, std::vector<Simplex> raw,
                                         bool strict = false) {
  return ComplexBuilder::build(vertex_count, std::move(raw), strict);
}

inline SimplicialComplex make_complex(int vertex_count, std::vector<Simplex> raw) {
  return validate_complex(vertex_count, std::move(raw), false).complex;
}

/// A GF(2) cochain: one bit per p-simplex in the complex's simplex order.
struct Z2Cochain {
  int dim = 0;
  gf2::BitVector bits;

  bool is_zero() const { return !bits.any(); }
  friend bool operator==(const Z2Cochain&, const Z2Cochain&) = default;
};

inline Z2Cochain operator+(const Z2Cochain& a, const Z2Cochain& b) {
  if (a.dim != b.dim || a.bits.size() != b.bits.size())
    fail(ErrorCode::Input, "adding cochains of different dimensions");
  return {a.dim, a.bits ^ b.bits};
}

inline Z2Cochain zero_cochain(const SimplicialComplex& k, int p) {
  return {p, gf2::BitVector(k.count(p))};
}

/// The all-ones 0-cochain, the unit of the cup product ring.
inline Z2Cochain unit_cochain(const SimplicialComplex& k) {
  Z2Cochain c = zero_cochain(k, 0);
  for (std::size_t i = 0; i < k.count(0); ++i) c.bits.set(i);
  return c;
}

inline Z2Cochain cochain_from_support(const SimplicialComplex& k, int p,
                                      const std::vector<Simplex>& support) {
  Z2Cochain c = zero_cochain(k, p);
  for (auto s : support) {
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != p + 1)
      fail(ErrorCode::Input, "simplex " + to_string(s) + " is not " + std::to_string(p) + "-dimensional");
    const auto idx = k.index_of(s);
    if (!idx) fail(ErrorCode::Input, "simplex " + to_string(s) + " is not in the complex");
    if (c.bits.get(*idx)) fail(ErrorCode::Input, "simplex " + to_string(s) + " listed twice");
    c.bits.set(*idx);
  }
  return c;
}

inline std::vector<Simplex> support(const SimplicialComplex& k, const Z2Cochain& c) {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < c.bits.size(); ++i)
    if (c.bits.get(i)) out.push_back(k.simplices(c.dim)[i]);
  return out;
}

inline void check_cochain(const SimplicialComplex& k, const Z2Cochain& c) {
  if (c.dim < 0 || c.bits.size() != k.count(c.dim))
    fail(ErrorCode::Input, "cochain does not match the complex in dimension " + std::to_string(c.dim));
}

namespace detail {

// δ_p for any p >= 0; empty when there are no (p+1)-simplices.
inline gf2::Matrix coboundary(const SimplicialComplex& k, int p) {
  gf2::Matrix m{k.count(p), {}};
  for (const auto& sigma : k.simplices(p + 1)) {
    gf2::BitVector row(k.count(p));
    for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < sigma.size(); ++i)
        if (i != drop) face.push_back(sigma[i]);
      row.set(*k.index_of(face));
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

// Reduced basis of im δ_{p-1} inside C^p.
inline gf2::Echelon coboundary_image(const SimplicialComplex& k, int p) {
  if (p == 0) return {};
  return gf2::echelon(gf2::column_space(coboundary(k, p - 1)));
}

}  // namespace detail

/// Matrix of δ_p : C^p -> C^{p+1}; row σ has a 1 in column τ iff τ is a face of σ.
inline gf2::Matrix coboundary_matrix(const SimplicialComplex& k, int p) {
  if (p < 0 || p >= k.dimension())
    fail(ErrorCode::Input, "coboundary dimension " + std::to_string(p) + " out of range for a " +
                               std::to_string(k.dimension()) + "-complex");
  return detail::coboundary(k, p);
}

inline Z2Cochain coboundary(const SimplicialComplex& k, const Z2Cochain& c) {
  check_cochain(k, c);
  return {c.dim + 1, detail::coboundary(k, c.dim).apply(c.bits)};
}

/// The first (p+1)-simplex on which δc is nonzero.
inline std::optional<Simplex> cocycle_violation(const SimplicialComplex& k, const Z2Cochain& c) {
  const Z2Cochain d = coboundary(k, c);
  if (const auto i = d.bits.lowest()) return k.simplices(c.dim + 1)[*i];
  return std::nullopt;
}

inline bool is_cocycle(const SimplicialComplex& k, const Z2Cochain& c) {
  return !cocycle_violation(k, c).has_value();
}

inline void require_cocycle(const SimplicialComplex& k, const Z2Cochain& c) {
  if (const auto bad = cocycle_violation(k, c))
    fail(ErrorCode::Input, "cochain is not a cocycle: coboundary is nonzero on " + to_string(*bad));
}

/// Canonical representative of the class of a cocycle: pivot bits of the
/// reduced coboundary basis are cleared.
inline Z2Cochain canonical_form(const SimplicialComplex& k, const Z2Cochain& c) {
  require_cocycle(k, c);
  return {c.dim, detail::coboundary_image(k, c.dim).reduce(c.bits)};
}

struct CohomologyBasis {
  int dim = 0;
  std::size_t rank = 0;
  std::vector<Z2Cochain> representatives;
};

/// H^p(K; Z2) with canonical representatives: cocycles reduced modulo the
/// coboundaries, then put in reduced echelon form among themselves.
inline CohomologyBasis cohomology(const SimplicialComplex& k, int p) {
  if (p < 0) fail(ErrorCode::Input, "negative cohomology dimension");
  CohomologyBasis out;
  out.dim = p;
  if (p > k.dimension()) return out;
  const gf2::Echelon image = detail::coboundary_image(k, p);
  std::vector<gf2::BitVector> classes;
  for (const auto& z : gf2::null_space(detail::coboundary(k, p))) classes.push_back(image.reduce(z));
  for (auto& v : gf2::echelon(classes).rows) out.representatives.push_back({p, std::move(v)});
  out.rank = out.representatives.size();
  return out;
}

inline bool cohomologous(const SimplicialComplex& k, const Z2Cochain& a, const Z2Cochain& b) {
  if (a.dim != b.dim) fail(ErrorCode::Input, "cochains of different dimensions");
  require_cocycle(k, a);
  require_cocycle(k, b);
  return detail::coboundary_image(k, a.dim).contains(a.bits ^ b.bits);
}

/// A (p-1)-cochain b with δb = c, if c is a coboundary.
inline std::optional<Z2Cochain> coboundary_preimage(const SimplicialComplex& k, const Z2Cochain& c) {
  check_cochain(k, c);
  if (c.dim == 0) fail(ErrorCode::Input, "0-cochains have no coboundary preimage");
  const auto b = gf2::solve(detail::coboundary(k, c.dim - 1), c.bits);
  if (!b) return std::nullopt;
  return Z2Cochain{c.dim - 1, *b};
}

/// (a ∪ b)(v0..v_{p+q}) = a(v0..vp) * b(vp..v_{p+q}).
inline Z2Cochain cup_product(const SimplicialComplex& k, const Z2Cochain& a, const Z2Cochain& b) {
  check_cochain(k, a);
  check_cochain(k, b);
  const int n = a.dim + b.dim;
  Z2Cochain out = zero_cochain(k, n);  // empty above dim K
  const auto& top = k.simplices(n);
  for (std::size_t i = 0; i < top.size(); ++i) {
    const Simplex& s = top[i];
    const Simplex front(s.begin(), s.begin() + a.dim + 1);
    const Simplex back(s.begin() + a.dim, s.end());
    if (a.bits.get(*k.index_of(front)) && b.bits.get(*k.index_of(back))) out.bits.set(i);
  }
  return out;
}

inline std::vector<std::vector<int>> connected_components(const SimplicialComplex& k) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k.vertex_count()));
  for (const auto& e : k.simplices(1)) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  std::vector<int> seen(adj.size(), 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < k.vertex_count(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> comp;
    std::queue<int> todo;
    todo.push(v);
    seen[static_cast<std::size_t>(v)] = 1;
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      comp.push_back(u);
      for (int w : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          todo.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Vertex map sending every simplex of `source` onto a simplex of `target`
/// (possibly of lower dimension).
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> vertex_map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
    if (static_cast<int>(map_.size()) != source_->vertex_count())
      fail(ErrorCode::Input, "vertex map must list one image per source vertex");
    for (int v : map_)
      if (v < 0 || v >= target_->vertex_count())
        fail(ErrorCode::Input, "vertex image " + std::to_string(v) + " out of range");
    for (int p = 1; p <= source_->dimension(); ++p)
      for (const auto& s : source_->simplices(p))
        if (!target_->contains(image(s)))
          fail(ErrorCode::Input, "image of " + to_string(s) + " is not a simplex of the target");
  }

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  int operator()(int v) const { return map_[static_cast<std::size_t>(v)]; }

  /// Sorted vertex set of the image simplex.
  Simplex image(const Simplex& s) const {
    Simplex out;
    for (int v : s) out.push_back(map_[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<int> map_;
};

/// φ*c: zero on simplices that φ collapses.
inline Z2Cochain pullback(const SimplicialMap& phi, const Z2Cochain& c) {
  check_cochain(phi.target(), c);
  Z2Cochain out = zero_cochain(phi.source(), c.dim);
  const auto& list = phi.source().simplices(c.dim);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Simplex img = phi.image(list[i]);
    if (img.size() != list[i].size()) continue;
    if (c.bits.get(*phi.target().index_of(img))) out.bits.set(i);
  }
  return out;
}

}  // namespace ordk
