#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "ordk/complex.hpp"
#include "ordk/error.hpp"
#include "ordk/ordered_group.hpp"

namespace ordk {

/// Unvalidated bundle description, as read from input.
struct RawBundle {
  ComplexPtr base;
  int fiber_rank = 0;
  Integer radicand = 0;
  std::map<int, LinearFunctional> vertex_normals;
  std::map<Simplex, int> edge_signs;  // omitted edges are +1
};

/// A field of totally ordered rank-k groups over a simplicial complex:
/// a positive cone per vertex and a ±1 orientation transition per edge.
/// Every 2-simplex carries an even number of flips.
class GroupBundle {
 public:
  const SimplicialComplex& base() const { return *base_; }
  const ComplexPtr& base_ptr() const { return base_; }
  int fiber_rank() const { return fiber_rank_; }
  const Integer& radicand() const { return radicand_; }
  const std::vector<LinearFunctional>& vertex_data() const { return vertex_data_; }
  /// Indexed like the complex's 1-simplices.
  const std::vector<int>& edge_signs() const { return edge_signs_; }

  int edge_sign(int u, int v) const {
    const auto idx = base_->index_of(u < v ? Simplex{u, v} : Simplex{v, u});
    if (!idx) fail(ErrorCode::Input, "no edge " + to_string(Simplex{u, v}));
    return edge_signs_[*idx];
  }

  RawBundle raw() const {
    RawBundle r{base_, fiber_rank_, radicand_, {}, {}};
    for (std::size_t v = 0; v < vertex_data_.size(); ++v)
      r.vertex_normals.emplace(static_cast<int>(v), vertex_data_[v]);
    for (std::size_t e = 0; e < edge_signs_.size(); ++e)
      r.edge_signs[base_->simplices(1)[e]] = edge_signs_[e];
    return r;
  }

  friend bool operator==(const GroupBundle& a, const GroupBundle& b) {
    return *a.base_ == *b.base_ && a.fiber_rank_ == b.fiber_rank_ &&
           a.vertex_data_ == b.vertex_data_ && a.edge_signs_ == b.edge_signs_;
  }

 private:
  friend GroupBundle validate_bundle(const RawBundle&);
  ComplexPtr base_;
  int fiber_rank_ = 0;
  Integer radicand_ = 0;
  std::vector<LinearFunctional> vertex_data_;
  std::vector<int> edge_signs_;
};

/// Checks the cocycle condition on every 2-simplex and the vertex functionals.
inline GroupBundle validate_bundle(const RawBundle& raw) {
  if (!raw.base) fail(ErrorCode::Input, "bundle has no base complex");
  const SimplicialComplex& k = *raw.base;
  if (raw.fiber_rank < 2) fail(ErrorCode::Input, "fiber rank must be at least 2");
  GroupBundle b;
  b.base_ = raw.base;
  b.fiber_rank_ = raw.fiber_rank;
  b.radicand_ = raw.radicand;
  for (int v = 0; v < k.vertex_count(); ++v) {
    const auto it = raw.vertex_normals.find(v);
    if (it == raw.vertex_normals.end())
      fail(ErrorCode::Input, "vertex " + std::to_string(v) + " has no normal");
    if (static_cast<int>(it->second.rank()) != raw.fiber_rank)
      fail(ErrorCode::Input, "normal at vertex " + std::to_string(v) + " has the wrong rank");
    bool nonzero = false;
    for (const auto& c : it->second.coeffs()) nonzero = nonzero || !c.is_zero();
    if (!nonzero) fail(ErrorCode::Input, "normal at vertex " + std::to_string(v) + " is zero");
    b.vertex_data_.push_back(it->second);
  }
  for (const auto& [v, f] : raw.vertex_normals)
    if (v < 0 || v >= k.vertex_count())
      fail(ErrorCode::Input, "normal given for unknown vertex " + std::to_string(v));
  b.edge_signs_.assign(k.count(1), 1);
  for (const auto& [given, sign] : raw.edge_signs) {
    Simplex edge = given;
    std::sort(edge.begin(), edge.end());
    const auto idx = k.index_of(edge);
    if (edge.size() != 2 || !idx) fail(ErrorCode::Input, "sign given for unknown edge " + to_string(edge));
    if (sign != 1 && sign != -1) fail(ErrorCode::Input, "edge sign must be +1 or -1");
    b.edge_signs_[*idx] = sign;
  }
  for (const auto& t : k.simplices(2)) {
    const int product = b.edge_signs_[*k.index_of({t[0], t[1]})] *
                        b.edge_signs_[*k.index_of({t[1], t[2]})] *
                        b.edge_signs_[*k.index_of({t[0], t[2]})];
    if (product != 1) fail(ErrorCode::CocycleViolation, "odd number of flips on simplex " + to_string(t));
  }
  return b;
}

/// A first Stiefel-Whitney class: canonical 1-cocycle representative.
struct W1Class {
  ComplexPtr base;
  Z2Cochain representative;

  bool is_trivial() const { return representative.is_zero(); }
  friend bool operator==(const W1Class& a, const W1Class& b) {
    return *a.base == *b.base && a.representative == b.representative;
  }
};

/// Flip pattern of a bundle as a 1-cochain (bit set where the sign is -1).
inline Z2Cochain edge_sign_cochain(const GroupBundle& e) {
  Z2Cochain c = zero_cochain(e.base(), 1);
  for (std::size_t i = 0; i < e.edge_signs().size(); ++i)
    if (e.edge_signs()[i] < 0) c.bits.set(i);
  return c;
}

inline W1Class w1_class(const GroupBundle& e) {
  return {e.base_ptr(), canonical_form(e.base(), edge_sign_cochain(e))};
}

/// True iff both bundles carry the same w1. Different classes certify
/// distinct bundles; equal classes only mean the invariant agrees.
inline bool classify_pair(const GroupBundle& a, const GroupBundle& b) {
  if (!(a.base() == b.base())) fail(ErrorCode::Input, "bundles have different base complexes");
  if (a.fiber_rank() != b.fiber_rank()) fail(ErrorCode::Input, "bundles have different fiber ranks");
  return w1_class(a) == w1_class(b);
}

/// Multiplies the fiber orientation at each vertex by `gauge[v]`.
inline GroupBundle apply_gauge(const GroupBundle& e, const std::vector<int>& gauge) {
  if (static_cast<int>(gauge.size()) != e.base().vertex_count())
    fail(ErrorCode::Input, "gauge must list one sign per vertex");
  RawBundle r = e.raw();
  for (auto& [v, f] : r.vertex_normals)
    if (gauge[static_cast<std::size_t>(v)] < 0) f = -f;
  for (auto& [edge, sign] : r.edge_signs)
    sign *= gauge[static_cast<std::size_t>(edge[0])] * gauge[static_cast<std::size_t>(edge[1])];
  return validate_bundle(r);
}

inline GroupBundle flip_vertex(const GroupBundle& e, int v) {
  std::vector<int> gauge(static_cast<std::size_t>(e.base().vertex_count()), 1);
  gauge.at(static_cast<std::size_t>(v)) = -1;
  return apply_gauge(e, gauge);
}

struct ComponentTrivialization {
  std::vector<int> vertices;
  /// Vertex signs ε with ε(u) ε(v) = sign(uv) on every edge, indexed like
  /// `vertices`; set when the component's class is trivial.
  std::optional<std::vector<int>> gauge;
  /// Closed vertex path with an odd number of flips; set otherwise.
  std::optional<std::vector<int>> odd_cycle;
};

/// Spanning-tree propagation per connected component, lowest index first.
inline std::vector<ComponentTrivialization> trivialize(const GroupBundle& e) {
  const SimplicialComplex& k = e.base();
  const std::size_t n = static_cast<std::size_t>(k.vertex_count());
  std::vector<std::vector<int>> adj(n);
  for (const auto& edge : k.simplices(1)) {
    adj[static_cast<std::size_t>(edge[0])].push_back(edge[1]);
    adj[static_cast<std::size_t>(edge[1])].push_back(edge[0]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<ComponentTrivialization> out;
  for (const auto& comp : connected_components(k)) {
    std::map<int, int> eps;
    std::map<int, int> parent;
    std::queue<int> todo;
    eps[comp.front()] = 1;
    parent[comp.front()] = -1;
    todo.push(comp.front());
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (eps.count(w)) continue;
        eps[w] = eps[u] * e.edge_sign(u, w);
        parent[w] = u;
        todo.push(w);
      }
    }
    ComponentTrivialization t;
    t.vertices = comp;
    std::optional<std::pair<int, int>> bad;
    for (const auto& edge : k.simplices(1)) {
      if (!eps.count(edge[0])) continue;
      if (eps[edge[0]] * eps[edge[1]] != e.edge_sign(edge[0], edge[1])) {
        bad = std::make_pair(edge[0], edge[1]);
        break;
      }
    }
    if (!bad) {
      std::vector<int> g;
      for (int v : comp) g.push_back(eps[v]);
      t.gauge = std::move(g);
    } else {
      // Tree paths from both ends up to their meeting point, closed by the bad edge.
      auto path_to_root = [&](int v) {
        std::vector<int> p;
        for (; v != -1; v = parent[v]) p.push_back(v);
        return p;
      };
      std::vector<int> pu = path_to_root(bad->first);
      std::vector<int> pv = path_to_root(bad->second);
      while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
      }
      // pu and pv now end at the common ancestor.
      std::vector<int> cycle = pu;  // bad.first ... ancestor
      for (std::size_t i = pv.size() - 1; i-- > 0;) cycle.push_back(pv[i]);  // ... bad.second
      t.odd_cycle = std::move(cycle);
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// All of H^1(K; Z2), as canonical representatives in binary counting order
/// over the cohomology basis.
inline std::vector<W1Class> enumerate_classes(const ComplexPtr& k) {
  const CohomologyBasis h1 = cohomology(*k, 1);
  if (h1.rank > 20) fail(ErrorCode::Input, "H^1 has rank above 20, too many classes to list");
  std::vector<W1Class> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << h1.rank); ++mask) {
    Z2Cochain c = zero_cochain(*k, 1);
    for (std::size_t i = 0; i < h1.rank; ++i)
      if (mask >> i & 1) c = c + h1.representatives[i];
    out.push_back({k, std::move(c)});
  }
  return out;
}

/// A bundle with a constant vertex functional realizing the given class.
inline GroupBundle realize_class(const W1Class& cls, const LinearFunctional& normal) {
  RawBundle r{cls.base, static_cast<int>(normal.rank()), normal.radicand(), {}, {}};
  for (int v = 0; v < cls.base->vertex_count(); ++v) r.vertex_normals.emplace(v, normal);
  for (const auto& edge : support(*cls.base, cls.representative)) r.edge_signs[edge] = -1;
  return validate_bundle(r);
}

/// φ*E: vertex data and edge signs pulled back; collapsed edges get +1.
inline GroupBundle pullback_bundle(const SimplicialMap& phi, const GroupBundle& e) {
  if (!(phi.target() == e.base())) fail(ErrorCode::Input, "map target is not the bundle base");
  RawBundle r{phi.source_ptr(), e.fiber_rank(), e.radicand(), {}, {}};
  for (int v = 0; v < phi.source().vertex_count(); ++v)
    r.vertex_normals.emplace(v, e.vertex_data()[static_cast<std::size_t>(phi(v))]);
  for (const auto& edge : phi.source().simplices(1)) {
    const int a = phi(edge[0]);
    const int b = phi(edge[1]);
    r.edge_signs[edge] = a == b ? 1 : e.edge_sign(a, b);
  }
  return validate_bundle(r);
}

}  // namespace ordk
