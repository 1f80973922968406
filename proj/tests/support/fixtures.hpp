#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ordk/bundle.hpp"
#include "ordk/complex.hpp"
#include "ordk/ordered_group.hpp"

namespace fixtures {

using ordk::ComplexPtr;
using ordk::Simplex;

struct NamedComplex {
  std::string name;
  int vertices;
  std::vector<Simplex> top;
};

inline std::vector<Simplex> torus_triangles() {
  std::vector<Simplex> out;
  for (int i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7};
    Simplex b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

inline std::vector<Simplex> rp2_triangles() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
}

inline std::vector<NamedComplex> named_complexes() {
  return {
      {"point", 1, {{0}}},
      {"edge", 2, {{0, 1}}},
      {"circle", 3, {{0, 1}, {1, 2}, {0, 2}}},
      {"filled triangle", 3, {{0, 1, 2}}},
      {"hexagon", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}},
      {"sphere", 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}},
      {"solid tetrahedron", 4, {{0, 1, 2, 3}}},
      {"cone over circle", 4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}},
      {"bowtie", 5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}},
      {"disjoint union", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}},
      {"torus", 7, torus_triangles()},
      {"rp2", 6, rp2_triangles()},
      {"mobius strip", 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}}},
      {"two spheres", 8, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                          {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}}},
  };
}

inline ComplexPtr build(int vertices, const std::vector<Simplex>& top) {
  return std::make_shared<const ordk::SimplicialComplex>(ordk::make_complex(vertices, top));
}

inline ComplexPtr build(const NamedComplex& c) { return build(c.vertices, c.top); }

inline ComplexPtr circle() { return build(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline ComplexPtr torus() { return build(7, torus_triangles()); }
inline ComplexPtr rp2() { return build(6, rp2_triangles()); }

inline ComplexPtr cycle(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) {
    Simplex e{i, (i + 1) % n};
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return build(n, edges);
}

/// Random 2-complex: a random set of triangles and edges on n vertices.
inline NamedComplex random_complex(std::mt19937_64& rng, int n) {
  NamedComplex c{"random", n, {}};
  std::bernoulli_distribution tri(0.3), edge(0.25);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) c.top.push_back({a, b});
      for (int d = b + 1; d < n; ++d)
        if (tri(rng)) c.top.push_back({a, b, d});
    }
  return c;
}

/// Brute-force GF(2) cohomology ranks, independent of the library.
///
/// Closes the simplex list under faces, builds coboundary columns as bit
/// masks, and counts cocycles and coboundaries by enumerating every cochain
/// (Gray-code order). rank H^p = log2 |Z^p| - log2 |B^p|.
class CohomologyOracle {
 public:
  CohomologyOracle(int vertices, const std::vector<Simplex>& top) {
    std::set<Simplex> all;
    for (int v = 0; v < vertices; ++v) all.insert({v});
    for (auto s : top) {
      std::sort(s.begin(), s.end());
      const std::size_t n = s.size();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) f.push_back(s[i]);
        all.insert(f);
      }
    }
    for (const auto& s : all) {
      const std::size_t d = s.size() - 1;
      if (by_dim_.size() <= d) by_dim_.resize(d + 1);
      by_dim_[d].push_back(s);
    }
  }

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int p) const {
    return p < 0 || p > dimension() ? 0 : by_dim_[static_cast<std::size_t>(p)].size();
  }

  int rank(int p) const {
    if (p < 0 || p > dimension()) return 0;
    const int z = log2_count_cocycles(p);
    const int b = p == 0 ? 0 : log2_count_coboundaries(p);
    return z - b;
  }

  int euler_characteristic() const {
    int chi = 0;
    for (int p = 0; p <= dimension(); ++p) chi += (p % 2 ? -1 : 1) * static_cast<int>(count(p));
    return chi;
  }

 private:
  // Column j of δ_p: mask over (p+1)-simplices containing the j-th p-simplex.
  std::vector<std::uint64_t> columns(int p) const {
    std::vector<std::uint64_t> cols(count(p), 0);
    if (p + 1 > dimension()) return cols;
    const auto& lo = by_dim_[static_cast<std::size_t>(p)];
    const auto& hi = by_dim_[static_cast<std::size_t>(p + 1)];
    for (std::size_t i = 0; i < hi.size(); ++i)
      for (std::size_t j = 0; j < lo.size(); ++j)
        if (std::includes(hi[i].begin(), hi[i].end(), lo[j].begin(), lo[j].end()))
          cols[j] |= std::uint64_t{1} << i;
    return cols;
  }

  static int log2_exact(std::uint64_t n) {
    int r = 0;
    while ((std::uint64_t{1} << r) < n) ++r;
    return r;
  }

  // Walks all 2^n cochains in Gray-code order, XOR-ing one column per step.
  template <class Visit>
  static void gray_walk(const std::vector<std::uint64_t>& cols, Visit visit) {
    const std::size_t n = cols.size();
    std::uint64_t image = 0;
    visit(image);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
      image ^= cols[static_cast<std::size_t>(__builtin_ctzll(i))];
      visit(image);
    }
  }

  int log2_count_cocycles(int p) const {
    std::uint64_t zeros = 0;
    gray_walk(columns(p), [&](std::uint64_t img) { zeros += img == 0; });
    return log2_exact(zeros);
  }

  int log2_count_coboundaries(int p) const {
    std::vector<bool> seen(std::size_t{1} << count(p), false);
    std::uint64_t distinct = 0;
    gray_walk(columns(p - 1), [&](std::uint64_t img) {
      if (!seen[img]) {
        seen[img] = true;
        ++distinct;
      }
    });
    return log2_exact(distinct);
  }

  std::vector<std::vector<Simplex>> by_dim_;
};

/// Sign of a + b√d (d > 0, squarefree) by integer comparison of squares.
inline int exact_sign(long long a, long long b, long long d) {
  const int sa = a > 0 ? 1 : a < 0 ? -1 : 0;
  const int sb = b > 0 ? 1 : b < 0 ? -1 : 0;
  if (sa == sb) return sa;
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  const __int128 lhs = static_cast<__int128>(a) * a;
  const __int128 rhs = static_cast<__int128>(b) * b * d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

/// Random element of Z^k with entries in [-r, r].
inline ordk::IntVector random_element(std::mt19937_64& rng, std::size_t k, int r) {
  std::uniform_int_distribution<int> d(-r, r);
  ordk::IntVector v(k);
  for (auto& x : v) x = d(rng);
  return v;
}

/// Random unimodular matrix: product of elementary row operations.
inline ordk::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t k, int steps) {
  ordk::IntMatrix m(k, ordk::IntVector(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  if (k < 2) return m;
  std::uniform_int_distribution<std::size_t> idx(0, k - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    const int c = coef(rng);
    for (std::size_t j = 0; j < k; ++j) m[a][j] += c * m[b][j];
  }
  std::bernoulli_distribution flip(0.5);
  if (flip(rng)) std::swap(m[0], m[k - 1]);
  return m;
}

/// Random functional with coefficients in Q(√d), redrawn until its group is
/// totally ordered.
inline ordk::LinearFunctional random_irrational_functional(std::mt19937_64& rng, std::size_t k,
                                                          long long d) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (;;) {
    std::vector<ordk::QuadExact> coeffs;
    for (std::size_t i = 0; i < k; ++i)
      coeffs.emplace_back(ordk::Rational(c(rng), den(rng)), ordk::Rational(c(rng), den(rng)), d);
    ordk::LinearFunctional f(coeffs, d);
    if (ordk::is_totally_ordered(ordk::OrderedGroup::hyperplane(f))) return f;
  }
}

/// Random bundle over K: constant normal and a random flip pattern obtained
/// from a random class plus a random gauge.
inline ordk::GroupBundle random_bundle(std::mt19937_64& rng, const ComplexPtr& k) {
  const auto classes = ordk::enumerate_classes(k);
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  const ordk::LinearFunctional normal({ordk::QuadExact(1), ordk::QuadExact(0, 1, 2)}, 2);
  ordk::GroupBundle b = ordk::realize_class(classes[pick(rng)], normal);
  std::vector<int> gauge(static_cast<std::size_t>(k->vertex_count()));
  std::bernoulli_distribution coin(0.5);
  for (auto& g : gauge) g = coin(rng) ? 1 : -1;
  return ordk::apply_gauge(b, gauge);
}

}  // namespace fixtures
