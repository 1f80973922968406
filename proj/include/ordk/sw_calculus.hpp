#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordk/complex.hpp"
#include "ordk/error.hpp"

namespace ordk {

/// Total class 1 + w_1 + w_2 + ... in H*(K; Z2), one canonical cocycle per
/// degree 0..dim K. Equality of entries is equality in cohomology.
class TotalSWClass {
 public:
  /// Validates the graded entries: degree p lives in C^p and is a cocycle,
  /// degree 0 is the unit, and degrees above `rank_cap` vanish in
  /// cohomology. Missing trailing degrees are zero.
  static TotalSWClass make(ComplexPtr complex, std::vector<Z2Cochain> graded, int rank_cap) {
    if (!complex) fail(ErrorCode::Input, "total class needs a complex");
    if (rank_cap < 0) fail(ErrorCode::Input, "negative rank");
    const SimplicialComplex& k = *complex;
    if (graded.empty()) fail(ErrorCode::Input, "total class needs a degree-0 entry");
    if (static_cast<int>(graded.size()) > k.dimension() + 1) {
      for (std::size_t p = static_cast<std::size_t>(k.dimension()) + 1; p < graded.size(); ++p)
        if (graded[p].bits.size() != 0)
          fail(ErrorCode::Input, "degree " + std::to_string(p) + " exceeds the complex dimension");
      graded.resize(static_cast<std::size_t>(k.dimension()) + 1);
    }
    TotalSWClass w;
    w.complex_ = std::move(complex);
    w.rank_cap_ = rank_cap;
    for (int p = 0; p <= k.dimension(); ++p) {
      if (p < static_cast<int>(graded.size())) {
        Z2Cochain c = graded[static_cast<std::size_t>(p)];
        if (c.dim != p) fail(ErrorCode::Input, "entry of degree " + std::to_string(p) + " has dimension " + std::to_string(c.dim));
        check_cochain(k, c);
        c = canonical_form(k, c);
        if (p > rank_cap && !c.is_zero())
          fail(ErrorCode::Input, "class of degree " + std::to_string(p) +
                                     " is nonzero above the rank " + std::to_string(rank_cap));
        w.entries_.push_back(std::move(c));
      } else {
        w.entries_.push_back(zero_cochain(k, p));
      }
    }
    if (w.entries_[0] != unit_cochain(k))
      fail(ErrorCode::Input, "degree-0 entry is not the unit class");
    return w;
  }

  const SimplicialComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  int rank_cap() const { return rank_cap_; }
  int top_degree() const { return static_cast<int>(entries_.size()) - 1; }
  const Z2Cochain& operator[](int p) const { return entries_[static_cast<std::size_t>(p)]; }
  const std::vector<Z2Cochain>& entries() const { return entries_; }

  /// Degrees carrying a nonzero class.
  std::vector<int> nonzero_degrees() const {
    std::vector<int> out;
    for (int p = 0; p <= top_degree(); ++p)
      if (!entries_[static_cast<std::size_t>(p)].is_zero()) out.push_back(p);
    return out;
  }

  /// Same classes in every degree (rank caps may differ).
  bool same_classes(const TotalSWClass& other) const {
    return *complex_ == *other.complex_ && entries_ == other.entries_;
  }

  friend bool operator==(const TotalSWClass& a, const TotalSWClass& b) {
    return a.rank_cap_ == b.rank_cap_ && a.same_classes(b);
  }

 private:
  ComplexPtr complex_;
  std::vector<Z2Cochain> entries_;
  int rank_cap_ = 0;
};

inline TotalSWClass trivial_bundle_class(const ComplexPtr& k, int rank) {
  return TotalSWClass::make(k, {unit_cochain(*k)}, rank);
}

/// 1 + w1 for a line bundle with first class w1.
inline TotalSWClass line_bundle_class(const ComplexPtr& k, const Z2Cochain& w1) {
  return TotalSWClass::make(k, {unit_cochain(*k), w1}, 1);
}

/// Whitney sum formula: w_i(ξ ⊕ η) = Σ_{j=0..i} w_j(ξ) ∪ w_{i-j}(η).
inline TotalSWClass whitney_product(const TotalSWClass& xi, const TotalSWClass& eta) {
  if (!(xi.complex() == eta.complex())) fail(ErrorCode::Input, "classes live on different complexes");
  const SimplicialComplex& k = xi.complex();
  std::vector<Z2Cochain> out;
  for (int i = 0; i <= xi.top_degree(); ++i) {
    Z2Cochain sum = zero_cochain(k, i);
    for (int j = 0; j <= i; ++j) sum = sum + cup_product(k, xi[j], eta[i - j]);
    out.push_back(std::move(sum));
  }
  return TotalSWClass::make(xi.complex_ptr(), std::move(out), xi.rank_cap() + eta.rank_cap());
}

/// w̄ with w w̄ = 1 up to degree `truncation`: w̄_i = Σ_{j=1..i} w_j ∪ w̄_{i-j}.
inline TotalSWClass inverse_class(const TotalSWClass& w, int truncation) {
  if (truncation < 0) fail(ErrorCode::Input, "negative truncation degree");
  const SimplicialComplex& k = w.complex();
  if (w[0] != unit_cochain(k)) fail(ErrorCode::Input, "degree-0 entry is not the unit");
  std::vector<Z2Cochain> bar{unit_cochain(k)};
  const int top = std::min(truncation, w.top_degree());
  for (int i = 1; i <= top; ++i) {
    Z2Cochain sum = zero_cochain(k, i);
    for (int j = 1; j <= i; ++j) sum = sum + cup_product(k, w[j], bar[static_cast<std::size_t>(i - j)]);
    bar.push_back(std::move(sum));
  }
  return TotalSWClass::make(w.complex_ptr(), std::move(bar), truncation);
}

/// Degrees forced to vanish by m everywhere-independent sections of a rank-k
/// bundle: {k-m+1, ..., k}.
inline std::set<int> vanish_from_sections(int rank, int sections) {
  if (sections < 0 || rank < 0) fail(ErrorCode::Input, "negative rank or section count");
  if (sections > rank)
    fail(ErrorCode::Input, std::to_string(sections) + " sections exceed the rank " + std::to_string(rank));
  std::set<int> out;
  for (int i = rank - sections + 1; i <= rank; ++i) out.insert(i);
  return out;
}

/// Returns w unchanged if every degree forced to vanish by `sections`
/// independent sections is zero; rejects it otherwise.
inline TotalSWClass constrain_by_sections(const TotalSWClass& w, int sections) {
  for (int p : vanish_from_sections(w.rank_cap(), sections)) {
    if (p <= w.top_degree() && !w[p].is_zero())
      fail(ErrorCode::Input, "degree " + std::to_string(p) + " must vanish with " +
                                 std::to_string(sections) + " independent sections");
  }
  return w;
}

enum class CoefficientGroup { IntegersZ, IntegersMod2, NoObstruction };

inline const char* to_string(CoefficientGroup g) {
  switch (g) {
    case CoefficientGroup::IntegersZ: return "Z";
    case CoefficientGroup::IntegersMod2: return "Z2";
    case CoefficientGroup::NoObstruction: return "none";
  }
  return "?";
}

/// Coefficients of the obstruction to extending an m-frame field over the
/// ν-skeleton of a rank-k bundle: none for ν <= k-m, else Z for odd ν and
/// Z2 for even ν.
inline CoefficientGroup obstruction_coefficient_group(int nu, int rank, int frame_size) {
  if (nu < 0) fail(ErrorCode::Input, "negative skeleton dimension");
  if (frame_size < 1 || frame_size > rank)
    fail(ErrorCode::Input, "frame size must satisfy 1 <= m <= k");
  if (nu <= rank - frame_size) return CoefficientGroup::NoObstruction;
  return nu % 2 == 1 ? CoefficientGroup::IntegersZ : CoefficientGroup::IntegersMod2;
}

/// The Stiefel-manifold homology rule (H_{k-m} is Z for even k-m, Z2 for
/// odd) assigns its group to every obstructed ν. Where it disagrees with the
/// ν-parity rule above, a note is returned; the ν-parity result stands.
inline std::optional<std::string> obstruction_parity_note(int nu, int rank, int frame_size) {
  const CoefficientGroup by_nu = obstruction_coefficient_group(nu, rank, frame_size);
  if (by_nu == CoefficientGroup::NoObstruction) return std::nullopt;
  const CoefficientGroup by_homology =
      (rank - frame_size) % 2 == 0 ? CoefficientGroup::IntegersZ : CoefficientGroup::IntegersMod2;
  if (by_homology == by_nu) return std::nullopt;
  return std::string("obstruction coefficients: the dimension-parity rule gives ") + to_string(by_nu) +
         " for nu=" + std::to_string(nu) + ", the H_{k-m} parity rule (k-m=" +
         std::to_string(rank - frame_size) + ") gives " + to_string(by_homology) +
         "; reporting " + to_string(by_nu);
}

}  // namespace ordk
