#pragma once

#include <cstddef>
#include <vector>

#include "ordk/error.hpp"
#include "ordk/exact.hpp"
#include "ordk/linalg.hpp"
#include "ordk/ordered_group.hpp"
#include "ordk/quad.hpp"

namespace ordk {

/// A normalized positive homomorphism s : (G, u) -> (R, 1).
class State {
 public:
  /// Validates s(u) = 1 and positivity on the cone.
  static State make(const OrderedGroup& g, LinearFunctional functional, GroupElement unit) {
    g.check_length(unit);
    if (functional.rank() != g.rank()) fail(ErrorCode::Input, "state functional has the wrong rank");
    if (functional(unit) != QuadExact(1))
      fail(ErrorCode::Input, "state does not take the value 1 on the unit");
    if (g.is_simplicial()) {
      for (const auto& b : g.basis())
        if (functional(b).sign() < 0)
          fail(ErrorCode::Input, "state is negative on basis vector " + to_string(b));
    } else {
      // On a hyperplane cone the positive functionals are the positive
      // multiples of f.
      const LinearFunctional& f = g.functional();
      std::size_t lead = 0;
      while (f[lead].is_zero()) ++lead;
      const QuadExact ratio = functional[lead] / f[lead];
      if (ratio.sign() <= 0) fail(ErrorCode::Input, "state is not positive on the cone");
      for (std::size_t i = 0; i < f.rank(); ++i)
        if (functional[i] != ratio * f[i])
          fail(ErrorCode::Input, "state is not positive on the cone");
    }
    return State(std::move(functional), std::move(unit));
  }

  const LinearFunctional& functional() const { return functional_; }
  const GroupElement& unit() const { return unit_; }
  std::size_t rank() const { return functional_.rank(); }
  QuadExact operator()(const GroupElement& x) const { return functional_(x); }

  friend bool operator==(const State&, const State&) = default;

 private:
  State(LinearFunctional f, GroupElement u) : functional_(std::move(f)), unit_(std::move(u)) {}

  LinearFunctional functional_;
  GroupElement unit_;
};

using StateList = std::vector<State>;

struct ConvexCoefficients {
  std::vector<Rational> weights;
  friend bool operator==(const ConvexCoefficients&, const ConvexCoefficients&) = default;
};

/// The unique state s = f / f(u) of a totally ordered hyperplane group.
inline State unique_state(const OrderedGroup& g, const GroupElement& u) {
  if (!g.is_hyperplane())
    fail(ErrorCode::NoUniqueState, "unique states are computed for hyperplane cones");
  if (!is_totally_ordered(g))
    fail(ErrorCode::NoUniqueState, "group is not totally ordered");
  g.check_length(u);
  const QuadExact fu = g.functional()(u);
  if (fu.sign() <= 0) fail(ErrorCode::Input, "unit " + to_string(u) + " is not positive");
  return State::make(g, g.functional().scaled_by_inverse(fu), u);
}

/// The exact image generator of a discrete state, if s(G) is cyclic.
///
/// s(G) contains s(u) = 1, so a cyclic image is a subgroup of Q; any surd
/// part makes the image dense.
inline std::optional<Rational> discrete_image_generator(const State& s,
                                                        const std::vector<GroupElement>& generators) {
  const std::size_t k = s.rank();
  for (const auto& g : generators)
    if (g.size() != k) fail(ErrorCode::Input, "generator has the wrong length");
  if (!linalg::spans_integer_lattice(generators, k))
    fail(ErrorCode::Input, "generators do not span Z^" + std::to_string(k));
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& g : generators) {
    const QuadExact v = s(g);
    if (!v.is_rational()) return std::nullopt;
    num_gcd = gcd(num_gcd, numerator(v.rational_part()));
    den_lcm = lcm(den_lcm, denominator(v.rational_part()));
  }
  return Rational(num_gcd, den_lcm);
}

inline bool is_discrete_state(const State& s, const std::vector<GroupElement>& generators) {
  return discrete_image_generator(s, generators).has_value();
}

inline std::vector<GroupElement> standard_generators(std::size_t k) {
  return linalg::identity(k);
}

/// H = {x - y : x, y in (ker s)⁺}.
inline OrderIdeal kernel_ideal(const OrderedGroup& g, const State& s) {
  if (s.rank() != g.rank()) fail(ErrorCode::Input, "state and group ranks differ");
  if (g.is_hyperplane()) {
    // s is a positive multiple of f, which is nonzero on G⁺ \ {0}.
    return OrderIdeal::zero(g.rank());
  }
  // s >= 0 on every basis vector, so a positive combination lies in ker s
  // only if it uses basis vectors killed by s.
  IntMatrix gens;
  for (const auto& b : g.basis())
    if (s(b).is_zero()) gens.push_back(b);
  return OrderIdeal(g.rank(), gens);
}

/// Extreme points of S(G,u): the normalized basis-coordinate projections of
/// a simplicial group, or the single state of a hyperplane group.
inline StateList extreme_states(const OrderedGroup& g, const GroupElement& u) {
  g.check_length(u);
  if (g.is_hyperplane()) {
    if (is_zero_element(u) || !is_positive(g, u))
      fail(ErrorCode::Input, "unit " + to_string(u) + " is not an order unit");
    const QuadExact fu = g.functional()(u);
    return {State::make(g, g.functional().scaled_by_inverse(fu), u)};
  }
  const IntVector c = g.basis_coordinates(u);
  for (const auto& ci : c)
    if (ci <= 0) fail(ErrorCode::Input, "unit " + to_string(u) + " is not an order unit");
  StateList out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    RatVector coeffs;
    for (const auto& x : g.coordinate_functionals()[i]) coeffs.push_back(Rational(x, c[i]));
    out.push_back(State::make(g, LinearFunctional::rational(coeffs), u));
  }
  return out;
}

/// Exact nonnegative weights with s = sum_i w_i * extremes[i].
inline ConvexCoefficients rational_convex_decomposition(const State& s, const StateList& extremes) {
  if (extremes.empty()) fail(ErrorCode::Input, "no extreme states given");
  const std::size_t k = s.rank();
  const auto generators = standard_generators(k);
  if (!is_discrete_state(s, generators)) fail(ErrorCode::Input, "state is not discrete");
  for (const auto& e : extremes) {
    if (e.rank() != k) fail(ErrorCode::Input, "extreme state has the wrong rank");
    if (!is_discrete_state(e, generators)) fail(ErrorCode::Input, "extreme state is not discrete");
  }
  const std::size_t m = extremes.size();
  RatMatrix a;
  RatVector b;
  for (std::size_t j = 0; j < k; ++j) {
    RatVector row;
    for (const auto& e : extremes) row.push_back(e.functional()[j].rational_part());
    a.push_back(std::move(row));
    b.push_back(s.functional()[j].rational_part());
  }
  a.emplace_back(m, Rational(1));
  b.push_back(1);
  const auto solution = linalg::solve(a, b, m);
  if (!solution) fail(ErrorCode::DecompositionFailure, "state is not in the affine span");
  for (const auto& w : *solution)
    if (w < 0)
      fail(ErrorCode::DecompositionFailure, "state is outside the rational convex hull");
  return {*solution};
}

/// x̂ evaluated on the extreme states of (G, u).
inline std::vector<QuadExact> natural_map_eval(const OrderedGroup& g, const GroupElement& u,
                                               const GroupElement& x) {
  g.check_length(x);
  std::vector<QuadExact> out;
  for (const auto& s : extreme_states(g, u)) out.push_back(s(x));
  return out;
}

/// Affine dimension of a finite state list, as the rank over Q(sqrt D) of
/// the differences s_i - s_1 evaluated on spanning probes.
inline std::size_t affine_dimension(const StateList& states,
                                    const std::vector<GroupElement>& probes) {
  if (states.empty()) fail(ErrorCode::Input, "empty state list");
  const std::size_t k = states.front().rank();
  if (!linalg::spans_integer_lattice(probes, k))
    fail(ErrorCode::Input, "probe elements do not span Z^" + std::to_string(k));
  linalg::Matrix<QuadExact> diffs;
  for (std::size_t i = 1; i < states.size(); ++i) {
    std::vector<QuadExact> row;
    for (const auto& p : probes) row.push_back(states[i](p) - states[0](p));
    diffs.push_back(std::move(row));
  }
  return linalg::rank(diffs, probes.size());
}

}  // namespace ordk
