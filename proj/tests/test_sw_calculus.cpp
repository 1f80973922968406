#include <gtest/gtest.h>

#include "ordk/sw_calculus.hpp"
#include "support/fixtures.hpp"

using namespace ordk;

namespace {

Z2Cochain h1_generator(const ComplexPtr& k, std::size_t i = 0) { return cohomology(*k, 1).representatives.at(i); }

bool is_unit_through(const TotalSWClass& w, int degree) {
  if (w[0] != unit_cochain(w.complex())) return false;
  for (int p = 1; p <= std::min(degree, w.top_degree()); ++p)
    if (!w[p].is_zero()) return false;
  return true;
}

}  // namespace

TEST(TotalClass, ConstructionValidates) {
  const auto k = fixtures::rp2();
  const Z2Cochain a = h1_generator(k);
  EXPECT_NO_THROW(line_bundle_class(k, a));
  EXPECT_THROW(TotalSWClass::make(k, {zero_cochain(*k, 0)}, 2), Error);  // degree 0 not the unit
  // a∪a is nonzero in degree 2, above the rank cap 1.
  EXPECT_THROW(TotalSWClass::make(k, {unit_cochain(*k), a, cup_product(*k, a, a)}, 1), Error);
  Z2Cochain not_cocycle = zero_cochain(*k, 1);
  not_cocycle.bits.set(0);
  EXPECT_THROW(TotalSWClass::make(k, {unit_cochain(*k), not_cocycle}, 2), Error);
}

TEST(TotalClass, EntriesAreCanonical) {
  const auto k = fixtures::circle();
  const Z2Cochain e01 = cochain_from_support(*k, 1, {{0, 1}});
  const Z2Cochain e12 = cochain_from_support(*k, 1, {{1, 2}});
  EXPECT_TRUE(line_bundle_class(k, e01).same_classes(line_bundle_class(k, e12)));
}

TEST(TrivialClass, KnownExamples) {
  const auto k = fixtures::torus();
  const TotalSWClass w = trivial_bundle_class(k, 3);
  EXPECT_EQ(w.nonzero_degrees(), (std::vector<int>{0}));
  EXPECT_EQ(w.top_degree(), 2);
  EXPECT_EQ(trivial_bundle_class(k, 0).nonzero_degrees(), (std::vector<int>{0}));
}

TEST(Whitney, KnownExamples) {
  const auto rp2 = fixtures::rp2();
  const Z2Cochain a = h1_generator(rp2);
  const TotalSWClass one = trivial_bundle_class(rp2, 1);
  const TotalSWClass line = line_bundle_class(rp2, a);
  EXPECT_TRUE(whitney_product(one, line).same_classes(line));

  const TotalSWClass sq = whitney_product(line, line);
  EXPECT_TRUE(sq[1].is_zero());
  EXPECT_EQ(sq[2], canonical_form(*rp2, cup_product(*rp2, a, a)));
  EXPECT_FALSE(sq[2].is_zero());
  EXPECT_EQ(sq.rank_cap(), 2);

  const auto circle = fixtures::circle();
  const TotalSWClass lc = line_bundle_class(circle, h1_generator(circle));
  EXPECT_TRUE(is_unit_through(whitney_product(lc, lc), 1));
}

TEST(Whitney, MismatchedComplexes) {
  EXPECT_THROW(whitney_product(trivial_bundle_class(fixtures::circle(), 1), trivial_bundle_class(fixtures::rp2(), 1)),
               Error);
}

TEST(Inverse, KnownExamples) {
  const auto rp2 = fixtures::rp2();
  EXPECT_TRUE(inverse_class(trivial_bundle_class(rp2, 2), 2).same_classes(trivial_bundle_class(rp2, 2)));

  const Z2Cochain a = h1_generator(rp2);
  const TotalSWClass w = line_bundle_class(rp2, a);
  const TotalSWClass bar = inverse_class(w, 2);
  EXPECT_EQ(bar[1], canonical_form(*rp2, a));
  EXPECT_EQ(bar[2], canonical_form(*rp2, cup_product(*rp2, a, a)));
  EXPECT_TRUE(is_unit_through(whitney_product(w, bar), 2));
}

TEST(Inverse, SecondClassFormula) {
  // w̄_2 = w_1² + w_2 on the torus, with w_1 = α and w_2 = αβ.
  const auto t = fixtures::torus();
  const Z2Cochain al = h1_generator(t, 0), be = h1_generator(t, 1);
  const Z2Cochain ab = cup_product(*t, al, be);
  const TotalSWClass w = TotalSWClass::make(t, {unit_cochain(*t), al, ab}, 2);
  const TotalSWClass bar = inverse_class(w, 2);
  EXPECT_EQ(bar[2], canonical_form(*t, cup_product(*t, al, al) + ab));
  EXPECT_TRUE(is_unit_through(whitney_product(w, bar), 2));
}

TEST(Inverse, RejectsBadInput) {
  EXPECT_THROW(inverse_class(trivial_bundle_class(fixtures::circle(), 1), -1), Error);
}

TEST(Sections, KnownExamples) {
  EXPECT_EQ(vanish_from_sections(3, 2), (std::set<int>{2, 3}));
  EXPECT_EQ(vanish_from_sections(5, 4), (std::set<int>{2, 3, 4, 5}));
  EXPECT_TRUE(vanish_from_sections(4, 0).empty());
  EXPECT_THROW(vanish_from_sections(2, 3), Error);
}

TEST(Sections, ConstrainRejectsForcedDegrees) {
  const auto t = fixtures::torus();
  const Z2Cochain al = h1_generator(t, 0), be = h1_generator(t, 1);
  const TotalSWClass w = TotalSWClass::make(t, {unit_cochain(*t), al, cup_product(*t, al, be)}, 2);
  EXPECT_THROW(constrain_by_sections(w, 1), Error);
  const TotalSWClass line = TotalSWClass::make(t, {unit_cochain(*t), al}, 2);
  EXPECT_NO_THROW(constrain_by_sections(line, 1));
}

TEST(Obstruction, KnownExamples) {
  EXPECT_EQ(obstruction_coefficient_group(1, 5, 3), CoefficientGroup::NoObstruction);
  EXPECT_EQ(obstruction_coefficient_group(3, 3, 2), CoefficientGroup::IntegersZ);
  EXPECT_EQ(obstruction_coefficient_group(4, 4, 3), CoefficientGroup::IntegersMod2);
  EXPECT_THROW(obstruction_coefficient_group(2, 3, 4), Error);
}

TEST(Obstruction, ParityNoteOnlyOnConflict) {
  // k - m = 1 is odd: the homology rule says Z2 while ν = 2 is even, Z2; no conflict.
  EXPECT_FALSE(obstruction_parity_note(2, 3, 2));
  // k - m = 1, ν = 3 odd: Z by dimension parity, Z2 by homology parity.
  const auto note = obstruction_parity_note(3, 3, 2);
  ASSERT_TRUE(note);
  EXPECT_NE(note->find("reporting Z"), std::string::npos);
  EXPECT_FALSE(obstruction_parity_note(1, 5, 3));
}
