#include <gtest/gtest.h>

#include "coincidence.hpp"
#include "shipped_db.hpp"

using namespace coincalc;
using testutil::shipped_db;

namespace {

struct Numbers {
  Int nielsen, mcc;
  ExtendedCount mc;
};

void expect_numbers(const CoincidenceVerdict& v, Numbers n) {
  EXPECT_EQ(v.nielsen, n.nielsen);
  EXPECT_EQ(v.mcc, n.mcc);
  EXPECT_EQ(v.mc, n.mc);
}

GroupElement z24(Int x) { return GroupElement(pi_sphere(shipped_db(), 9, 6), {x}); }

}  // namespace

TEST(SpherePairs, Examples) {
  const Database& db = shipped_db();
  for (int n : {2, 4, 6}) {
    GroupElement iota = GroupElement::generator(pi_sphere(db, n, n), 0);
    CoincidenceVerdict v = classify_sphere_pair(db, n, n, iota, iota);
    EXPECT_FALSE(v.loose);
    expect_numbers(v, {1, 1, 1});
  }
  GroupElement iota5 = GroupElement::generator(pi_sphere(db, 5, 5), 0);
  CoincidenceVerdict loose = classify_sphere_pair(db, 5, 5, iota5, iota5);
  EXPECT_TRUE(loose.loose);
  expect_numbers(loose, {0, 0, 0});

  FgAbGroup z = pi_sphere(db, 1, 1);
  CoincidenceVerdict circle = classify_sphere_pair(db, 1, 1, GroupElement(z, {3}), GroupElement(z, {5}));
  expect_numbers(circle, {2, 2, 2});
  EXPECT_EQ(circle.rule, "circle-degree-rule");
}

TEST(SpherePairs, InfiniteMinimum) {
  const Database& db = shipped_db();
  // pi_7(S^4): nu_4 is not a suspension, so (nu_4, 0) has MC infinite.
  FgAbGroup g = pi_sphere(db, 7, 4);
  CoincidenceVerdict v = classify_sphere_pair(db, 7, 4, GroupElement(g, {1, 0}), GroupElement::zero(g));
  expect_numbers(v, {1, 1, ExtendedCount::infinite()});
  CoincidenceVerdict w = classify_sphere_pair(db, 7, 4, GroupElement(g, {0, 1}), GroupElement::zero(g));
  expect_numbers(w, {1, 1, 1});
}

TEST(ProjectivePairs, TableRows) {
  const Database& db = shipped_db();
  ProjectiveClassifier c(db, Field::R, 9, 6);
  CoincidenceVerdict row1 = c.classify_lifts(z24(12), z24(12));
  EXPECT_EQ(row1.table_row, 1);
  expect_numbers(row1, {0, 0, 0});
  CoincidenceVerdict row3 = c.classify_lifts(z24(1), z24(1));
  EXPECT_EQ(row3.table_row, 3);
  expect_numbers(row3, {1, 1, 1});
  CoincidenceVerdict row4 = c.classify_lifts(z24(1), z24(0));
  EXPECT_EQ(row4.table_row, 4);
  expect_numbers(row4, {2, 2, 2});
  // -1 = A_*(1): freely homotopic lifts.
  EXPECT_EQ(c.classify_lifts(z24(23), z24(1)).table_row, 3);
}

TEST(ProjectivePairs, ComplexRows) {
  const Database& db = shipped_db();
  // pi_5(S^5) = Z, partial_C lands in pi_4(S^3) = Z2; no record, so rows
  // needing the boundary are unknown while row 7 is decidable.
  ProjectiveClassifier c(db, Field::C, 5, 2);
  GroupElement a = GroupElement(c.lift_group(), {1});
  GroupElement b = GroupElement(c.lift_group(), {2});
  CoincidenceVerdict v = c.classify_lifts(a, b);
  EXPECT_EQ(v.table_row, 7);
  expect_numbers(v, {1, 1, ExtendedCount::infinite()});
  try {
    c.classify_lifts(a, a);
    ADD_FAILURE() << "expected boundary unknown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unknown);
  }
}

TEST(ProjectivePairs, ExclusivityOnGoldenInstance) {
  ProjectiveClassifier c(shipped_db(), Field::R, 9, 6);
  ExclusivityReport r = validate_table_exclusivity(c);
  EXPECT_EQ(r.pairs_checked, 576u);
  EXPECT_EQ(r.violations, 0u);
}

TEST(ProjectivePairs, IgnoresCComponent) {
  const Database& db = shipped_db();
  ProjectiveHomotopyGroup g = pi_projective(db, Field::C, 2, 3);
  HomotopyClass a = HomotopyClass::from_total(g, GroupElement(g.total, {5}));
  HomotopyClass b = HomotopyClass::from_total(g, GroupElement(g.total, {-2}));
  CoincidenceVerdict v = classify_projective_pair(db, Field::C, 2, 3, a, b);
  EXPECT_EQ(v.table_row, 1);
}

TEST(Looseness, Examples) {
  const Database& db = shipped_db();
  FgAbGroup s5 = pi_sphere(db, 5, 5);
  EXPECT_TRUE(loose_pair(db, SpaceDescriptor::sphere(5), 5, GroupElement(s5, {4}), GroupElement(s5, {4})).loose);
  SpaceDescriptor rp6 = SpaceDescriptor::projective(Field::R, 6);
  EXPECT_TRUE(loose_pair(db, rp6, 9, z24(12), z24(12)).loose);
  EXPECT_FALSE(loose_pair(db, rp6, 9, z24(1), z24(1)).loose);
  FgAbGroup gr = grassmann_pi(db, 5, 6);
  LooseResult g = loose_pair(db, SpaceDescriptor::grassmann(6), 5, GroupElement::zero(gr), GroupElement::zero(gr));
  EXPECT_TRUE(g.loose);
  EXPECT_THROW(loose_pair(db, SpaceDescriptor::grassmann(5), 5, GroupElement::zero(gr), GroupElement::zero(gr)),
               Error);
}

TEST(Filtration, GoldenChains) {
  const Database& db = shipped_db();
  for (auto [np, m, top] : {std::tuple{6, 9, "Z24"}, std::tuple{10, 17, "Z240"}}) {
    SpaceDescriptor rp = SpaceDescriptor::projective(Field::R, np);
    EXPECT_TRUE(pi_c(db, rp, m).canonical_form().is_trivial());
    EXPECT_EQ(pi_q(db, rp, m, 2).subgroup.canonical_form().to_string(), "Z2");
    EXPECT_EQ(pi_q(db, rp, m, 1).subgroup.canonical_form().to_string(), top);
    EXPECT_EQ(pi_q(db, rp, m, 5).subgroup.canonical_form().to_string(), "Z2");
    FiltrationResult inf = pi_q(db, rp, m, std::nullopt);
    EXPECT_EQ(inf.stabilized_at, 2);
    EXPECT_EQ(inf.subgroup.canonical_form().to_string(), "Z2");
  }
}

TEST(Filtration, Spheres) {
  const Database& db = shipped_db();
  SpaceDescriptor s7 = SpaceDescriptor::sphere(7);
  for (int q = 1; q <= 5; ++q) EXPECT_TRUE(pi_q(db, s7, 10, q).subgroup.is_whole());
  SpaceDescriptor s6 = SpaceDescriptor::sphere(6);
  EXPECT_TRUE(pi_q(db, s6, 9, 2).subgroup.is_whole());
  FiltrationResult r = pi_q(db, s6, 9, 3);
  EXPECT_EQ(r.subgroup.canonical_form().to_string(), "Z2");
  EXPECT_EQ(r.stabilized_at, 3);
  EXPECT_TRUE(pi_c(db, s6, 9).canonical_form().is_trivial());
}

TEST(Shortcut, Clauses) {
  EXPECT_EQ(full_filtration_shortcut(3, true, SpaceDescriptor::sphere(5)).rule, "shortcut-vector-field");
  EXPECT_EQ(full_filtration_shortcut(3, true, SpaceDescriptor::sphere(6)).rule, "shortcut-low-dimension");
  EXPECT_EQ(full_filtration_shortcut(5, true, SpaceDescriptor::generic("R^5", 5, false, true)).rule,
            "shortcut-noncompact-target");
  EXPECT_FALSE(full_filtration_shortcut(9, true, SpaceDescriptor::projective(Field::R, 6)).applies);
}

TEST(Grassmann, Values) {
  const Database& db = shipped_db();
  for (int r : {4, 6, 8}) EXPECT_EQ(grassmann_all_loose(r), Tristate::True);
  EXPECT_EQ(grassmann_all_loose(5), Tristate::Unknown);
  EXPECT_EQ(grassmann_pi(db, 3, 4).to_string(), "Z^2");
  EXPECT_THROW(grassmann_pi(db, 2, 4), Error);
  EXPECT_THROW(grassmann_pi(db, 4, 7), Error);
}

TEST(CIsomorphism, Examples) {
  const Database& db = shipped_db();
  GroupHom odd = c_isomorphism(db, SpaceDescriptor::sphere(5), 8);
  EXPECT_EQ(odd, GroupHom::identity(odd.domain()));
  GroupHom even = c_isomorphism(db, SpaceDescriptor::sphere(6), 9);
  EXPECT_EQ(even.domain().to_string(), "Z24");
  EXPECT_EQ(even, GroupHom::multiplication(even.domain(), -1));
  GroupHom rp = c_isomorphism(db, SpaceDescriptor::projective(Field::R, 6), 9);
  EXPECT_EQ(rp.domain().to_string(), "Z2");
  EXPECT_EQ(rp, GroupHom::identity(rp.domain()));
}
