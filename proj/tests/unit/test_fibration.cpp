#include <gtest/gtest.h>

#include "fibration.hpp"
#include "shipped_db.hpp"

using namespace coincalc;
using testutil::shipped_db;

TEST(Projective, Splitting) {
  const Database& db = shipped_db();
  ProjectiveHomotopyGroup rp6 = pi_projective(db, Field::R, 9, 6);
  EXPECT_EQ(rp6.total.to_string(), "Z24");
  EXPECT_TRUE(rp6.c_group.is_trivial());
  EXPECT_TRUE(rp6.lift_inclusion.is_injective());

  ProjectiveHomotopyGroup cp3 = pi_projective(db, Field::C, 2, 3);
  EXPECT_EQ(cp3.total.to_string(), "Z");
  EXPECT_TRUE(cp3.lift_group.is_trivial());
  EXPECT_EQ(cp3.c_group.to_string(), "Z");

  EXPECT_TRUE(pi_projective(db, Field::H, 2, 2).c_group.is_trivial());
  EXPECT_EQ(pi_projective(db, Field::H, 7, 2).total.to_string(), "Z12");
  EXPECT_THROW(pi_projective(db, Field::R, 1, 4), Error);
}

TEST(Projective, SummandsSplitEverywhere) {
  const Database& db = shipped_db();
  int checked = 0;
  for (Field k : {Field::R, Field::C, Field::H})
    for (int np = 2; np <= 12; ++np)
      for (int m = 2; m <= 20; ++m) {
        try {
          ProjectiveHomotopyGroup g = pi_projective(db, k, m, np);
          Subgroup a = g.lift_image(), c = g.c_subgroup();
          EXPECT_TRUE(subgroup_sum(a, c).is_whole());
          // Trivial intersection: the lift projection kills pi^c and is
          // injective on the lift summand.
          EXPECT_TRUE(compose_homs(g.lift_projection, g.c_inclusion).is_zero());
          EXPECT_EQ(compose_homs(g.lift_projection, g.lift_inclusion), GroupHom::identity(g.lift_group));
          EXPECT_TRUE(g.lift_inclusion.is_injective());
          ++checked;
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::Unknown);
        }
      }
  EXPECT_GT(checked, 100);
}

TEST(Boundary, StableRangeKernels) {
  const Database& db = shipped_db();
  EXPECT_EQ(ker_boundary(db, Field::R, 9, 6).canonical_form().to_string(), "Z2");
  EXPECT_EQ(ker_E_boundary(db, Field::R, 9, 6).canonical_form().to_string(), "Z2");
  EXPECT_TRUE(ker_boundary(db, Field::R, 9, 6).contains(GroupElement(pi_sphere(db, 9, 6), {12})));
  EXPECT_EQ(ker_boundary(db, Field::R, 17, 10).canonical_form().to_string(), "Z2");
  EXPECT_TRUE(ker_boundary(db, Field::R, 12, 7).is_whole());
  EXPECT_TRUE(ker_E_boundary(db, Field::R, 12, 7).is_whole());
  EXPECT_THROW(stable_range_boundary(db, 10, 6), Error);
}

TEST(Boundary, KernelMatchesEnumeration) {
  const Database& db = shipped_db();
  int instances = 0;
  for (const auto& [key, rec] : db.sphere_records()) {
    auto [m, n] = key;
    if (n < 2 || m >= 2 * n - 2 || !rec.group.is_finite()) continue;
    Subgroup k = hom_kernel(stable_range_boundary(db, m, n));
    Int factor = n % 2 == 0 ? 2 : 0;
    for (const auto& z : enumerate_torsion_part(rec.group))
      EXPECT_EQ(k.contains(z), (factor * z).is_zero()) << sphere_key(m, n) << " " << z.to_string();
    ++instances;
  }
  EXPECT_GT(instances, 30);
}

TEST(Boundary, KernelInsideKernelOfComposite) {
  const Database& db = shipped_db();
  for (Field k : {Field::R, Field::C, Field::H})
    for (int np = 2; np <= 12; ++np)
      for (int m = 2; m <= 20; ++m) {
        try {
          Subgroup a = ker_boundary(db, k, m, np);
          Subgroup b = ker_E_boundary(db, k, m, np);
          EXPECT_TRUE(a.is_subgroup_of(b));
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::Unknown);
        }
      }
}

TEST(Exactness, SectionCases) {
  const Database& db = shipped_db();
  for (int np : {3, 5, 7, 9, 11})
    // Stem 8 of S^{n'-1} would be needed beyond m = n' + 7.
    for (int m = 3; m <= np + 7; ++m) {
      ExactnessReport r = validate_exactness(db, Field::R, m, np);
      EXPECT_EQ(r.status, ExactnessReport::Status::Verified) << r.key << ": " << r.message;
    }
  EXPECT_EQ(validate_exactness(db, Field::R, 9, 6).status, ExactnessReport::Status::Unverifiable);
  EXPECT_EQ(validate_exactness(db, Field::R, 11, 3).status, ExactnessReport::Status::Unverifiable);
  EXPECT_EQ(validate_exactness(db, Field::R, 5, 6).status, ExactnessReport::Status::Verified);
}

TEST(Exactness, Records) {
  Database good = Database::load(testutil::fixture("stiefel_exactness.json"));
  EXPECT_EQ(validate_exactness(good, Field::R, 9, 6).status, ExactnessReport::Status::Verified);
  Database bad = Database::load(testutil::fixture("stiefel_inexact.json"));
  ExactnessReport r = validate_exactness(bad, Field::R, 9, 6);
  EXPECT_EQ(r.status, ExactnessReport::Status::Failed);
  EXPECT_EQ(r.key, "exactness(K=R,m=9,n'=6)");
}
