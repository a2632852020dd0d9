#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "abelian.hpp"
#include "random_util.hpp"

using namespace coincalc;
using testutil::random_element;
using testutil::random_finite_group;
using testutil::random_group;
using testutil::random_hom;

namespace {

using Histogram = std::map<Int, Int>;

// Number of elements of each order; determines a finite abelian group.
Histogram order_histogram(const std::vector<GroupElement>& elements) {
  Histogram h;
  for (const auto& x : elements) ++h[*element_order(x)];
  return h;
}

Histogram order_histogram(const FgAbGroup& g) { return order_histogram(enumerate_torsion_part(g)); }

// Closure of a generating set by breadth-first search.
std::vector<GroupElement> span_by_search(const FgAbGroup& g, const std::vector<GroupElement>& gens) {
  std::set<std::vector<Int>> seen{GroupElement::zero(g).coords()};
  std::vector<GroupElement> out{GroupElement::zero(g)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : gens) {
      GroupElement y = out[i] + s;
      if (seen.insert(y.coords()).second) out.push_back(y);
    }
  return out;
}

}  // namespace

TEST(FgAbGroup, RejectsBrokenChain) {
  EXPECT_THROW(FgAbGroup(0, {4, 2}), Error);
  EXPECT_THROW(FgAbGroup(0, {1}), Error);
  EXPECT_THROW(FgAbGroup(1, {2}, {"a"}), Error);
  EXPECT_NO_THROW(FgAbGroup(1, {2, 4}));
}

TEST(FgAbGroup, Rendering) {
  EXPECT_EQ(FgAbGroup().to_string(), "0");
  EXPECT_EQ(FgAbGroup(1, {24}).to_string(), "Z + Z24");
  EXPECT_EQ(FgAbGroup(2, {2, 2, 2}).to_string(), "Z^2 + Z2^3");
  EXPECT_EQ(FgAbGroup::cyclic(1).to_string(), "0");
  GroupElement x(FgAbGroup(1, {12}, {"nu_4", "E nu'"}), {1, 23});
  EXPECT_EQ(x.to_string(), "nu_4 + 11 E nu'");
}

TEST(FgAbGroup, ElementOrders) {
  FgAbGroup g(1, {4, 12});
  EXPECT_FALSE(element_order(GroupElement(g, {1, 0, 0})).has_value());
  EXPECT_EQ(element_order(GroupElement(g, {0, 2, 3})), 4);
  EXPECT_EQ(element_order(GroupElement(g, {0, 0, 0})), 1);
  EXPECT_EQ(enumerate_torsion_part(g).size(), 48u);
  EXPECT_THROW(enumerate_torsion_part(FgAbGroup(0, {1000, 1000, 1000})), Error);
}

TEST(GroupHom, RejectsIllDefinedMatrix) {
  EXPECT_THROW(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3), Matrix{{1}}), Error);
  EXPECT_THROW(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::integers(), Matrix{{1}}), Error);
  EXPECT_NO_THROW(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), Matrix{{2}}));
  EXPECT_THROW(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), Matrix{{2, 0}}), Error);
}

TEST(GroupHom, KernelAndImageMatchEnumeration) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    FgAbGroup a = random_finite_group(rng);
    FgAbGroup b = random_finite_group(rng);
    GroupHom h = random_hom(rng, a, b);
    auto elements = enumerate_torsion_part(a);
    std::vector<GroupElement> kernel;
    std::set<std::vector<Int>> image;
    for (const auto& x : elements) {
      GroupElement y = h(x);
      if (y.is_zero()) kernel.push_back(x);
      image.insert(y.coords());
    }
    Subgroup k = hom_kernel(h);
    Subgroup im = hom_image(h);
    EXPECT_EQ(order_histogram(k.canonical_form()), order_histogram(kernel));
    EXPECT_EQ(*im.canonical_form().order(), static_cast<Int>(image.size()));
    for (const auto& x : elements) EXPECT_EQ(k.contains(x), h(x).is_zero());
    EXPECT_EQ(h.is_injective(), kernel.size() == 1);
    EXPECT_EQ(h.is_surjective(), static_cast<Int>(image.size()) == *b.order());
  }
}

TEST(GroupHom, InverseOfAutomorphism) {
  FgAbGroup g(1, {12});
  GroupHom a(g, g, Matrix{{1, 0}, {11, 11}});
  ASSERT_TRUE(a.is_bijective());
  GroupHom inv = a.inverse();
  EXPECT_EQ(compose_homs(a, inv), GroupHom::identity(g));
  EXPECT_EQ(compose_homs(inv, a), GroupHom::identity(g));
  EXPECT_THROW(GroupHom::multiplication(g, 2).inverse(), Error);
}

TEST(GroupHom, RandomAutomorphismsInvert) {
  std::mt19937_64 rng(5);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    FgAbGroup g = random_group(rng);
    GroupHom h = random_hom(rng, g, g);
    if (!h.is_bijective()) continue;
    ++found;
    EXPECT_EQ(compose_homs(h, h.inverse()), GroupHom::identity(g));
  }
  EXPECT_GT(found, 20);
}

TEST(Subgroup, CanonicalFormMatchesSearch) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 300; ++trial) {
    FgAbGroup g = random_finite_group(rng);
    std::vector<GroupElement> gens;
    for (std::size_t i = 0, n = rng() % 3; i < n; ++i) gens.push_back(random_element(rng, g));
    Subgroup s(g, gens);
    auto members = span_by_search(g, gens);
    EXPECT_EQ(order_histogram(s.canonical_form()), order_histogram(members));
    std::set<std::vector<Int>> member_set;
    for (const auto& m : members) member_set.insert(m.coords());
    for (const auto& x : enumerate_torsion_part(g)) {
      bool in = member_set.count(x.coords()) > 0;
      EXPECT_EQ(s.contains(x), in);
      if (in) {
        auto c = s.coefficients(x);
        ASSERT_TRUE(c.has_value());
        GroupElement y = GroupElement::zero(g);
        for (std::size_t i = 0; i < gens.size(); ++i) y = y + (*c)[i] * gens[i];
        EXPECT_EQ(y, x);
        EXPECT_EQ(s.inclusion()(s.to_canonical(x)), x);
      }
    }
    EXPECT_EQ(*s.quotient_group().order() * static_cast<Int>(members.size()), *g.order());
    GroupHom p = s.quotient_projection();
    EXPECT_TRUE(p.is_surjective());
    EXPECT_TRUE(hom_kernel(p).same_as(s));
    for (std::size_t i = 0; i < s.quotient_group().generator_count(); ++i)
      EXPECT_EQ(p(s.quotient_lift(i)), GroupElement::generator(s.quotient_group(), i));
  }
}

TEST(Subgroup, InfiniteAmbient) {
  FgAbGroup g(1, {12});
  Subgroup s(g, {GroupElement(g, {2, 0}), GroupElement(g, {0, 3})});
  EXPECT_EQ(s.canonical_form().to_string(), "Z + Z4");
  EXPECT_EQ(s.quotient_group().to_string(), "Z6");
  EXPECT_TRUE(s.contains(GroupElement(g, {4, 9})));
  EXPECT_FALSE(s.contains(GroupElement(g, {1, 0})));
  EXPECT_TRUE(GroupHom::identity(g).is_injective());
  Subgroup k = hom_kernel(GroupHom(g, FgAbGroup::integers(), Matrix{{3, 0}}));
  EXPECT_EQ(k.canonical_form().to_string(), "Z12");
}

TEST(Subgroup, SumImagePreimage) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 150; ++trial) {
    FgAbGroup a = random_finite_group(rng);
    FgAbGroup b = random_finite_group(rng);
    GroupHom h = random_hom(rng, a, b);
    Subgroup s(a, std::vector<GroupElement>{random_element(rng, a)});
    Subgroup t(b, std::vector<GroupElement>{random_element(rng, b)});
    Subgroup img = subgroup_image(h, s);
    Subgroup pre = subgroup_preimage(h, t);
    Subgroup sum = subgroup_sum(img, t);
    for (const auto& x : enumerate_torsion_part(a)) EXPECT_EQ(pre.contains(x), t.contains(h(x)));
    std::set<std::vector<Int>> images;
    for (const auto& x : span_by_search(a, s.generators())) images.insert(h(x).coords());
    for (const auto& y : enumerate_torsion_part(b)) {
      EXPECT_EQ(img.contains(y), images.count(y.coords()) > 0);
      bool in_sum = false;
      for (const auto& z : span_by_search(b, t.generators()))
        if (img.contains(y - z)) in_sum = true;
      EXPECT_EQ(sum.contains(y), in_sum);
    }
  }
}

TEST(DirectSum, StructureAndMaps) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    FgAbGroup a = random_group(rng);
    FgAbGroup b = random_group(rng);
    DirectSum d = direct_sum(a, b);
    EXPECT_EQ(d.group.free_rank(), a.free_rank() + b.free_rank());
    EXPECT_EQ(compose_homs(d.project_first, d.inject_first), GroupHom::identity(a));
    EXPECT_EQ(compose_homs(d.project_second, d.inject_second), GroupHom::identity(b));
    EXPECT_TRUE(compose_homs(d.project_second, d.inject_first).is_zero());
    EXPECT_TRUE(compose_homs(d.project_first, d.inject_second).is_zero());
    if (a.is_finite() && b.is_finite()) {
      Histogram expected;
      for (const auto& x : enumerate_torsion_part(a))
        for (const auto& y : enumerate_torsion_part(b))
          ++expected[checked::lcm(*element_order(x), *element_order(y))];
      EXPECT_EQ(order_histogram(d.group), expected);
    }
  }
}

TEST(DirectSum, CarriesLabelsWhenOrderOnly) {
  DirectSum d = direct_sum(FgAbGroup::cyclic(2, "eta"), FgAbGroup::integers("iota"));
  EXPECT_EQ(d.group.to_string(), "Z + Z2");
  ASSERT_TRUE(d.group.has_labels());
  EXPECT_EQ(d.group.labels(), (std::vector<std::string>{"iota", "eta"}));
}

TEST(Subquotient, InducedAutomorphism) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 150; ++trial) {
    FgAbGroup g = random_finite_group(rng);
    GroupHom h = random_hom(rng, g, g);
    // h-stable pair: numerator everything, denominator the image of h^2.
    Subgroup num = Subgroup::whole(g);
    Subgroup den = hom_image(compose_homs(h, h));
    GroupHom induced = induced_on_subquotient(h, num, den, num, den);
    FgAbGroup q = subquotient(num, den);
    EXPECT_TRUE(groups_isomorphic(induced.domain(), q));
    EXPECT_EQ(*q.order() * *den.canonical_form().order(), *g.order());
    // Compare against projecting h directly.
    GroupHom p = den.quotient_projection();
    for (const auto& x : enumerate_torsion_part(g)) {
      GroupElement px = p(x);
      EXPECT_EQ(induced(px), p(h(x)));
    }
  }
}
