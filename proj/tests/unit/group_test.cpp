#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "hh1/catalog.hpp"
#include "hh1/error.hpp"
#include "hh1/group.hpp"

using namespace hh1;

namespace {

std::size_t count_order(const Group& g, std::size_t k) {
  std::size_t n = 0;
  for (Elem x = 0; x < g.order(); ++x) n += g.element_order(x) == k;
  return n;
}

}  // namespace

TEST(Cayley, AcceptsZ3) {
  Group g = Group::from_cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.inv(1), 2u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(Cayley, RejectsBadTables) {
  // not a Latin square
  EXPECT_THROW(Group::from_cayley({{0, 1}, {1, 1}}), Error);
  // element 0 is not the identity
  EXPECT_THROW(Group::from_cayley({{1, 0}, {0, 1}}), Error);
  // out of range, ragged, empty
  EXPECT_THROW(Group::from_cayley({{0, 2}, {1, 0}}), Error);
  EXPECT_THROW(Group::from_cayley({{0, 1}, {1}}), Error);
  EXPECT_THROW(Group::from_cayley({}), Error);
  // Latin square with identity 0 that is not associative (order 5 loop)
  EXPECT_THROW(Group::from_cayley({{0, 1, 2, 3, 4},
                                   {1, 0, 3, 4, 2},
                                   {2, 4, 0, 1, 3},
                                   {3, 2, 4, 0, 1},
                                   {4, 3, 1, 2, 0}}),
               Error);
}

TEST(Permutations, ComposeLeftToRight) {
  // (0 1) then (1 2): 0 -> 1 -> 2
  Group g = Group::from_permutations(3, {{1, 0, 2}, {0, 2, 1}});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_THROW(Group::from_permutations(3, {{0, 0, 1}}), Error);
  EXPECT_THROW(Group::from_permutations(3, {{0, 1}}), Error);
}

TEST(Catalog, OrdersAndBasicShape) {
  EXPECT_EQ(catalog::cyclic(1).order(), 1u);
  EXPECT_EQ(catalog::cyclic(12).exponent(), 12u);
  EXPECT_EQ(catalog::elem_ab(3, 3).order(), 27u);
  EXPECT_EQ(catalog::elem_ab(3, 3).exponent(), 3u);

  const Group m = catalog::modular(3);
  EXPECT_EQ(m.order(), 27u);
  EXPECT_EQ(m.exponent(), 9u);
  EXPECT_FALSE(m.is_abelian());

  const Group c9 = catalog::c9_rtimes_c9();
  EXPECT_EQ(c9.order(), 81u);
  EXPECT_EQ(c9.exponent(), 9u);
  EXPECT_FALSE(c9.is_abelian());

  const Group d8 = catalog::dihedral(8);
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_EQ(count_order(d8, 2), 5u);
  const Group q8 = catalog::quaternion8();
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(count_order(q8, 2), 1u);
  EXPECT_EQ(count_order(q8, 4), 6u);

  const Group w = catalog::wreath_cp_cp(3);
  EXPECT_EQ(w.order(), 81u);
  EXPECT_EQ(center(w).order(), 3u);
  EXPECT_THROW(catalog::dihedral(7), Error);
  EXPECT_THROW(catalog::heisenberg(4), Error);
}

TEST(Catalog, ModularRelation) {
  // some element b of order 3 conjugates an element a of order 9 to a^4
  const Group m = catalog::modular(3);
  bool found = false;
  for (Elem a = 0; a < m.order() && !found; ++a)
    for (Elem b = 0; b < m.order() && !found; ++b)
      found = m.element_order(a) == 9 && m.element_order(b) == 3 &&
              m.conj(b, a) == m.pow(a, 4) && generated_subgroup(m, std::vector<Elem>{a, b}).order() == 27;
  EXPECT_TRUE(found);
}

TEST(Heisenberg, MatchesExplicitMatrices) {
  const Group ref = oracle::unitriangular(3);
  const Group g = catalog::heisenberg(3);
  ASSERT_EQ(ref.order(), 27u);
  for (const Group* x : {&ref, &g}) {
    EXPECT_EQ(x->exponent(), 3u);
    EXPECT_EQ(center(*x).order(), 3u);
    EXPECT_EQ(conjugacy_classes(*x).size(), 11u);
    EXPECT_EQ(oracle::class_count(*x), 11u);
    EXPECT_EQ(commutator_subgroup(*x).order(), 3u);
    EXPECT_EQ(frattini_p(*x, 3).order(), 3u);
  }
  // p = 5 as a second size
  EXPECT_EQ(catalog::heisenberg(5).order(), 125u);
  EXPECT_EQ(conjugacy_classes(catalog::heisenberg(5)).size(), oracle::class_count(oracle::unitriangular(5)));
}

TEST(Sl23, MatchesExplicitMatrices) {
  const Group ref = oracle::sl23_matrices();
  const Group g = catalog::sl23();
  for (const Group* x : {&ref, &g}) {
    EXPECT_EQ(x->order(), 24u);
    EXPECT_EQ(center(*x).order(), 2u);
    EXPECT_EQ(conjugacy_classes(*x).size(), 7u);
    EXPECT_EQ(commutator_subgroup(*x).order(), 8u);
    EXPECT_EQ(frattini_p(*x, 3).order(), 8u);  // quotient C3
    EXPECT_EQ(frattini_p(*x, 2).order(), 24u);  // no C2 quotient
    EXPECT_EQ(count_order(*x, 4), 6u);
    EXPECT_EQ(count_order(*x, 3), 8u);
    EXPECT_EQ(count_order(*x, 6), 8u);
  }
  EXPECT_FALSE(is_p_group(g, 3));
  EXPECT_FALSE(is_p_group(g, 2));
}

class Fixture : public ::testing::TestWithParam<int> {
 protected:
  static Group make(int i) {
    switch (i) {
      case 0: return catalog::heisenberg(3);
      case 1: return catalog::modular(3);
      case 2: return catalog::sl23();
      case 3: return catalog::c9_rtimes_c9();
      case 4: return catalog::dihedral(12);
      case 5: return catalog::quaternion8();
      case 6: return direct_product(catalog::cyclic(3), catalog::sl23()).group;
      default: return catalog::wreath_cp_cp(2);
    }
  }
};

TEST_P(Fixture, ClassEquationAndCentralizers) {
  const Group g = make(GetParam());
  std::size_t total = 0;
  const auto classes = conjugacy_classes(g);
  EXPECT_EQ(classes.size(), oracle::class_count(g));
  for (const auto& cls : classes) {
    total += cls.size();
    const Subgroup c = centralizer(g, cls.front());
    EXPECT_EQ(cls.size() * c.order(), g.order());
    for (Elem y : c.members()) EXPECT_EQ(g.mul(y, cls.front()), g.mul(cls.front(), y));
  }
  EXPECT_EQ(total, g.order());
}

TEST_P(Fixture, QuotientByCommutatorIsAbelianHomomorphicImage) {
  const Group g = make(GetParam());
  const Subgroup d = commutator_subgroup(g);
  EXPECT_TRUE(is_normal(g, d));
  const Quotient q = quotient(g, d);
  EXPECT_TRUE(q.group.is_abelian());
  EXPECT_EQ(q.group.order() * d.order(), g.order());
  EXPECT_TRUE(is_homomorphism(g, q.group, q.projection.images()));
  const Subgroup k = q.projection.kernel();
  EXPECT_TRUE(std::equal(k.members().begin(), k.members().end(), d.members().begin(),
                         d.members().end()));
  EXPECT_TRUE(q.projection.is_surjective());
}

TEST_P(Fixture, FrattiniQuotientIsElementaryAbelian) {
  const Group g = make(GetParam());
  for (unsigned p : {2u, 3u, 5u}) {
    const Subgroup phi = frattini_p(g, p);
    EXPECT_TRUE(is_normal(g, phi));
    const auto coords = frattini_coordinates(g, p);
    std::size_t idx = 1;
    for (std::size_t i = 0; i < coords.dim; ++i) idx *= p;
    EXPECT_EQ(idx * phi.order(), g.order());
    // q is a homomorphism onto F_p^d
    const VertexCodec codec = coords.codec();
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); y += 3)
        ASSERT_EQ(std::size_t(coords.vertex[g.mul(x, y)]),
                  codec.add(std::size_t(coords.vertex[x]), std::size_t(coords.vertex[y])));
    for (std::size_t v = 0; v < codec.size(); ++v)
      EXPECT_EQ(std::size_t(coords.vertex[coords.representative[v]]), v);
  }
}

TEST_P(Fixture, RightTransversalPicksOnePerCoset) {
  const Group g = make(GetParam());
  for (const auto& cls : conjugacy_classes(g)) {
    const Subgroup c = centralizer(g, cls.back());
    const auto t = right_transversal(g, c);
    EXPECT_EQ(t.size() * c.order(), g.order());
    EXPECT_EQ(t.front(), 0u);
    const auto labels = right_coset_labels(g, c);
    std::set<std::uint32_t> seen;
    for (Elem r : t) seen.insert(labels[r]);
    EXPECT_EQ(seen.size(), t.size());
    // Hx = Hy iff x y^-1 in H
    for (Elem x = 0; x < g.order(); x += 2)
      for (Elem y = 0; y < g.order(); y += 3)
        EXPECT_EQ(labels[x] == labels[y], c.contains(g.mul(x, g.inv(y))));
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, Fixture, ::testing::Range(0, 8));

TEST(Group, PowAndCommutator) {
  const Group g = catalog::sl23();
  for (Elem x = 0; x < g.order(); ++x) {
    EXPECT_EQ(g.pow(x, long(g.element_order(x))), 0u);
    EXPECT_EQ(g.pow(x, -1), g.inv(x));
    EXPECT_EQ(g.mul(g.pow(x, 5), g.pow(x, -2)), g.pow(x, 3));
  }
  EXPECT_EQ(g.commutator(3, 5), g.mul(g.mul(3, 5), g.mul(g.inv(3), g.inv(5))));
}

TEST(DirectProduct, ProjectionsAndInjections) {
  const Group a = catalog::cyclic(3), b = catalog::sl23();
  const DirectProduct p = direct_product(a, b);
  EXPECT_EQ(p.group.order(), 72u);
  EXPECT_TRUE(is_homomorphism(p.group, a, p.project1.images()));
  EXPECT_TRUE(is_homomorphism(p.group, b, p.project2.images()));
  EXPECT_TRUE(is_homomorphism(a, p.group, p.inject1.images()));
  EXPECT_TRUE(is_homomorphism(b, p.group, p.inject2.images()));
  EXPECT_EQ(center(p.group).order(), 6u);
  EXPECT_EQ(p.project1.kernel().order(), 24u);
}

TEST(Subgroups, GeneratedAndNormalClosure) {
  const Group g = catalog::dihedral(8);
  std::vector<Elem> refl;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2 && !center(g).contains(x)) refl.push_back(x);
  ASSERT_FALSE(refl.empty());
  const Subgroup s = generated_subgroup(g, std::vector<Elem>{refl[0]});
  EXPECT_EQ(s.order(), 2u);
  EXPECT_FALSE(is_normal(g, s));
  EXPECT_EQ(normal_closure(g, std::vector<Elem>{refl[0]}).order(), 4u);
  const auto gens = generating_set(g, Subgroup::whole(g));
  EXPECT_EQ(generated_subgroup(g, gens).order(), 8u);
  EXPECT_EQ(gens.size(), 2u);
}

TEST(Group, PrimeNotDividingOrder) {
  const Group g = catalog::heisenberg(3);
  EXPECT_EQ(frattini_p(g, 2).order(), g.order());
  EXPECT_EQ(frattini_coordinates(g, 2).dim, 0u);
  EXPECT_TRUE(is_p_group(catalog::cyclic(1), 7));
}

TEST(VertexCodec, RoundTripAndAddition) {
  const VertexCodec c(3, 3);
  EXPECT_EQ(c.size(), 27u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c.encode(c.decode(i)), i);
    for (std::size_t j = 0; j < c.size(); j += 5) {
      Vec a = c.decode(i), b = c.decode(j), s(3);
      for (int k = 0; k < 3; ++k) s[k] = Scalar((a[k] + b[k]) % 3);
      EXPECT_EQ(c.add(i, j), c.encode(s));
    }
    EXPECT_EQ(c.scale(2, c.scale(2, i)), i);
  }
  // lexicographic: the first coordinate is most significant
  EXPECT_EQ(c.encode(Vec{1, 0, 0}), 9u);
  EXPECT_EQ(c.encode(Vec{0, 0, 1}), 1u);
}
