#include <gtest/gtest.h>

#include <cmath>

#include "hh1/catalog.hpp"
#include "hh1/error.hpp"
#include "hh1/loewy.hpp"

using namespace hh1;

// Jennings: ll(kP) = 1 + (p - 1) sum_i i * d_i with d_i the rank of the i-th
// Jennings quotient. The d_i below are worked out by hand for each group.
TEST(Loewy, JenningsValues) {
  struct Case {
    Group g;
    unsigned p;
    std::size_t ll;
  };
  const std::vector<Case> cases{
      {catalog::cyclic(2), 2, 2},          // d1 = 1
      {catalog::cyclic(3), 3, 3},          // d1 = 1
      {catalog::cyclic(5), 5, 5},          // d1 = 1
      {catalog::cyclic(9), 3, 9},          // d1 = d3 = 1
      {catalog::elem_ab(3, 2), 3, 5},      // d1 = 2
      {catalog::elem_ab(2, 2), 2, 3},      // d1 = 2
      {catalog::heisenberg(3), 3, 9},      // d1 = 2, d2 = 1
      {catalog::modular(3), 3, 11},        // d1 = 2, d3 = 1
      {catalog::c9_rtimes_c9(), 3, 17},    // d1 = 2, d3 = 2
      {catalog::dihedral(8), 2, 5},        // d1 = 2, d2 = 1
      {catalog::quaternion8(), 2, 5},      // d1 = 2, d2 = 1
  };
  for (const auto& c : cases) EXPECT_EQ(loewy(c.g, c.p).loewy_length, c.ll) << c.g.order();
}

TEST(Loewy, FiltrationAgreesWithJennings) {
  const std::vector<std::pair<Group, unsigned>> cases{
      {catalog::cyclic(27), 3},        {catalog::elem_ab(3, 3), 3},
      {catalog::heisenberg(3), 3},     {catalog::modular(3), 3},
      {catalog::c9_rtimes_c9(), 3},    {catalog::wreath_cp_cp(3), 3},
      {catalog::dihedral(16), 2},      {catalog::quaternion8(), 2},
      {catalog::wreath_cp_cp(2), 2},   {catalog::heisenberg(5), 5},
      {catalog::elem_ab(2, 5), 2},     {direct_product(catalog::heisenberg(3), catalog::cyclic(9)).group, 3},
  };
  for (const auto& [g, p] : cases)
    EXPECT_EQ(loewy(g, p).loewy_length, jennings_loewy_length(g, p)) << g.order();
}

TEST(Loewy, JenningsAddsOverProducts) {
  // ll(k(P x Q)) = ll(kP) + ll(kQ) - 1
  const Group ut = catalog::heisenberg(3), m = catalog::modular(3);
  EXPECT_EQ(jennings_loewy_length(direct_product(ut, m).group, 3), 9u + 11u - 1u);
}

TEST(Loewy, FiltrationShape) {
  const RadicalFiltration r = loewy(catalog::modular(3), 3);
  ASSERT_GE(r.dims.size(), 3u);
  EXPECT_EQ(r.dims[0], 27u);
  EXPECT_EQ(r.dims[1], 26u);
  EXPECT_EQ(r.dims.back(), 0u);
  for (std::size_t i = 1; i < r.dims.size(); ++i) EXPECT_LT(r.dims[i], r.dims[i - 1]);
  EXPECT_EQ(r.loewy_length, r.dims.size() - 1);
}

TEST(Loewy, TrivialGroup) {
  const RadicalFiltration r = loewy(catalog::cyclic(1), 3);
  EXPECT_EQ(r.loewy_length, 1u);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{1, 0}));
}

TEST(Loewy, PowersMultiplyIntoHigherPowers) {
  const Group g = catalog::heisenberg(3);
  const Fp f(3);
  const RadicalFiltration r = loewy(g, 3, true);
  const std::size_t ll = r.loewy_length;
  ASSERT_EQ(r.powers.size(), ll + 1);
  for (std::size_t n = 1; n < ll; ++n)
    for (std::size_t m = 1; n + m <= ll && m < 4; ++m) {
      const auto bn = r.powers[n].basis(), bm = r.powers[m].basis();
      for (std::size_t i = 0; i < bn.size(); i += 3)
        for (std::size_t j = 0; j < bm.size(); j += 5)
          ASSERT_TRUE(r.powers[n + m].contains(group_algebra_product(g, f, bn[i], bm[j])));
    }
}

TEST(Loewy, CyclicNilpotencyIndexDirectly) {
  // (g - 1)^{p-1} != 0 and (g - 1)^p = 0 in kC_p
  const Group g = catalog::cyclic(5);
  const Fp f(5);
  Vec x(5, 0);
  x[0] = f.neg(1);
  x[1] = 1;  // element 1 generates
  Vec acc = x;
  for (int k = 2; k <= 4; ++k) acc = group_algebra_product(g, f, acc, x);
  EXPECT_FALSE(is_zero(acc));
  acc = group_algebra_product(g, f, acc, x);
  EXPECT_TRUE(is_zero(acc));
}

TEST(Loewy, RefusesNonPGroups) {
  try {
    loewy(catalog::sl23(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(DlUpperBound, Arithmetic) {
  EXPECT_DOUBLE_EQ(dl_upper_bound(3, 1), 2.0);
  EXPECT_DOUBLE_EQ(dl_upper_bound(2, 0), 0.0);
  EXPECT_DOUBLE_EQ(dl_upper_bound(9, 1), 4.0);
  EXPECT_DOUBLE_EQ(dl_upper_bound(11, 2), std::log2(10.0) + 2);
  EXPECT_THROW(dl_upper_bound(1, 0), Error);
}
