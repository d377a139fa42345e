#include <set>

#include <gtest/gtest.h>

#include "ringelhall/errors.hpp"
#include "ringelhall/gkm.hpp"

using namespace ringelhall;

namespace {

using Matrix = std::vector<std::vector<int>>;

CartanMatrix cartan_of(const Quiver& q) { return cartan_from_datum(datum_from_quiver(q)); }

std::vector<IntVec> vecs(const std::vector<Root>& roots, RootKind kind) {
  std::vector<IntVec> out;
  for (const Root& r : roots)
    if (r.kind == kind) out.push_back(r.vec);
  return out;
}

}  // namespace

TEST(Gkm, DatumFromEulerForm) {
  EXPECT_EQ(datum_from_quiver(Quiver::a2()).form, (Matrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(datum_from_quiver(Quiver::jordan()).form, (Matrix{{0}}));
  EXPECT_EQ(datum_from_quiver(Quiver::kronecker()).form, (Matrix{{2, -2}, {-2, 2}}));
  ClassTable t(Quiver::kronecker(), GroundField(2), Region{{1, 1}, {}});
  EXPECT_EQ(datum_from_table(t).form, datum_from_quiver(Quiver::kronecker()).form);
}

TEST(Gkm, CartanMatrices) {
  auto a2 = cartan_of(Quiver::a2());
  EXPECT_EQ(a2.c, (Matrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(a2.eps, (std::vector<int>{1, 1}));
  auto j = cartan_of(Quiver::jordan());
  EXPECT_EQ(j.c, (Matrix{{0}}));
  EXPECT_EQ(j.eps, (std::vector<int>{1}));
  auto k = cartan_of(Quiver::kronecker());
  EXPECT_EQ(k.c, (Matrix{{2, -2}, {-2, 2}}));
  EXPECT_EQ(k.eps, (std::vector<int>{1, 1}));
}

TEST(Gkm, MixedRealAndImaginary) {
  // vertex 1 carries two loops: (1,1) = 2(1 - 2) = -2
  const Quiver q(2, {{0, 0}, {0, 0}, {0, 1}});
  auto c = cartan_of(q);
  EXPECT_EQ(c.datum.form, (Matrix{{-2, -1}, {-1, 2}}));
  EXPECT_EQ(c.c, (Matrix{{-2, -1}, {-1, 2}}));
  EXPECT_EQ(c.real_indices(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(c.imaginary_indices(), (std::vector<std::size_t>{0}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(c.eps[i] * c.c[i][k], c.eps[k] * c.c[k][i]);
}

TEST(Gkm, SymmetrizersForUnequalDiagonal) {
  BorcherdsDatum d{{{2, -2}, {-2, 4}}};
  auto c = cartan_from_datum(d);
  EXPECT_EQ(c.c, (Matrix{{2, -2}, {-1, 2}}));
  EXPECT_EQ(c.eps[0] * c.c[0][1], c.eps[1] * c.c[1][0]);
}

TEST(Gkm, DatumValidation) {
  EXPECT_THROW((BorcherdsDatum{{{2, 1}, {1, 2}}}.validate()), InternalError);
  EXPECT_THROW((BorcherdsDatum{{{2, -1}, {-2, 2}}}.validate()), InternalError);
  EXPECT_THROW((BorcherdsDatum{{{4, -1}, {-1, 2}}}.validate()), InternalError);
  EXPECT_NO_THROW((BorcherdsDatum{{{2, -3}, {-3, 2}}}.validate()));
  EXPECT_NO_THROW((BorcherdsDatum{{{0, -1}, {-1, 2}}}.validate()));
}

TEST(Gkm, Reflections) {
  auto a2 = cartan_of(Quiver::a2());
  EXPECT_EQ(reflect(a2, 0, {1, 0}), (IntVec{-1, 0}));
  EXPECT_EQ(reflect(a2, 0, {0, 1}), (IntVec{1, 1}));
  auto k = cartan_of(Quiver::kronecker());
  EXPECT_EQ(reflect(k, 0, {0, 1}), (IntVec{2, 1}));
  EXPECT_EQ(reflect(k, 1, reflect(k, 1, {3, 5})), (IntVec{3, 5}));
  EXPECT_THROW(reflect(cartan_of(Quiver::jordan()), 0, {1}), DomainError);
}

TEST(Gkm, FundamentalRegion) {
  EXPECT_TRUE(fundamental_region(cartan_of(Quiver::a2()), 4).empty());
  EXPECT_EQ(fundamental_region(cartan_of(Quiver::jordan()), 3), (std::vector<IntVec>{{1}}));
  EXPECT_EQ(fundamental_region(cartan_of(Quiver::kronecker()), 4), (std::vector<IntVec>{{1, 1}, {2, 2}}));
}

TEST(Gkm, PositiveRoots) {
  auto a2 = positive_roots(cartan_of(Quiver::a2()), 3);
  EXPECT_EQ(vecs(a2, RootKind::real), (std::vector<IntVec>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(vecs(a2, RootKind::imaginary).empty());

  auto k = positive_roots(cartan_of(Quiver::kronecker()), 5);
  EXPECT_EQ(vecs(k, RootKind::real), (std::vector<IntVec>{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(vecs(k, RootKind::imaginary), (std::vector<IntVec>{{1, 1}, {2, 2}}));
  EXPECT_EQ(k.size(), 8u);

  auto j = positive_roots(cartan_of(Quiver::jordan()), 3);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].vec, (IntVec{1}));
  EXPECT_EQ(j[0].kind, RootKind::imaginary);
}

TEST(Gkm, WeylOrbits) {
  auto j = cartan_of(Quiver::jordan());
  EXPECT_EQ(weyl_orbit(j, imaginary_multiples(j, 4), 4), (std::vector<IntVec>{{2}, {3}, {4}}));
  EXPECT_TRUE(weyl_orbit(j, {}, 4).empty());
  auto k = cartan_of(Quiver::kronecker());
  EXPECT_TRUE(imaginary_multiples(k, 6).empty());
  EXPECT_TRUE(weyl_orbit(k, imaginary_multiples(k, 6), 6).empty());
}

TEST(Gkm, RootsAreReflectionStable) {
  const Quiver mixed(3, {{0, 1}, {1, 2}, {2, 2}, {2, 2}});
  for (const Quiver& quiver : {Quiver::a2(), Quiver::kronecker(), mixed}) {
    auto c = cartan_of(quiver);
    const int h = 7;
    auto roots = positive_roots(c, h);
    std::set<IntVec> all;
    for (const Root& r : roots) all.insert(r.vec);
    for (const Root& r : roots)
      for (std::size_t i : c.real_indices()) {
        IntVec s = reflect(c, i, r.vec);
        const bool negative_simple = s == -unit_vector(c.size(), i);
        EXPECT_TRUE(all.contains(s) || negative_simple || height(s) > h) << to_string(r.vec) << " by " << i;
      }
  }
}

TEST(Gkm, NegativeRootsBySignFlip) {
  auto pos = positive_roots(cartan_of(Quiver::kronecker()), 4);
  auto neg = negative_roots(pos);
  ASSERT_EQ(neg.size(), pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    EXPECT_EQ(neg[k].vec, -pos[k].vec);
    EXPECT_EQ(neg[k].kind, pos[k].kind);
    EXPECT_FALSE(neg[k].positive);
  }
}
