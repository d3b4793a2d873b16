#include <gtest/gtest.h>

#include "parking/hsop.hpp"
#include "parking/linalg.hpp"
#include "support.hpp"

using namespace parking;
using parking::testing::desk_groups;

namespace {

int span_rank(const std::vector<PolynomialMap>& maps) {
  if (maps.empty()) return 0;
  CVec first = maps.front().coefficient_vector();
  CMat m(first.size(), static_cast<Eigen::Index>(maps.size()));
  for (std::size_t i = 0; i < maps.size(); ++i) m.col(i) = maps[i].coefficient_vector();
  return numeric_rank(m);
}

bool is_odd_dihedral_or_not_dihedral(const ReflectionGroup& g) {
  return g.family() != Family::I2 || g.m() % 2 == 1;
}

}  // namespace

TEST(Hsop, FormulaExamples) {
  for (int m = 3; m <= 12; ++m)
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(hom_dim_formula(ReflectionGroup::build(Family::I2, m), k), k + 1);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(hom_dim_formula(ReflectionGroup::build(Family::A, 2), k), 1);
  EXPECT_EQ(hom_dim_formula(ReflectionGroup::build(Family::B, 2), 1), 3);
}

TEST(Hsop, BruteForceMatchesCharacterComputation) {
  for (const auto& g : desk_groups())
    for (int k = 1; k <= 3; ++k) {
      if (k == 3 && g.rank() > 2) continue;
      SCOPED_TRACE(g.spec().str() + " k=" + std::to_string(k));
      auto space = hom_basis_bruteforce(g, k);
      EXPECT_EQ(space.dim, hom_dim_character(g, k));
      EXPECT_EQ(space.dim, hom_dim_corrected(g, k));
      if (g.family() != Family::D && is_odd_dihedral_or_not_dihedral(g)) EXPECT_EQ(space.dim, hom_dim_formula(g, k));
    }
}

// the printed B/D and I2 counts miss maps that the linear solve finds
TEST(Hsop, PrintedFormulaUndercountsDAndEvenDihedral) {
  auto d4 = ReflectionGroup::build(Family::D, 4);
  EXPECT_EQ(hom_dim_formula(d4, 1), 7);
  EXPECT_EQ(hom_basis_bruteforce(d4, 1).dim, 11);
  auto b2 = ReflectionGroup::build(Family::B, 2), i4 = ReflectionGroup::build(Family::I2, 4);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(hom_basis_bruteforce(i4, k).dim, hom_basis_bruteforce(b2, k).dim);
    EXPECT_EQ(hom_basis_bruteforce(i4, k).dim, 2 * k + 1);
  }
  // theta_i = prod_{j != i} x_j (sum x_j^2)^2 commutes with even sign changes but not with B4
  PolynomialMap t = PolynomialMap::zero(4, 7);
  auto space = hom_basis_bruteforce(d4, 1);
  for (int i = 0; i < 4; ++i)
    for (const auto& e : monomials_of_degree(4, 4)) {
      bool even = true;
      for (int a : e) even = even && a % 2 == 0;
      if (!even) continue;
      std::vector<int> half(4);
      long multinomial = 2;  // 2!
      for (int j = 0; j < 4; ++j) {
        half[j] = e[j] / 2;
        for (int f = 2; f <= half[j]; ++f) multinomial /= f;
      }
      Exponent full = e;
      for (int j = 0; j < 4; ++j)
        if (j != i) ++full[j];
      t.coords[i][full] += static_cast<double>(multinomial);
    }
  EXPECT_LT(equivariance_error(d4, t, 3), 1e-9);
  EXPECT_TRUE(space_contains(space, t));
  EquivariantMapSpace printed{explicit_generators(d4, 1), 7, 7};
  EXPECT_FALSE(space_contains(printed, t));
}

TEST(Hsop, BasisProperties) {
  for (const auto& g : desk_groups())
    for (int k = 1; k <= 2; ++k) {
      SCOPED_TRACE(g.spec().str() + " k=" + std::to_string(k));
      auto space = hom_basis_bruteforce(g, k);
      EXPECT_EQ(space.degree, k * g.coxeter_number() + 1);
      EXPECT_EQ(span_rank(space.basis), space.dim);
      for (const auto& b : space.basis) {
        EXPECT_TRUE(b.is_homogeneous());
        EXPECT_EQ(b.degree, space.degree);
        EXPECT_EQ(b.vars, g.rank());
        EXPECT_LT(equivariance_error(g, b, 17, 32), 1e-10);
      }
    }
}

TEST(Hsop, RankOneAndDihedralSpans) {
  auto a1 = ReflectionGroup::build(Family::A, 2);
  auto space = hom_basis_bruteforce(a1, 3);
  ASSERT_EQ(space.dim, 1);
  ASSERT_EQ(space.basis[0].coords[0].size(), 1u);
  EXPECT_EQ(space.basis[0].coords[0].begin()->first, (Exponent{7}));

  auto i5 = ReflectionGroup::build(Family::I2, 5);
  for (int k = 1; k <= 3; ++k) {
    auto sp = hom_basis_bruteforce(i5, k);
    auto gens = explicit_generators(i5, k);
    EXPECT_EQ(static_cast<int>(gens.size()), k + 1);
    for (const auto& t : gens) EXPECT_TRUE(space_contains(sp, t));
    EXPECT_EQ(span_rank(gens), sp.dim);
  }
}

TEST(Hsop, ExplicitGeneratorsContained) {
  for (auto spec : {GroupSpec{Family::B, 2}, GroupSpec{Family::B, 3}, GroupSpec{Family::D, 4}, GroupSpec{Family::I2, 6}})
    for (int k = 1; k <= 2; ++k) {
      auto g = ReflectionGroup::build(spec);
      SCOPED_TRACE(spec.str() + " k=" + std::to_string(k));
      auto space = hom_basis_bruteforce(g, k);
      auto gens = explicit_generators(g, k);
      EXPECT_EQ(static_cast<long>(gens.size()), hom_dim_formula(g, k));
      EXPECT_EQ(span_rank(gens), static_cast<int>(gens.size()));
      for (const auto& t : gens) {
        EXPECT_LT(equivariance_error(g, t, 5), 1e-9);
        EXPECT_TRUE(space_contains(space, t));
      }
    }
  EXPECT_THROW(explicit_generators(ReflectionGroup::build(Family::A, 3), 1), ConfigError);
}

TEST(Hsop, DiagonalMaps) {
  auto b2 = ReflectionGroup::build(Family::B, 2);
  auto t = diagonal_hsop(b2, 1);
  EXPECT_EQ(t.degree, 5);
  EXPECT_EQ(t.coords[0].begin()->first, (Exponent{5, 0}));
  EXPECT_EQ(t.coords[1].begin()->first, (Exponent{0, 5}));
  EXPECT_EQ(diagonal_hsop(ReflectionGroup::build(Family::D, 4), 1).degree, 7);
  EXPECT_EQ(diagonal_hsop(ReflectionGroup::build(Family::D, 4), 2).degree, 13);
  EXPECT_EQ(diagonal_hsop(ReflectionGroup::build(Family::I2, 5), 2).degree, 11);
  for (auto spec : {GroupSpec{Family::B, 2}, GroupSpec{Family::B, 3}, GroupSpec{Family::D, 4}, GroupSpec{Family::I2, 5},
                    GroupSpec{Family::A, 2}}) {
    auto g = ReflectionGroup::build(spec);
    auto d = diagonal_hsop(g, 1);
    EXPECT_LT(equivariance_error(g, d, 9), 1e-12);
    EXPECT_TRUE(space_contains(hom_basis_bruteforce(g, 1), d));
  }
  EXPECT_THROW(diagonal_hsop(ReflectionGroup::build(Family::A, 3), 1), ConfigError);
}

TEST(Hsop, SamplingDeterministicAndEquivariant) {
  auto g = ReflectionGroup::build(Family::A, 4);
  auto space = hom_basis_bruteforce(g, 1);
  auto a = sample_theta(space, 42), b = sample_theta(space, 42), c = sample_theta(space, 43);
  EXPECT_EQ(a.coefficient_vector(), b.coefficient_vector());
  EXPECT_GT((a.coefficient_vector() - c.coefficient_vector()).norm(), 1e-3);
  EXPECT_LT(equivariance_error(g, a, 1), 1e-10);
  EXPECT_TRUE(space_contains(space, a));
  EXPECT_FALSE(space_contains(space, PolynomialMap::from_coefficients(
                                         3, 5, CVec::Ones(a.coefficient_vector().size()))));
}
