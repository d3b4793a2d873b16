#include <gtest/gtest.h>

#include <cmath>

#include "parking/characters.hpp"
#include "parking/parkfn.hpp"
#include "support.hpp"

using namespace parking;
using parking::testing::desk_groups;

TEST(Characters, PredictionExamples) {
  auto g = ReflectionGroup::build(Family::A, 3);
  EXPECT_EQ(predicted_character(g, 1, g.identity(), 3), 16);
  EXPECT_EQ(predicted_character(g, 2, g.identity(), 6), 49);
  // c has eigenvalues zeta_3, zeta_3^2: each exponent-1 power appears once
  EXPECT_EQ(predicted_character(g, 1, g.coxeter_element(), 1), 4);
  EXPECT_EQ(predicted_character(g, 1, g.coxeter_element(), 3), 1);
}

TEST(Characters, PermutationCharacterMatchesDirectCount) {
  auto g = ReflectionGroup::build(Family::B, 2);
  ParkSpace park(g, 2);
  GSet s = park.to_gset();
  for (const auto& cl : g.conjugacy_classes())
    for (long d = 0; d < park.kh(); ++d) {
      long direct = 0;
      for (std::size_t p = 0; p < park.size(); ++p) direct += park.act(cl.rep, d, p) == p;
      EXPECT_EQ(permutation_character(s, cl.rep, d), direct);
    }
}

TEST(Characters, WeakConjectureGrid) {
  for (const auto& g : desk_groups())
    for (int k = 1; k <= 3; ++k) {
      if (k == 3 && g.rank() > 2) continue;
      SCOPED_TRACE(g.spec().str() + " k=" + std::to_string(k));
      auto r = verify_weak(g, k);
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.mismatches, 0u);
      EXPECT_EQ(r.rows.size(), g.conjugacy_classes().size() * k * g.coxeter_number());
    }
}

TEST(Characters, ConjugacyClassesPartitionGroup) {
  for (const auto& g : desk_groups()) {
    std::size_t total = 0;
    for (const auto& c : g.conjugacy_classes()) total += c.size;
    EXPECT_EQ(total, g.order());
    for (std::uint32_t w = 0; w < g.order(); ++w)
      for (ElementId s : g.simple_generators())
        EXPECT_EQ(g.class_of(ElementId{w}), g.class_of(g.conj(s, ElementId{w})));
  }
}

TEST(Characters, QFussCatalan) {
  EXPECT_EQ(QPolynomial::q_integer(3).coeffs(), (std::vector<long long>{1, 1, 1}));
  for (const auto& g : desk_groups())
    for (int k = 1; k <= 3; ++k) {
      SCOPED_TRACE(g.spec().str() + " k=" + std::to_string(k));
      long num = 1, den = 1;
      for (int d : g.degrees()) {
        num *= k * g.coxeter_number() + d;
        den *= d;
      }
      EXPECT_EQ(fuss_catalan(g, k), num / den);
      QPolynomial q = q_fuss_catalan(g, k);
      EXPECT_EQ(q.at_one(), num / den);
      const int kh = k * g.coxeter_number();
      for (long d = 0; d < kh; ++d) {
        cd v = q.eval(std::polar(1.0, 2.0 * M_PI * d / kh));
        EXPECT_NEAR(v.imag(), 0.0, 1e-6);
        EXPECT_EQ(q_fuss_catalan_at_root(g, k, d), std::lround(v.real()));
      }
    }
  EXPECT_THROW(QPolynomial({1, 1}).exact_div(QPolynomial({1, 0, 1})), std::exception);
}

TEST(Characters, CyclicSievingGrid) {
  for (const auto& g : desk_groups())
    for (int k = 1; k <= 3; ++k) {
      if (k == 3 && g.rank() > 2) continue;
      SCOPED_TRACE(g.spec().str() + " k=" + std::to_string(k));
      auto r = verify_csp(g, k);
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.orbits_direct, r.orbits_burnside);
      EXPECT_EQ(r.total, fuss_catalan(g, k));
      EXPECT_EQ(static_cast<int>(r.rows.size()), k * g.coxeter_number());
    }
}

TEST(Characters, CosetCharactersIndependent) {
  for (const auto& g : desk_groups()) {
    auto orbits = flat_orbits(g);
    EXPECT_EQ(coset_character_rank(g), static_cast<int>(orbits.size()));
    for (const auto& o : orbits) {
      long index = static_cast<long>(g.order() / g.parabolic_subgroup(o.front()).size());
      EXPECT_EQ(coset_character(g, o.front(), g.identity()), index);
    }
  }
}

TEST(Characters, RootPosets) {
  for (const auto& g : desk_groups()) {
    if (g.family() == Family::I2) {
      EXPECT_THROW(positive_roots(g), std::exception);
      continue;
    }
    SCOPED_TRACE(g.spec().str());
    auto roots = positive_roots(g);
    EXPECT_EQ(roots.size(), g.reflections().size());
    EXPECT_EQ(static_cast<long>(root_antichains(roots).size()), fuss_catalan(g, 1));
  }
}

TEST(Characters, KrewerasCoincidence) {
  for (auto spec : {GroupSpec{Family::A, 3}, GroupSpec{Family::A, 4}, GroupSpec{Family::A, 5}, GroupSpec{Family::B, 2},
                    GroupSpec{Family::B, 3}, GroupSpec{Family::D, 4}}) {
    SCOPED_TRACE(spec.str());
    auto g = ReflectionGroup::build(spec);
    auto r = verify_kreweras(g);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.antichains, fuss_catalan(g, 1));
    long nc = 0, nn = 0;
    for (const auto& row : r.rows) {
      EXPECT_EQ(row.noncrossing, row.nonnesting);
      nc += row.noncrossing;
      nn += row.nonnesting;
    }
    EXPECT_EQ(nc, fuss_catalan(g, 1));
    EXPECT_EQ(nn, fuss_catalan(g, 1));
  }
}
