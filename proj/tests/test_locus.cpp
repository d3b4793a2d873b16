#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "parking/characters.hpp"
#include "parking/hsop.hpp"
#include "parking/linalg.hpp"
#include "parking/locus.hpp"
#include "support.hpp"

using namespace parking;

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

LocusSolution sampled_locus(const ReflectionGroup& g, int k, std::uint64_t seed, PolynomialMap* out = nullptr) {
  auto theta = sample_theta(hom_basis_bruteforce(g, k), seed);
  if (out) *out = theta;
  TrackerConfig cfg;
  cfg.seed = seed;
  return solve_homotopy(g, theta, k, cfg);
}

}  // namespace

TEST(Locus, RankOneDiagonalIsRootsOfUnityAndZero) {
  auto g = ReflectionGroup::build(Family::A, 2);
  for (int k = 1; k <= 4; ++k) {
    auto sol = solve_diagonal(g, k);
    const int kh = 2 * k;
    ASSERT_EQ(sol.size(), static_cast<std::size_t>(kh + 1));
    EXPECT_TRUE(sol.certified);
    std::size_t origins = 0;
    for (const auto& p : sol.points) {
      origins += p.origin;
      double r = std::abs(p.x(0));
      EXPECT_TRUE(r < 1e-14 || std::abs(r - 1.0) < 1e-12);
      if (r > 0.5) EXPECT_LT(std::abs(std::pow(p.x(0), kh) - 1.0), 1e-10);
    }
    EXPECT_EQ(origins, 1u);
  }
}

TEST(Locus, DiagonalSizesAndCharacters) {
  for (auto spec : {GroupSpec{Family::B, 2}, GroupSpec{Family::I2, 5}, GroupSpec{Family::B, 3}, GroupSpec{Family::D, 4},
                    GroupSpec{Family::I2, 6}}) {
    auto g = ReflectionGroup::build(spec);
    SCOPED_TRACE(spec.str());
    auto sol = solve_diagonal(g, 1);
    EXPECT_EQ(sol.size(), static_cast<std::size_t>(ipow(g.coxeter_number() + 1, g.rank())));
    EXPECT_TRUE(sol.certified) << sol.failure;
    TrackerConfig cfg;
    ASSERT_TRUE(build_action_table(g, sol, cfg));
    GSet s = locus_gset(g, sol);
    EXPECT_TRUE(s.is_action());
    EXPECT_TRUE(compare_with_prediction(s).pass);
  }
  EXPECT_EQ(solve_diagonal(ReflectionGroup::build(Family::B, 2), 1).size(), 25u);
  EXPECT_EQ(solve_diagonal(ReflectionGroup::build(Family::I2, 5), 1).size(), 36u);
  EXPECT_THROW(solve_diagonal(ReflectionGroup::build(Family::A, 3), 1), ConfigError);
}

TEST(Locus, HomotopyCountsAndCertificates) {
  for (auto [letters, k, expected] : {std::tuple{3, 1, 16}, std::tuple{3, 2, 49}, std::tuple{4, 1, 125}}) {
    auto g = ReflectionGroup::build(Family::A, letters);
    SCOPED_TRACE("letters=" + std::to_string(letters) + " k=" + std::to_string(k));
    PolynomialMap theta = PolynomialMap::zero(1, 1);
    auto sol = sampled_locus(g, k, 3, &theta);
    ASSERT_TRUE(sol.certified) << sol.failure;
    EXPECT_EQ(sol.size(), static_cast<std::size_t>(expected));
    EXPECT_EQ(sol.expected, static_cast<std::size_t>(expected));
    EXPECT_LT(sol.max_residual, 1e-10);
    EXPECT_GT(sol.min_separation, 1e-6);
    CompiledMap f(theta);
    for (const auto& p : sol.points) EXPECT_LT((f.eval(p.x) - p.x).norm(), 1e-10);
    PointMatcher m(sol.points);
    for (std::size_t i = 0; i < sol.size(); ++i) EXPECT_EQ(m.match(sol.points[i].x, 1e-8, 1e-6), static_cast<long>(i));
  }
}

TEST(Locus, HomotopyReproducesDiagonalLocus) {
  auto g = ReflectionGroup::build(Family::B, 2);
  auto theta = diagonal_hsop(g, 1);
  TrackerConfig cfg;
  auto tracked = solve_homotopy(g, theta, 1, cfg);
  auto exact = solve_diagonal(g, 1);
  ASSERT_TRUE(tracked.certified) << tracked.failure;
  ASSERT_EQ(tracked.size(), exact.size());
  PointMatcher m(exact.points);
  std::set<long> hit;
  for (const auto& p : tracked.points) {
    long j = m.match(p.x, 1e-8, 1e-6);
    EXPECT_GE(j, 0);
    hit.insert(j);
  }
  EXPECT_EQ(hit.size(), exact.size());
}

TEST(Locus, SampledLocusIsParkingSpace) {
  auto g = ReflectionGroup::build(Family::A, 3);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto sol = sampled_locus(g, 1, seed);
    ASSERT_TRUE(sol.certified);
    TrackerConfig cfg;
    ASSERT_TRUE(build_action_table(g, sol, cfg));
    GSet s = locus_gset(g, sol);
    EXPECT_TRUE(compare_with_prediction(s).pass);
    ParkSpace park(g, 1);
    EXPECT_TRUE(build_equivariant_bijection(park.to_gset(), s).success);
    for (std::size_t p = 0; p < sol.size(); ++p) {
      auto h = stabilizer_of_point(g, s, sol, p);
      EXPECT_TRUE(h.matches_bruteforce);
      EXPECT_EQ(h.x, point_flat(g, sol.points[p].x));
    }
  }
}

TEST(Locus, SubspaceFixedCounts) {
  auto g = ReflectionGroup::build(Family::A, 3);
  auto sol = sampled_locus(g, 1, 7);
  ASSERT_TRUE(sol.certified);
  const int kh = g.coxeter_number();
  for (FlatId x : g.intersection_lattice())
    for (std::uint32_t w = 0; w < g.order(); ++w)
      for (long d = 0; d < kh; ++d) {
        int dim = g.eigenspace_intersection_dim(x, ElementId{w}, d, 1);
        EXPECT_EQ(subspace_fixed_count(g, sol, x, ElementId{w}, d), ipow(kh + 1, dim));
      }
  auto b2 = ReflectionGroup::build(Family::B, 2);
  auto diag = solve_diagonal(b2, 1);
  EXPECT_EQ(subspace_fixed_count(b2, diag, b2.whole_space(), b2.identity(), 0), 25);
  EXPECT_EQ(subspace_fixed_count(b2, diag, b2.origin(), b2.identity(), 0), 1);
}

TEST(Locus, TransportIdentityAndSeeds) {
  auto g = ReflectionGroup::build(Family::A, 3);
  PolynomialMap t0 = PolynomialMap::zero(1, 1), t1 = PolynomialMap::zero(1, 1);
  auto s0 = sampled_locus(g, 1, 11, &t0);
  auto s1 = sampled_locus(g, 1, 12, &t1);
  TrackerConfig cfg;
  ASSERT_TRUE(build_action_table(g, s0, cfg));
  ASSERT_TRUE(build_action_table(g, s1, cfg));

  auto same = transport_action(g, t0, s0, t0, s0, 8, cfg);
  ASSERT_TRUE(same.success) << same.failure;
  for (std::size_t i = 0; i < same.map.size(); ++i) EXPECT_EQ(same.map[i], i);

  auto r = transport_action(g, t0, s0, t1, s1, 16, cfg);
  ASSERT_TRUE(r.success) << r.failure;
  EXPECT_TRUE(r.equivariant);
  EXPECT_TRUE(r.profiles_match);
  EXPECT_EQ(std::set<std::uint32_t>(r.map.begin(), r.map.end()).size(), s0.size());
  EXPECT_GT(r.min_path_distance, 0.0);
}

TEST(Locus, TransportFromDiagonal) {
  auto g = ReflectionGroup::build(Family::B, 2);
  auto t0 = diagonal_hsop(g, 1);
  auto noise = sample_theta(hom_basis_bruteforce(g, 1), 5);
  PolynomialMap t1 = PolynomialMap::from_coefficients(2, 5, t0.coefficient_vector() + 0.3 * noise.coefficient_vector());
  TrackerConfig cfg;
  auto s0 = solve_diagonal(g, 1);
  auto s1 = solve_homotopy(g, t1, 1, cfg);
  ASSERT_TRUE(s1.certified) << s1.failure;
  ASSERT_TRUE(build_action_table(g, s0, cfg));
  ASSERT_TRUE(build_action_table(g, s1, cfg));
  auto r = transport_action(g, t0, s0, t1, s1, 12, cfg);
  EXPECT_TRUE(r.success) << r.failure;
  EXPECT_TRUE(r.equivariant);
}

TEST(Locus, HeuristicRejectsDegenerateMaps) {
  auto g = ReflectionGroup::build(Family::A, 3);
  TrackerConfig cfg;
  auto good = regular_sequence_heuristic(g, sample_theta(hom_basis_bruteforce(g, 1), 2), 1, cfg);
  EXPECT_TRUE(good.accept) << good.reason;
  EXPECT_EQ(good.points, 16u);
  auto zero = regular_sequence_heuristic(g, PolynomialMap::zero(2, 4), 1, cfg);
  EXPECT_FALSE(zero.accept);
  EXPECT_FALSE(zero.reason.empty());
}

TEST(Locus, ParallelTrackingMatchesSerial) {
  auto g = ReflectionGroup::build(Family::A, 4);
  auto theta = sample_theta(hom_basis_bruteforce(g, 1), 9);
  CompiledMap f(theta);
  TotalDegreeHomotopy h(f, std::polar(1.0, 0.7));
  auto starts = total_degree_starts(3, 5);
  ASSERT_EQ(starts.size(), 125u);
  TrackerConfig cfg;
  auto a = track_all(h, starts, 0.0, 1.0, cfg);
  auto b = track_all_serial(h, starts, 0.0, 1.0, cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ok, b[i].ok);
    EXPECT_EQ(a[i].steps, b[i].steps);
    if (a[i].ok) EXPECT_EQ(a[i].x, b[i].x);
  }
}

TEST(Locus, ShapeMismatchRejected) {
  auto g = ReflectionGroup::build(Family::A, 3);
  TrackerConfig cfg;
  EXPECT_THROW(solve_homotopy(g, PolynomialMap::zero(3, 4), 1, cfg), ConfigError);
}

TEST(Locus, TransportDiagonalToComplexRescaling) {
  auto g = ReflectionGroup::build(Family::B, 2);
  auto t0 = diagonal_hsop(g, 1);
  auto t1 = t0.scaled(cd(1.0, 0.1));
  TrackerConfig cfg;
  auto s0 = solve_diagonal(g, 1);
  auto s1 = solve_homotopy(g, t1, 1, cfg);
  ASSERT_TRUE(s1.certified) << s1.failure;
  ASSERT_TRUE(build_action_table(g, s0, cfg));
  ASSERT_TRUE(build_action_table(g, s1, cfg));
  auto r = transport_action(g, t0, s0, t1, s1, 10, cfg);
  ASSERT_TRUE(r.success) << r.failure;
  EXPECT_TRUE(r.equivariant);
  EXPECT_TRUE(r.profiles_match);
  for (std::size_t i = 0; i < s0.size(); ++i) EXPECT_EQ(s0.points[i].origin, s1.points[r.map[i]].origin);
}
