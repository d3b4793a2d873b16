#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "parking/parkfn.hpp"
#include "support.hpp"

using namespace parking;
using parking::testing::desk_groups;
using parking::testing::perm;

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int cycle_count(const std::vector<int>& images) {
  std::vector<bool> seen(images.size(), false);
  int c = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = images[j]) seen[j] = true;
  }
  return c;
}

}  // namespace

TEST(Park, SizeIsKhPlusOneToTheRank) {
  EXPECT_EQ(ParkSpace(ReflectionGroup::build(Family::A, 3), 1).size(), 16u);
  EXPECT_EQ(ParkSpace(ReflectionGroup::build(Family::B, 2), 1).size(), 25u);
  EXPECT_EQ(ParkSpace(ReflectionGroup::build(Family::I2, 5), 1).size(), 36u);
  for (const auto& g : desk_groups())
    for (int k = 1; k <= 3; ++k) {
      if (g.order() * ipow(k * g.coxeter_number() + 1, g.rank()) > 4000000) continue;
      SCOPED_TRACE(g.spec().str() + " k=" + std::to_string(k));
      ParkSpace park(g, k);
      EXPECT_EQ(park.size(), ipow(k * g.coxeter_number() + 1, g.rank()));
      std::set<NCParkingFunction> distinct;
      for (std::size_t i = 0; i < park.size(); ++i) {
        const auto& p = park.element(i);
        distinct.insert(p);
        EXPECT_EQ(park.coset_rep(park.flat_chain(i).flats.front(), p.rep), p.rep);
        EXPECT_EQ(park.index_of(p.rep, p.chain), i);
      }
      EXPECT_EQ(distinct.size(), park.size());
    }
}

TEST(Park, CosetEquivalence) {
  auto g = ReflectionGroup::build(Family::A, 4);
  ParkSpace park(g, 1);
  for (std::size_t i = 0; i < park.size(); ++i) {
    const auto& p = park.element(i);
    FlatId x1 = park.flat_chain(i).flats.front();
    for (ElementId u : g.parabolic_subgroup(x1)) EXPECT_EQ(park.index_of(g.mul(p.rep, u), p.chain), i);
  }
}

TEST(Park, GroupActionAxioms) {
  for (auto spec : {GroupSpec{Family::A, 3}, GroupSpec{Family::A, 4}, GroupSpec{Family::B, 2}, GroupSpec{Family::I2, 5}})
    for (int k = 1; k <= 2; ++k) {
      auto g = ReflectionGroup::build(spec);
      SCOPED_TRACE(spec.str() + " k=" + std::to_string(k));
      ParkSpace park(g, k);
      const int kh = park.kh();
      for (std::size_t p = 0; p < park.size(); ++p) {
        EXPECT_EQ(park.act(g.identity(), 0, p), p);
        EXPECT_EQ(park.act(g.identity(), kh, p), p);
      }
      std::mt19937_64 rng(5);
      for (int t = 0; t < 1000; ++t) {
        ElementId v1{static_cast<std::uint32_t>(rng() % g.order())}, v2{static_cast<std::uint32_t>(rng() % g.order())};
        long j1 = rng() % kh, j2 = rng() % kh;
        std::size_t p = rng() % park.size();
        EXPECT_EQ(park.act(v2, j2, park.act(v1, j1, p)), park.act(g.mul(v2, v1), j1 + j2, p));
      }
      GSet s = park.to_gset();
      EXPECT_TRUE(s.is_action());
      for (std::size_t p = 0; p < park.size(); p += 7)
        EXPECT_EQ(s.act(ElementId{3 % static_cast<std::uint32_t>(g.order())}, 1, p),
                  park.act(ElementId{3 % static_cast<std::uint32_t>(g.order())}, 1, p));
    }
}

TEST(Park, ExtremeStabilizers) {
  for (const auto& g : desk_groups()) {
    ParkSpace park(g, 1);
    std::size_t bottom = park.index_of(g.identity(), park.noncrossing().chain_index(MultiChain{{g.identity()}}));
    std::size_t top =
        park.index_of(g.identity(), park.noncrossing().chain_index(MultiChain{{g.coxeter_element()}}));
    std::size_t fixers = 0;
    for (std::uint32_t w = 0; w < g.order(); ++w) {
      fixers += park.act(ElementId{w}, 0, bottom) == bottom;
      EXPECT_EQ(park.act(ElementId{w}, 0, top), top);
    }
    EXPECT_EQ(fixers, 1u);
  }
}

TEST(Park, TypeAFixedPointsMatchClassicalCount) {
  for (int n = 3; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k) {
      auto g = ReflectionGroup::build(Family::A, n);
      ParkSpace park(g, k);
      for (std::uint32_t w = 0; w < g.order(); ++w) {
        std::size_t fixed = 0;
        for (std::size_t p = 0; p < park.size(); ++p) fixed += park.act(ElementId{w}, 0, p) == p;
        const auto& images = g.element(ElementId{w}).images;
        EXPECT_EQ(static_cast<long>(fixed), classical_fixed_count(images, n, k));
        EXPECT_EQ(fixed, ipow(k * n + 1, cycle_count(images) - 1));
      }
    }
}

TEST(Park, LabeledModelNineLetterExample) {
  auto g = ReflectionGroup::build(Family::A, 3);
  ParkSpace park(g, 3);
  LabeledNCPartition target{{{1, 8, 9}, {2, 3, 4, 5, 6, 7}}, {{2}, {1, 3}}};
  std::size_t hits = 0;
  for (std::size_t p = 0; p < park.size(); ++p) hits += to_labeled_model(park, p) == target;
  EXPECT_EQ(hits, 1u);
}

TEST(Park, LabeledModelBijectionAndLabelAction) {
  for (int n = 3; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      if (n == 4 && k == 3) continue;
      auto g = ReflectionGroup::build(Family::A, n);
      SCOPED_TRACE("n=" + std::to_string(n) + " k=" + std::to_string(k));
      ParkSpace park(g, k);
      LabeledModel model(g, k);
      EXPECT_EQ(model.size(), park.size());
      std::set<LabeledNCPartition> image;
      for (std::size_t p = 0; p < park.size(); ++p) {
        auto x = to_labeled_model(park, p);
        std::vector<int> all;
        for (std::size_t b = 0; b < x.pi.size(); ++b) {
          EXPECT_EQ(x.labels[b].size() * k, x.pi[b].size());
          all.insert(all.end(), x.labels[b].begin(), x.labels[b].end());
        }
        std::sort(all.begin(), all.end());
        std::vector<int> letters(n);
        std::iota(letters.begin(), letters.end(), 1);
        EXPECT_EQ(all, letters);
        image.insert(x);
        EXPECT_NO_THROW(model.index_of(x));
      }
      EXPECT_EQ(image.size(), park.size());
      ElementId swap = perm(g, n == 3 ? std::vector<int>{1, 0, 2} : std::vector<int>{1, 0, 2, 3});
      for (std::size_t p = 0; p < park.size(); ++p)
        EXPECT_EQ(to_labeled_model(park, park.act(swap, 0, p)), model.act(swap, 0, to_labeled_model(park, p)));
      EXPECT_TRUE(model.to_gset().is_action());
    }
  EXPECT_EQ(LabeledModel(ReflectionGroup::build(Family::A, 3), 1).size(), 16u);
}

TEST(Park, ClassicalParkingFunctions) {
  // oracle: every word in {1..n}^n
  auto brute = [](int n, int k) {
    long c = 0;
    std::vector<int> a(n, 1);
    int top = k * (n - 1) + 1;
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        auto b = a;
        std::sort(b.begin(), b.end());
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && b[j] <= k * j + 1;
        c += ok;
        return;
      }
      for (int v = 1; v <= top; ++v) {
        a[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    return c;
  };
  EXPECT_EQ(classical_fuss_enumerate(3, 1).size(), 16u);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 2; ++k) {
      EXPECT_EQ(static_cast<long>(classical_fuss_enumerate(n, k).size()), brute(n, k));
      EXPECT_EQ(classical_fuss_enumerate(n, k).size(), ipow(k * n + 1, n - 1));
    }
  EXPECT_EQ(classical_fixed_count({0, 1, 2}, 3, 1), 16);
  EXPECT_EQ(classical_fixed_count({1, 2, 0}, 3, 2), 1);
  EXPECT_THROW(classical_fuss_enumerate(7, 1), ConfigError);
  EXPECT_FALSE(is_classical_parking_function({3, 3, 1}, 1));
  EXPECT_TRUE(is_classical_parking_function({3, 1, 1}, 1));
}
