#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "parking/linalg.hpp"
#include "parking/noncrossing.hpp"
#include "support.hpp"

using namespace parking;
using parking::testing::desk_groups;

namespace {

long product_formula(const ReflectionGroup& g, int k) {
  long num = 1, den = 1;
  for (int d : g.degrees()) {
    num *= k * g.coxeter_number() + d;
    den *= d;
  }
  EXPECT_EQ(num % den, 0);
  return num / den;
}

int numeric_length(const ReflectionGroup& g, ElementId w) {
  return numeric_rank(g.matrix(w) - CMat::Identity(g.rank(), g.rank()));
}

// [e, c]_T from numeric reflection lengths
std::vector<ElementId> brute_nc(const ReflectionGroup& g) {
  std::vector<ElementId> out;
  const int n = g.rank();
  for (std::uint32_t w = 0; w < g.order(); ++w) {
    ElementId e{w};
    if (numeric_length(g, e) + numeric_length(g, g.mul(g.inv(e), g.coxeter_element())) == n) out.push_back(e);
  }
  return out;
}

long brute_chain_count(const ReflectionGroup& g, int k) {
  auto nc = brute_nc(g);
  std::function<long(int, ElementId)> rec = [&](int left, ElementId lo) -> long {
    if (left == 0) return 1;
    long s = 0;
    for (ElementId w : nc)
      if (numeric_length(g, lo) + numeric_length(g, g.mul(g.inv(lo), w)) == numeric_length(g, w)) s += rec(left - 1, w);
    return s;
  };
  return rec(k, g.identity());
}

bool crosses(const SetPartition& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      for (int i : p[a])
        for (int j : p[a])
          for (int x : p[b])
            for (int y : p[b])
              if (i < x && x < j && j < y) return true;
    }
  return false;
}

std::vector<SetPartition> brute_kdivisible(int size, int k) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(size, 0);
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == size) {
      SetPartition p(mx + 1);
      for (int j = 0; j < size; ++j) p[rgs[j]].push_back(j + 1);
      for (const auto& b : p)
        if (b.size() % k) return;
      if (!crosses(p)) out.push_back(p);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

std::set<SetPartition> normalized(std::vector<SetPartition> v) {
  std::set<SetPartition> s;
  for (auto& p : v) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end());
    s.insert(p);
  }
  return s;
}

}  // namespace

TEST(Noncrossing, AbsoluteOrderExamples) {
  auto g = ReflectionGroup::build(Family::A, 3);
  ElementId c = g.coxeter_element();
  for (std::uint32_t w = 0; w < g.order(); ++w) EXPECT_TRUE(absolute_leq(g, g.identity(), ElementId{w}));
  for (ElementId t : g.reflections()) {
    EXPECT_TRUE(absolute_leq(g, t, c));
    EXPECT_FALSE(absolute_leq(g, c, t));
  }
}

TEST(Noncrossing, IntervalMatchesBruteForce) {
  EXPECT_EQ(enumerate_nc(ReflectionGroup::build(Family::A, 3)).size(), 5u);
  EXPECT_EQ(enumerate_nc(ReflectionGroup::build(Family::B, 2)).size(), 6u);
  EXPECT_EQ(enumerate_nc(ReflectionGroup::build(Family::I2, 5)).size(), 7u);
  for (const auto& g : desk_groups()) {
    SCOPED_TRACE(g.spec().str());
    auto nc = enumerate_nc(g);
    auto brute = brute_nc(g);
    EXPECT_EQ(std::set<ElementId>(nc.begin(), nc.end()), std::set<ElementId>(brute.begin(), brute.end()));
    EXPECT_EQ(static_cast<long>(nc.size()), product_formula(g, 1));
  }
}

TEST(Noncrossing, MultichainCounts) {
  auto s3 = ReflectionGroup::build(Family::A, 3);
  EXPECT_EQ(enumerate_nck(s3, 1).size(), 5u);
  EXPECT_EQ(enumerate_nck(s3, 2).size(), 12u);
  for (const auto& g : desk_groups()) {
    SCOPED_TRACE(g.spec().str());
    for (int k = 1; k <= 3; ++k) {
      if (k == 3 && g.rank() > 2) continue;
      auto chains = enumerate_nck(g, k);
      EXPECT_EQ(static_cast<long>(chains.size()), product_formula(g, k));
      EXPECT_EQ(count_nck(g, k), product_formula(g, k));
      for (const auto& ch : chains)
        for (int i = 0; i + 1 < k; ++i) EXPECT_TRUE(absolute_leq(g, ch.w[i], ch.w[i + 1]));
    }
  }
  for (auto g : {ReflectionGroup::build(Family::A, 4), ReflectionGroup::build(Family::B, 2),
                 ReflectionGroup::build(Family::I2, 6)})
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(static_cast<long>(enumerate_nck(g, k).size()), brute_chain_count(g, k));
}

TEST(Noncrossing, DeltaIntegrate) {
  auto g = ReflectionGroup::build(Family::A, 3);
  ElementId c = g.coxeter_element(), e = g.identity();
  for (int k = 1; k <= 3; ++k) {
    MultiChain top{std::vector<ElementId>(k, c)};
    Factorization f = delta(g, top);
    EXPECT_EQ(f.parts.front(), c);
    for (int i = 1; i <= k; ++i) EXPECT_EQ(f.parts[i], e);
    MultiChain bottom{std::vector<ElementId>(k, e)};
    Factorization fb = delta(g, bottom);
    for (int i = 0; i < k; ++i) EXPECT_EQ(fb.parts[i], e);
    EXPECT_EQ(fb.parts[k], c);
    for (const auto& ch : enumerate_nck(g, k)) {
      Factorization d = delta(g, ch);
      EXPECT_TRUE(is_valid_factorization(g, d));
      EXPECT_EQ(integrate(g, d), ch);
    }
  }
  Factorization bad{{c, c}};
  EXPECT_THROW(integrate(g, bad), std::exception);
}

TEST(Noncrossing, RotationAction) {
  for (const auto& g : desk_groups()) {
    SCOPED_TRACE(g.spec().str());
    for (int k = 1; k <= 2; ++k) {
      const int kh = k * g.coxeter_number();
      auto chains = enumerate_nck(g, k);
      std::set<MultiChain> all(chains.begin(), chains.end());
      std::size_t orbit_total = 0;
      std::set<MultiChain> seen;
      for (const auto& ch : chains) {
        Factorization f = delta(g, ch);
        Factorization r = f;
        for (int j = 0; j < kh; ++j) {
          r = rotate(g, r);
          EXPECT_TRUE(is_valid_factorization(g, r));
        }
        EXPECT_EQ(r, f);
        EXPECT_TRUE(all.count(rotate_chain(g, ch)));
        if (seen.count(ch)) continue;
        MultiChain x = ch;
        do {
          seen.insert(x);
          ++orbit_total;
          x = rotate_chain(g, x);
        } while (x != ch);
      }
      EXPECT_EQ(orbit_total, chains.size());
    }
  }
  auto g = ReflectionGroup::build(Family::A, 3);
  Factorization f{{g.coxeter_element(), g.identity(), g.identity()}};
  EXPECT_EQ(rotate(g, f), f);
}

TEST(Noncrossing, FlatChainInjective) {
  for (const auto& g : desk_groups()) {
    std::set<NCFlatChain> flats;
    for (const auto& ch : enumerate_nck(g, 1)) flats.insert(to_flat_chain(g, ch));
    EXPECT_EQ(flats.size(), enumerate_nc(g).size());
  }
  auto g = ReflectionGroup::build(Family::A, 3);
  EXPECT_EQ(to_flat_chain(g, MultiChain{{g.identity()}}).flats.front(), g.whole_space());
  EXPECT_EQ(to_flat_chain(g, MultiChain{{g.coxeter_element()}}).flats.front(), g.origin());
}

TEST(Noncrossing, KDivisiblePartitions) {
  auto g = ReflectionGroup::build(Family::A, 3);
  EXPECT_EQ(typeA_kdivisible_partition(g, MultiChain{{g.coxeter_element()}}), (SetPartition{{1, 2, 3}}));
  EXPECT_THROW(typeA_kdivisible_partition(ReflectionGroup::build(Family::B, 2), MultiChain{{ElementId{0}}}),
               std::exception);
  for (int n = 3; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      if (n == 4 && k == 3) continue;
      auto h = ReflectionGroup::build(Family::A, n);
      std::vector<SetPartition> got;
      for (const auto& ch : enumerate_nck(h, k)) {
        SetPartition p = typeA_kdivisible_partition(h, ch);
        EXPECT_TRUE(is_noncrossing(p));
        for (const auto& b : p) EXPECT_EQ(static_cast<int>(b.size()) % k, 0);
        EXPECT_EQ(typeA_kdivisible_partition(h, rotate_chain(h, ch)), rotate_partition(p, k * n));
        got.push_back(p);
      }
      auto got_set = normalized(got);
      EXPECT_EQ(got_set.size(), got.size());
      EXPECT_EQ(got_set, normalized(brute_kdivisible(k * n, k)));
    }
  std::set<SetPartition> s3k2;
  for (const auto& ch : enumerate_nck(g, 2)) s3k2.insert(typeA_kdivisible_partition(g, ch));
  EXPECT_EQ(s3k2.size(), 12u);
}

TEST(Noncrossing, DataTables) {
  auto g = ReflectionGroup::build(Family::B, 3);
  NoncrossingData d(g, 2);
  for (std::size_t i = 0; i < d.chains().size(); ++i) {
    EXPECT_EQ(d.chain_index(d.chains()[i]), i);
    EXPECT_EQ(d.chains()[d.rotated(i)], rotate_chain(g, d.chains()[i]));
  }
  for (ElementId u : d.nc()) {
    EXPECT_TRUE(d.is_noncrossing_flat(g.fixed_space(u)));
    EXPECT_EQ(d.nc_of_flat(g.fixed_space(u)), u);
  }
}
