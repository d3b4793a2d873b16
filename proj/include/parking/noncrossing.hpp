#pragma once

#include <map>
#include <vector>

#include "parking/group.hpp"

namespace parking {

struct MultiChain {
  std::vector<ElementId> w;  // w_1 <=_T ... <=_T w_k
  auto operator<=>(const MultiChain&) const = default;
};

struct Factorization {
  std::vector<ElementId> parts;  // w_0, ..., w_k with product c
  auto operator<=>(const Factorization&) const = default;
};

struct NCFlatChain {
  std::vector<FlatId> flats;  // X_1 >= ... >= X_k
  auto operator<=>(const NCFlatChain&) const = default;
};

using SetPartition = std::vector<std::vector<int>>;  // blocks of 1-based letters, sorted

bool absolute_leq(const ReflectionGroup& g, ElementId u, ElementId w);
std::vector<ElementId> enumerate_nc(const ReflectionGroup& g);
std::vector<MultiChain> enumerate_nck(const ReflectionGroup& g, int k);
// multichain count by dynamic programming over the Hasse diagram of [e, c]
long count_nck(const ReflectionGroup& g, int k);

Factorization delta(const ReflectionGroup& g, const MultiChain& chain);
MultiChain integrate(const ReflectionGroup& g, const Factorization& f);
Factorization rotate(const ReflectionGroup& g, const Factorization& f);
MultiChain rotate_chain(const ReflectionGroup& g, const MultiChain& chain);
NCFlatChain to_flat_chain(const ReflectionGroup& g, const MultiChain& chain);
bool is_valid_factorization(const ReflectionGroup& g, const Factorization& f);

SetPartition typeA_kdivisible_partition(const ReflectionGroup& g, const MultiChain& chain);
SetPartition rotate_partition(const SetPartition& p, int size);
bool is_noncrossing(const SetPartition& p);

// Enumerated NC^k(W) with index lookups and the rotation permutation on indices.
class NoncrossingData {
 public:
  NoncrossingData(const ReflectionGroup& g, int k);

  const ReflectionGroup& group() const { return *g_; }
  int k() const { return k_; }
  const std::vector<ElementId>& nc() const { return nc_; }
  const std::vector<MultiChain>& chains() const { return chains_; }
  std::size_t chain_index(const MultiChain& c) const;
  std::size_t rotated(std::size_t i) const { return rot_[i]; }
  bool is_noncrossing_flat(FlatId x) const { return flat_to_nc_.count(x.value) > 0; }
  ElementId nc_of_flat(FlatId x) const;  // unique noncrossing u with V^u = X

 private:
  const ReflectionGroup* g_;
  int k_;
  std::vector<ElementId> nc_;
  std::vector<MultiChain> chains_;
  std::map<MultiChain, std::size_t> index_;
  std::vector<std::size_t> rot_;
  std::map<std::uint32_t, ElementId> flat_to_nc_;
};

}  // namespace parking
