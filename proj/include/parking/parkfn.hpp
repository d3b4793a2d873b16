#pragma once

#include <vector>

#include "parking/gset.hpp"
#include "parking/noncrossing.hpp"

namespace parking {

struct NCParkingFunction {
  ElementId rep;      // minimal element of rep * W_{X_1}
  std::size_t chain;  // index into NC^k(W)
  auto operator<=>(const NCParkingFunction&) const = default;
};

class ParkSpace {
 public:
  ParkSpace(const ReflectionGroup& g, int k);

  const ReflectionGroup& group() const { return nc_.group(); }
  const NoncrossingData& noncrossing() const { return nc_; }
  int k() const { return nc_.k(); }
  int kh() const { return nc_.k() * group().coxeter_number(); }
  std::size_t size() const { return elems_.size(); }
  const NCParkingFunction& element(std::size_t i) const { return elems_[i]; }
  NCFlatChain flat_chain(std::size_t i) const;

  // class of [w, chain]
  std::size_t index_of(ElementId w, std::size_t chain) const;
  ElementId coset_rep(FlatId x, ElementId w) const;
  // (v, g^j).p through the defining formula
  std::size_t act(ElementId v, long j, std::size_t p) const;
  GSet to_gset() const;

 private:
  NoncrossingData nc_;
  std::vector<NCParkingFunction> elems_;
  std::vector<std::vector<std::uint32_t>> coset_rep_;  // per flat id, empty if unused
  std::vector<std::uint32_t> index_;                   // chain * |W| + rep -> park index
  std::vector<ElementId> step_;                        // per chain: u_k c^{-1}
};

// Type A labeled model: k-divisible noncrossing partition of [kn] with block labels.
struct LabeledNCPartition {
  SetPartition pi;
  std::vector<std::vector<int>> labels;  // labels[b] = f(pi[b]), sorted 1-based letters
  auto operator<=>(const LabeledNCPartition&) const = default;
};

LabeledNCPartition to_labeled_model(const ParkSpace& park, std::size_t p);

class LabeledModel {
 public:
  LabeledModel(const ReflectionGroup& g, int k);
  std::size_t size() const { return elems_.size(); }
  const LabeledNCPartition& element(std::size_t i) const { return elems_[i]; }
  std::size_t index_of(const LabeledNCPartition& x) const;
  // label permutation by w and clockwise rotation by j steps
  LabeledNCPartition act(ElementId w, long j, const LabeledNCPartition& x) const;
  GSet to_gset() const;

 private:
  const ReflectionGroup* g_;
  int k_;
  std::vector<LabeledNCPartition> elems_;
  std::map<LabeledNCPartition, std::size_t> index_;
};

// all k-divisible noncrossing partitions of [size] (size = kn)
std::vector<SetPartition> kdivisible_noncrossing_partitions(int n, int k);

using ClassicalParkingFunction = std::vector<int>;
bool is_classical_parking_function(const ClassicalParkingFunction& a, int k);
std::vector<ClassicalParkingFunction> classical_fuss_enumerate(int n, int k);
// sequences fixed by subscript permutation (a_{w(i)} = a_i)
long classical_fixed_count(const std::vector<int>& w, int n, int k);

}  // namespace parking
