#pragma once

#include <string>
#include <vector>

#include "parking/gset.hpp"
#include "parking/noncrossing.hpp"
#include "parking/parkfn.hpp"

namespace parking {

// <W_X x {e}, (w, g^d)>
struct StabilizerDescriptor {
  FlatId x;
  ElementId w;
  long d = 1;
  bool matches_bruteforce = false;
};

Subgroup descriptor_subgroup(const GSet& s, const StabilizerDescriptor& h);
// W-part of the stabilizer is expected to be W_X; finds the minimal d | kh with a companion
StabilizerDescriptor describe_stabilizer(const GSet& s, std::size_t x, FlatId flat);
StabilizerDescriptor stabilizer_of_park(const ParkSpace& park, const GSet& s, std::size_t p);
std::vector<std::size_t> fixed_points(const GSet& s, const StabilizerDescriptor& h);

struct BijectionOrbit {
  std::size_t s0 = 0;
  std::size_t t0 = 0;
  std::size_t size = 0;
  Subgroup stabilizer;
};

struct SieveMismatch {
  std::string kind;  // "fixed-count", "stabilizer-count", "poset", "orbit-extension", "no-partner"
  Subgroup subgroup;
  long source_count = 0;
  long target_count = 0;
};

struct EquivariantBijection {
  bool success = false;
  bool equivariant = false;
  std::vector<std::uint32_t> map;  // source index -> target index
  std::vector<BijectionOrbit> orbits;
  std::vector<SieveMismatch> mismatches;
  std::size_t subgroups_checked = 0;
};

EquivariantBijection build_equivariant_bijection(const GSet& source, const GSet& target);
bool verify_equivariance(const GSet& source, const GSet& target, const std::vector<std::uint32_t>& map);

// ---- type A counting machinery; letters are 0-based inside vectors ----
using AdmissibleFunction = std::vector<int>;  // values in {0, 1, ..., kn}

std::vector<AdmissibleFunction> enumerate_admissible_functions(const ReflectionGroup& g, ElementId w, long d, FlatId x,
                                                               int k);
// number of good equivalence classes of cycles (requires r = kn/d > 1)
int good_class_count(const ReflectionGroup& g, FlatId x, ElementId w, long d, int k);
// dim(X cap E(w, zeta^{-d})) combinatorially: good classes for r > 1, blocks of X v cycles(w) minus one for r = 1
int typeA_dimension(const ReflectionGroup& g, FlatId x, ElementId w, long d, int k);
std::vector<SetPartition> enumerate_admissible_partitions(const ReflectionGroup& g, ElementId w, long r, FlatId x);
long count_via_product(const ReflectionGroup& g, const std::vector<SetPartition>& sigmas, ElementId w, long r, int k);
long typeA_fixed_count(const ReflectionGroup& g, FlatId x, ElementId w, long d, int k);
SetPartition fibers(const AdmissibleFunction& f);
std::vector<SetPartition> set_partitions(int n);

}  // namespace parking
