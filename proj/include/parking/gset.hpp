#pragma once

#include <cstdint>
#include <vector>

#include "parking/group.hpp"

namespace parking {

// Element (w, g^j) of W x Z_kh packed as w * kh + j.
using GCode = std::uint32_t;
// Sorted list of packed elements.
using Subgroup = std::vector<GCode>;

// A finite W x Z_kh-set stored through full action tables.
class GSet {
 public:
  GSet() = default;
  // generator_images[s][x] for each simple generator s, rotation[x] for g.
  static GSet from_generators(const ReflectionGroup& g, int k, std::size_t size,
                              const std::vector<std::vector<std::uint32_t>>& generator_images,
                              const std::vector<std::uint32_t>& rotation);
  // element_images[w][x] for every element of W.
  static GSet from_elements(const ReflectionGroup& g, int k, std::size_t size,
                            std::vector<std::uint32_t> element_images, const std::vector<std::uint32_t>& rotation);

  const ReflectionGroup& group() const { return *g_; }
  int k() const { return k_; }
  int kh() const { return kh_; }
  std::size_t size() const { return n_; }
  std::size_t group_order() const { return g_->order() * kh_; }

  std::uint32_t act(ElementId w, long j, std::size_t x) const {
    long jj = ((j % kh_) + kh_) % kh_;
    return elem_[w.value * n_ + rot_[jj * n_ + x]];
  }
  std::uint32_t act(GCode c, std::size_t x) const { return act(ElementId{c / static_cast<std::uint32_t>(kh_)}, c % kh_, x); }
  const std::uint32_t* element_row(ElementId w) const { return elem_.data() + w.value * n_; }
  const std::uint32_t* rotation_row(long j) const { return rot_.data() + (((j % kh_) + kh_) % kh_) * n_; }

  // every row is a permutation and the action is compatible with the group law
  bool is_action() const;

 private:
  void build_rotation_powers(const std::vector<std::uint32_t>& rotation);

  const ReflectionGroup* g_ = nullptr;
  int k_ = 1;
  int kh_ = 1;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> elem_;
  std::vector<std::uint32_t> rot_;
};

GCode pack(const GSet& s, ElementId w, long j);
ElementId code_element(const GSet& s, GCode c);
long code_rotation(const GSet& s, GCode c);
GCode code_mul(const GSet& s, GCode a, GCode b);

Subgroup stabilizer(const GSet& s, std::size_t x);
Subgroup generated_subgroup(const GSet& s, const std::vector<GCode>& gens);
Subgroup conjugate_subgroup(const GSet& s, GCode by, const Subgroup& h);
bool fixed_by(const GSet& s, std::size_t x, const std::vector<GCode>& gens);
std::size_t fixed_count(const GSet& s, ElementId w, long j);

}  // namespace parking
