#pragma once

#include <vector>

#include "parking/group.hpp"

namespace parking::testing {

// permutation given 0-based images
inline ElementId perm(const ReflectionGroup& g, std::vector<int> images) {
  GroupElement e;
  e.signs.assign(images.size(), 1);
  e.images = std::move(images);
  return g.find(e);
}

// signed one-line notation, 1-based with signs
inline ElementId signed_perm(const ReflectionGroup& g, const std::vector<int>& one_line) {
  GroupElement e;
  for (int v : one_line) {
    e.images.push_back((v > 0 ? v : -v) - 1);
    e.signs.push_back(v > 0 ? 1 : -1);
  }
  return g.find(e);
}

inline ElementId dihedral(const ReflectionGroup& g, int rotation, bool reflection) {
  GroupElement e;
  e.rotation = rotation;
  e.reflection = reflection;
  return g.find(e);
}

inline std::vector<ReflectionGroup> desk_groups() {
  std::vector<ReflectionGroup> out;
  for (int n = 2; n <= 5; ++n) out.push_back(ReflectionGroup::build(Family::A, n));
  for (int n = 2; n <= 3; ++n) out.push_back(ReflectionGroup::build(Family::B, n));
  out.push_back(ReflectionGroup::build(Family::D, 4));
  for (int m = 3; m <= 8; ++m) out.push_back(ReflectionGroup::build(Family::I2, m));
  return out;
}

}  // namespace parking::testing
