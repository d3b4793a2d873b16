#include "parking/gset.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "parking/kernels.hpp"

namespace parking {

void GSet::build_rotation_powers(const std::vector<std::uint32_t>& rotation) {
  if (rotation.size() != n_) throw InvariantError("rotation table has wrong size");
  rot_.assign(static_cast<std::size_t>(kh_) * n_, 0);
  for (std::size_t x = 0; x < n_; ++x) rot_[x] = static_cast<std::uint32_t>(x);
  for (int j = 1; j < kh_; ++j)
    for (std::size_t x = 0; x < n_; ++x) rot_[j * n_ + x] = rotation[rot_[(j - 1) * n_ + x]];
  for (std::size_t x = 0; x < n_; ++x)
    if (rotation[rot_[(kh_ - 1) * n_ + x]] != x) throw InvariantError("rotation order does not divide kh");
}

GSet GSet::from_elements(const ReflectionGroup& g, int k, std::size_t size, std::vector<std::uint32_t> element_images,
                         const std::vector<std::uint32_t>& rotation) {
  GSet s;
  s.g_ = &g;
  s.k_ = k;
  s.kh_ = k * g.coxeter_number();
  s.n_ = size;
  if (element_images.size() != g.order() * size) throw InvariantError("element table has wrong size");
  s.elem_ = std::move(element_images);
  s.build_rotation_powers(rotation);
  return s;
}

GSet GSet::from_generators(const ReflectionGroup& g, int k, std::size_t size,
                           const std::vector<std::vector<std::uint32_t>>& generator_images,
                           const std::vector<std::uint32_t>& rotation) {
  const auto& gens = g.simple_generators();
  if (generator_images.size() != gens.size()) throw InvariantError("one table per simple generator expected");
  std::vector<std::uint32_t> table(g.order() * size, 0);
  std::vector<bool> done(g.order(), false);
  for (std::size_t x = 0; x < size; ++x) table[x] = static_cast<std::uint32_t>(x);
  done[0] = true;
  std::deque<ElementId> q{g.identity()};
  while (!q.empty()) {
    ElementId u = q.front();
    q.pop_front();
    for (std::size_t si = 0; si < gens.size(); ++si) {
      ElementId w = g.mul(u, gens[si]);
      if (done[w.value]) continue;
      done[w.value] = true;
      // (u s).x = u.(s.x)
      for (std::size_t x = 0; x < size; ++x) table[w.value * size + x] = table[u.value * size + generator_images[si][x]];
      q.push_back(w);
    }
  }
  if (std::find(done.begin(), done.end(), false) != done.end()) throw InvariantError("generators do not reach W");
  return from_elements(g, k, size, std::move(table), rotation);
}

bool GSet::is_action() const {
  for (std::size_t w = 0; w < g_->order(); ++w) {
    std::vector<bool> hit(n_, false);
    for (std::size_t x = 0; x < n_; ++x) {
      auto y = elem_[w * n_ + x];
      if (y >= n_ || hit[y]) return false;
      hit[y] = true;
    }
  }
  for (ElementId s : g_->simple_generators())
    for (std::size_t w = 0; w < g_->order(); ++w) {
      ElementId ws = g_->mul(ElementId{static_cast<std::uint32_t>(w)}, s);
      for (std::size_t x = 0; x < n_; ++x)
        if (elem_[ws.value * n_ + x] != elem_[w * n_ + elem_[s.value * n_ + x]]) return false;
    }
  // rotation commutes with W
  for (ElementId s : g_->simple_generators())
    for (std::size_t x = 0; x < n_; ++x)
      if (act(s, 1, x) != rot_[n_ + elem_[s.value * n_ + x]]) return false;
  return true;
}

GCode pack(const GSet& s, ElementId w, long j) {
  long jj = ((j % s.kh()) + s.kh()) % s.kh();
  return static_cast<GCode>(w.value * s.kh() + jj);
}
ElementId code_element(const GSet& s, GCode c) { return ElementId{c / static_cast<std::uint32_t>(s.kh())}; }
long code_rotation(const GSet& s, GCode c) { return c % s.kh(); }
GCode code_mul(const GSet& s, GCode a, GCode b) {
  return pack(s, s.group().mul(code_element(s, a), code_element(s, b)), code_rotation(s, a) + code_rotation(s, b));
}

Subgroup stabilizer(const GSet& s, std::size_t x) {
  Subgroup out;
  for (std::size_t w = 0; w < s.group().order(); ++w)
    for (int j = 0; j < s.kh(); ++j)
      if (s.act(ElementId{static_cast<std::uint32_t>(w)}, j, x) == x)
        out.push_back(pack(s, ElementId{static_cast<std::uint32_t>(w)}, j));
  return out;
}

Subgroup generated_subgroup(const GSet& s, const std::vector<GCode>& gens) {
  std::set<GCode> seen{pack(s, s.group().identity(), 0)};
  std::deque<GCode> q{*seen.begin()};
  while (!q.empty()) {
    GCode a = q.front();
    q.pop_front();
    for (GCode gen : gens) {
      GCode b = code_mul(s, a, gen);
      if (seen.insert(b).second) q.push_back(b);
    }
  }
  return {seen.begin(), seen.end()};
}

Subgroup conjugate_subgroup(const GSet& s, GCode by, const Subgroup& h) {
  const auto& g = s.group();
  ElementId v = code_element(s, by);
  Subgroup out;
  for (GCode c : h) out.push_back(pack(s, g.conj(v, code_element(s, c)), code_rotation(s, c)));
  std::sort(out.begin(), out.end());
  return out;
}

bool fixed_by(const GSet& s, std::size_t x, const std::vector<GCode>& gens) {
  for (GCode c : gens)
    if (s.act(c, x) != x) return false;
  return true;
}

std::size_t fixed_count(const GSet& s, ElementId w, long j) { return kernels::fixed_count(s, w, j); }

}  // namespace parking
