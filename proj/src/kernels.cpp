#include "parking/kernels.hpp"

#include <omp.h>

namespace parking::kernels {

std::size_t fixed_count_serial(const GSet& s, ElementId w, long j) {
  const auto* er = s.element_row(w);
  const auto* rr = s.rotation_row(j);
  std::size_t c = 0;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (er[rr[x]] == x) ++c;
  return c;
}

std::size_t fixed_count(const GSet& s, ElementId w, long j) {
  const auto* er = s.element_row(w);
  const auto* rr = s.rotation_row(j);
  const long n = static_cast<long>(s.size());
  long c = 0;
#pragma omp parallel for reduction(+ : c) schedule(static)
  for (long x = 0; x < n; ++x)
    if (er[rr[x]] == static_cast<std::uint32_t>(x)) ++c;
  return static_cast<std::size_t>(c);
}

std::vector<std::size_t> fixed_count_table_serial(const GSet& s) {
  std::vector<std::size_t> out(s.group().order() * s.kh());
  for (std::size_t w = 0; w < s.group().order(); ++w)
    for (int j = 0; j < s.kh(); ++j) out[w * s.kh() + j] = fixed_count_serial(s, ElementId{static_cast<std::uint32_t>(w)}, j);
  return out;
}

std::vector<std::size_t> fixed_count_table(const GSet& s) {
  const long total = static_cast<long>(s.group().order()) * s.kh();
  std::vector<std::size_t> out(total);
#pragma omp parallel for schedule(dynamic, 4)
  for (long c = 0; c < total; ++c)
    out[c] = fixed_count_serial(s, ElementId{static_cast<std::uint32_t>(c / s.kh())}, c % s.kh());
  return out;
}

std::vector<Subgroup> all_stabilizers_serial(const GSet& s) {
  std::vector<Subgroup> out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) out[x] = stabilizer(s, x);
  return out;
}

std::vector<Subgroup> all_stabilizers(const GSet& s) {
  const long n = static_cast<long>(s.size());
  std::vector<Subgroup> out(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long x = 0; x < n; ++x) out[x] = stabilizer(s, static_cast<std::size_t>(x));
  return out;
}

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace parking::kernels
