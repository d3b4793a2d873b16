#pragma once

#include <vector>

#include "parking/gset.hpp"

// Hot loops over set elements. Each parallel kernel has a serial reference twin;
// tests require identical results.
namespace parking::kernels {

std::size_t fixed_count(const GSet& s, ElementId w, long j);
std::size_t fixed_count_serial(const GSet& s, ElementId w, long j);

// fixed-point counts for every (element, j), row-major element * kh + j
std::vector<std::size_t> fixed_count_table(const GSet& s);
std::vector<std::size_t> fixed_count_table_serial(const GSet& s);

std::vector<Subgroup> all_stabilizers(const GSet& s);
std::vector<Subgroup> all_stabilizers_serial(const GSet& s);

void set_threads(int n);
int max_threads();

}  // namespace parking::kernels
