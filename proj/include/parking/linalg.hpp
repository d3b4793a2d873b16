#pragma once

#include "parking/group.hpp"

namespace parking {

inline constexpr double kRankTol = 1e-8;

// Singular values at or below tol * max(sigma_max, 1) count as zero.
int numeric_rank(const CMat& m, double tol = kRankTol);
CMat orthonormal_column_basis(const CMat& m, double tol = kRankTol);
double min_singular_value(const CMat& m);
// distance from v to the column span of an orthonormal basis
double distance_to_span(const CMat& basis, const CVec& v);

long gcd_long(long a, long b);
std::vector<long> divisors(long n);

}  // namespace parking
