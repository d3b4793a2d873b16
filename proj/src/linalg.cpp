#include "parking/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace parking {

int numeric_rank(const CMat& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  double cutoff = tol * std::max(s.size() ? s(0) : 0.0, 1.0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++r;
  return r;
}

CMat orthonormal_column_basis(const CMat& m, double tol) {
  if (m.cols() == 0) return CMat(m.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullU);
  int r = numeric_rank(m, tol);
  return svd.matrixU().leftCols(r);
}

double min_singular_value(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  return s.size() ? s(s.size() - 1) : 0.0;
}

double distance_to_span(const CMat& basis, const CVec& v) {
  if (basis.cols() == 0) return v.norm();
  CVec proj = basis * (basis.adjoint() * v);
  return (v - proj).norm();
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace parking
