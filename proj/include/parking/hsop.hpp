#pragma once

#include <cstdint>
#include <vector>

#include "parking/polynomial.hpp"

namespace parking {

struct EquivariantMapSpace {
  std::vector<PolynomialMap> basis;
  int dim = 0;
  int degree = 0;
};

// the printed partition counts: A delta-sum difference, B/D exactly one odd part, I2 k+1
long hom_dim_formula(const ReflectionGroup& g, int k);
// D also admits exactly n-1 odd parts; I2(m) with m even has 2k+1
long hom_dim_corrected(const ReflectionGroup& g, int k);
// multiplicity of V in degree-(kh+1) equivariant maps from the eigenvalue data of every element
long hom_dim_character(const ReflectionGroup& g, int k);
EquivariantMapSpace hom_basis_bruteforce(const ReflectionGroup& g, int k);
EquivariantMapSpace hom_basis_for_degree(const ReflectionGroup& g, int degree);

// theta_i = x_i^{kh+1}; families B, D, I2, and type A on 2 letters (rank 1)
PolynomialMap diagonal_hsop(const ReflectionGroup& g, int k);
PolynomialMap sample_theta(const EquivariantMapSpace& space, std::uint64_t seed);
// true iff m lies in the span of the basis (numeric rank test)
bool space_contains(const EquivariantMapSpace& space, const PolynomialMap& m);
// the explicit generators x_i^{odd} m_E(other variables) for B/D, or the monomial pairs for I2
std::vector<PolynomialMap> explicit_generators(const ReflectionGroup& g, int k);

}  // namespace parking
