#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "parking/group.hpp"

namespace parking {

using Exponent = std::vector<int>;

// All exponent vectors of total degree `degree` in `vars` variables, graded lex (x_1^D first).
std::vector<Exponent> monomials_of_degree(int vars, int degree);

// Homogeneous polynomial map C^n -> C^n with sparse coefficients.
struct PolynomialMap {
  int vars = 0;
  int degree = 0;
  std::vector<std::map<Exponent, cd>> coords;

  static PolynomialMap zero(int vars, int degree);
  bool is_homogeneous() const;
  PolynomialMap& add_scaled(const PolynomialMap& o, const cd& s);
  PolynomialMap scaled(const cd& s) const;
  // flattened coefficient vector over (coordinate, monomial) in graded lex order
  CVec coefficient_vector() const;
  static PolynomialMap from_coefficients(int vars, int degree, const CVec& c);
  std::size_t term_count() const;
};

// Evaluation-ready form of a PolynomialMap.
class CompiledMap {
 public:
  CompiledMap() = default;
  explicit CompiledMap(const PolynomialMap& m);
  int vars() const { return vars_; }
  int degree() const { return degree_; }
  CVec eval(const CVec& x) const;
  void eval_jacobian(const CVec& x, CVec& f, CMat& jac) const;

 private:
  int vars_ = 0;
  int degree_ = 0;
  std::vector<std::vector<int>> exps_;  // per coordinate, flattened term exponents
  std::vector<std::vector<cd>> coefs_;
};

// max over a seeded panel of unit vectors and simple generators of |Theta(s v) - s Theta(v)|
double equivariance_error(const ReflectionGroup& g, const PolynomialMap& m, std::uint64_t seed, int panel = 32);

// deterministic uniform [0,1) from a 64-bit engine
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed);
  double uniform();
  cd unit_disc();
  cd unit_circle();
  CVec unit_vector(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace parking
