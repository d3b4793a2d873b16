#pragma once

#include <string>
#include <vector>

#include "parking/gset.hpp"
#include "parking/noncrossing.hpp"

namespace parking {

struct CharacterRow {
  ElementId rep;
  std::size_t class_size = 0;
  long d = 0;
  long observed = 0;
  long predicted = 0;
};

struct CharacterReport {
  bool pass = true;
  std::size_t set_size = 0;
  std::vector<CharacterRow> rows;
  std::size_t mismatches = 0;
};

long permutation_character(const GSet& s, ElementId w, long d);
// (kh+1)^{mult_w(zeta^d)}, zeta = exp(2 pi i/(kh))
long predicted_character(const ReflectionGroup& g, int k, ElementId w, long d);
CharacterReport compare_with_prediction(const GSet& s);
CharacterReport verify_weak(const ReflectionGroup& g, int k);

class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<long long> c);
  static QPolynomial q_integer(long b);  // 1 + q + ... + q^{b-1}
  const std::vector<long long>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial exact_div(const QPolynomial& o) const;  // throws if not divisible
  cd eval(const cd& q) const;
  long long at_one() const;

 private:
  std::vector<long long> c_;
};

long fuss_catalan(const ReflectionGroup& g, int k);
QPolynomial q_fuss_catalan(const ReflectionGroup& g, int k);
// Cat^k_q at q = zeta^d by cancelling cyclotomic factors
long q_fuss_catalan_at_root(const ReflectionGroup& g, int k, long d);

struct CspRow {
  long d = 0;
  long fixed = 0;
  long predicted = 0;
};
struct CspReport {
  bool pass = true;
  long total = 0;
  std::vector<CspRow> rows;
  long orbits_direct = 0;
  long orbits_burnside = 0;
};
CspReport verify_csp(const ReflectionGroup& g, int k);

long coset_character(const ReflectionGroup& g, FlatId x, ElementId w);
std::vector<std::vector<FlatId>> flat_orbits(const ReflectionGroup& g);
// rank of the psi_X table over orbit representatives, computed modulo a large prime
int coset_character_rank(const ReflectionGroup& g);

struct Root {
  std::vector<int> ambient;  // integer coordinates in the letters basis
  std::vector<int> simple;   // coordinates in the simple roots
  ElementId reflection;
};
std::vector<Root> positive_roots(const ReflectionGroup& g);
bool root_leq(const Root& a, const Root& b);
std::vector<std::vector<std::size_t>> root_antichains(const std::vector<Root>& roots);

struct KrewerasRow {
  FlatId representative;
  std::size_t orbit_size = 0;
  long noncrossing = 0;
  long nonnesting = 0;
};
struct KrewerasReport {
  bool pass = true;
  long antichains = 0;
  std::vector<KrewerasRow> rows;
};
KrewerasReport verify_kreweras(const ReflectionGroup& g);

}  // namespace parking
