#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace parking {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family { A, B, D, I2 };

struct ElementId {
  std::uint32_t value = 0;
  auto operator<=>(const ElementId&) const = default;
};

struct FlatId {
  std::uint32_t value = 0;
  auto operator<=>(const FlatId&) const = default;
};

// Rational angle num/den in [0,1); the eigenvalue is exp(2 pi i num/den).
struct Angle {
  long num = 0;
  long den = 1;
  static Angle make(long num, long den);
  bool operator==(const Angle& o) const { return num == o.num && den == o.den; }
  Angle operator+(const Angle& o) const { return make(num * o.den + o.num * den, den * o.den); }
  Angle operator-() const { return make(-num, den); }
  cd value() const;
};

// Exact encoding. For A, B, D: w.e_i = signs[i] e_{images[i]} (signs all +1 in type A).
// For I2: R^rotation S^reflection in the complex model.
struct GroupElement {
  std::vector<int> images;
  std::vector<int> signs;
  int rotation = 0;
  bool reflection = false;

  std::vector<int> code() const;
};

struct Flat {
  // A/B/D: per-letter label, 0 = zero block, +-b = block b (1-based, numbered by minimal letter,
  // minimal letter carries +). I2: {kind, r} with kind 0 = V, 1 = line fixed by (r,1), 2 = origin.
  std::vector<int> code;
  int dim = 0;
  CMat basis;  // rank x dim, orthonormal columns
  std::vector<ElementId> parabolic;
  ElementId rep;  // minimal element with this fixed space
};

struct ConjugacyClass {
  ElementId rep;
  std::size_t size = 0;
};

struct GroupSpec {
  Family family = Family::A;
  int size = 3;  // letters for A, n for B/D, m for I2
  std::string str() const;
  static GroupSpec parse(const std::string& s);  // A<n>, B<n>, D<n>, I2:<m>
};

class ReflectionGroup {
 public:
  static ReflectionGroup build(Family family, int size_parameter);
  static ReflectionGroup build(const GroupSpec& spec) { return build(spec.family, spec.size); }

  Family family() const { return family_; }
  GroupSpec spec() const { return {family_, size_}; }
  int rank() const { return rank_; }
  int letters() const { return letters_; }
  int m() const { return m_; }
  int coxeter_number() const { return h_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t order() const { return elements_.size(); }

  const GroupElement& element(ElementId w) const { return elements_[w.value]; }
  ElementId identity() const { return ElementId{0}; }
  ElementId coxeter_element() const { return coxeter_; }
  const std::vector<ElementId>& reflections() const { return reflections_; }
  const std::vector<ElementId>& simple_generators() const { return simple_; }
  ElementId find(const GroupElement& e) const;

  ElementId mul(ElementId a, ElementId b) const {
    return ElementId{mul_[a.value * elements_.size() + b.value]};
  }
  ElementId inv(ElementId a) const { return ElementId{inv_[a.value]}; }
  ElementId conj(ElementId by, ElementId x) const { return mul(mul(by, x), inv(by)); }
  ElementId power(ElementId a, long e) const;
  int element_order(ElementId a) const;

  int reflection_length(ElementId w) const { return refl_len_[w.value]; }
  bool absolute_leq(ElementId u, ElementId w) const {
    return reflection_length(w) == reflection_length(u) + reflection_length(mul(inv(u), w));
  }

  const CMat& matrix(ElementId w) const { return matrices_[w.value]; }
  CVec act(ElementId w, const CVec& v) const;
  const std::vector<Angle>& eigen_angles(ElementId w) const { return angles_[w.value]; }
  int multiplicity(ElementId w, const Angle& a) const;

  // flats
  std::size_t num_flats() const { return flats_.size(); }
  const Flat& flat(FlatId x) const { return flats_[x.value]; }
  FlatId fixed_space(ElementId w) const { return FlatId{fixed_[w.value]}; }
  FlatId flat_of_code(const std::vector<int>& code) const;
  FlatId meet(FlatId x, FlatId y) const { return FlatId{meet_[x.value * flats_.size() + y.value]}; }
  bool flat_leq(FlatId x, FlatId y) const { return meet(x, y) == x; }  // X subset of Y
  FlatId flat_act(ElementId w, FlatId x) const {
    return FlatId{flat_act_[w.value * flats_.size() + x.value]};
  }
  FlatId whole_space() const { return FlatId{0}; }
  FlatId origin() const { return FlatId{static_cast<std::uint32_t>(flats_.size() - 1)}; }
  const std::vector<ElementId>& parabolic_subgroup(FlatId x) const { return flats_[x.value].parabolic; }
  bool in_parabolic(FlatId x, ElementId w) const { return flat_leq(x, fixed_space(w)); }
  std::vector<FlatId> intersection_lattice() const;

  // dim(X cap E(w, zeta^{-d})) with zeta = exp(2 pi i/(kh)), by numeric rank.
  int eigenspace_intersection_dim(FlatId x, ElementId w, long d, int k) const;
  int eigenspace_intersection_dim(const CMat& basis, ElementId w, const cd& lambda) const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(ElementId w) const { return class_of_[w.value]; }

  // type A only: orthonormal basis of the sum-zero hyperplane, letters x rank
  const Eigen::MatrixXd& typeA_projection() const { return q_; }

  // ambient monomial data: the matrix of w on C^letters is monomial, column j has
  // phase_num[j]/phase_den at row images[j]. Type A returns the permutation action on C^n.
  int phase_denominator() const;
  void monomial_form(ElementId w, std::vector<int>& sigma, std::vector<long>& phase) const;

  std::string element_string(ElementId w) const;
  std::string flat_string(FlatId x) const;

 private:
  ReflectionGroup() = default;
  void finish();
  std::vector<int> fixed_code(const GroupElement& e) const;
  std::vector<int> meet_code(const std::vector<int>& a, const std::vector<int>& b) const;
  int code_dim(const std::vector<int>& code) const;
  CMat code_basis(const std::vector<int>& code) const;
  GroupElement compose(const GroupElement& a, const GroupElement& b) const;
  CMat build_matrix(const GroupElement& e) const;
  std::vector<Angle> build_angles(const GroupElement& e) const;

  Family family_ = Family::A;
  int size_ = 0;
  int rank_ = 0;
  int letters_ = 0;
  int m_ = 0;
  int h_ = 0;
  std::vector<int> degrees_;
  std::vector<GroupElement> elements_;
  std::map<std::vector<int>, std::uint32_t> index_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<int> refl_len_;
  std::vector<CMat> matrices_;
  std::vector<std::vector<Angle>> angles_;
  std::vector<ElementId> reflections_;
  std::vector<ElementId> simple_;
  ElementId coxeter_;
  std::vector<Flat> flats_;
  std::map<std::vector<int>, std::uint32_t> flat_index_;
  std::vector<std::uint32_t> fixed_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> flat_act_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  Eigen::MatrixXd q_;
};

std::string family_name(Family f);

}  // namespace parking
