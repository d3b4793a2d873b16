#pragma once

#include <string>
#include <vector>

#include "parking/gset.hpp"
#include "parking/homotopy.hpp"
#include "parking/sieve.hpp"

namespace parking {

struct LocusPoint {
  CVec x;
  double residual = 0;
  double sigma_min = 0;
  bool origin = false;
};

struct LocusSolution {
  int k = 1;
  std::string theta_ref;
  std::vector<LocusPoint> points;
  std::size_t expected = 0;
  bool certified = false;
  std::string failure;
  int gamma_attempts = 0;
  double min_separation = 0;
  double max_residual = 0;
  double min_sigma = 0;
  std::vector<std::vector<std::uint32_t>> generator_tables;  // one per simple generator
  std::vector<std::uint32_t> rotation_table;                 // g scales by exp(2 pi i / kh)
  bool action_closed = false;

  std::size_t size() const { return points.size(); }
};

// Finds the index of the unique point within tol of x; -1 if none, -2 if a second point is within sep.
class PointMatcher {
 public:
  explicit PointMatcher(const std::vector<LocusPoint>& pts);
  long match(const CVec& x, double tol, double sep) const;
  // smallest pairwise distance, or +inf for fewer than two points
  double min_distance() const;

 private:
  double key(const CVec& x) const;
  const std::vector<LocusPoint>* pts_;
  CVec dir_;
  std::vector<std::pair<double, std::uint32_t>> sorted_;
};

// Each coordinate in {0} union the (kh)-th roots of unity; families B, D, I2 and rank 1.
LocusSolution solve_diagonal(const ReflectionGroup& g, int k);
LocusSolution solve_homotopy(const ReflectionGroup& g, const PolynomialMap& theta, int k, const TrackerConfig& cfg);
// refines every point and fills the certificate fields
void certify(const PolynomialMap& theta, LocusSolution& sol, const TrackerConfig& cfg);
bool build_action_table(const ReflectionGroup& g, LocusSolution& sol, const TrackerConfig& cfg);
GSet locus_gset(const ReflectionGroup& g, const LocusSolution& sol);

long subspace_fixed_count(const ReflectionGroup& g, const LocusSolution& sol, FlatId x, ElementId w, long d,
                          double tol = 1e-8);
// X(q) is the meet of the reflecting hyperplanes through q
FlatId point_flat(const ReflectionGroup& g, const CVec& q, double tol = 1e-8);
StabilizerDescriptor stabilizer_of_point(const ReflectionGroup& g, const GSet& s, const LocusSolution& sol,
                                         std::size_t p);

struct TransportResult {
  bool success = false;
  bool equivariant = false;
  bool profiles_match = false;
  std::vector<std::uint32_t> map;  // source point -> target point
  double min_path_distance = 0;
  double min_sigma = 0;
  int detours = 0;
  std::size_t checkpoints = 0;
  std::string failure;
  std::vector<std::vector<CVec>> traces;
};

TransportResult transport_action(const ReflectionGroup& g, const PolynomialMap& theta0, const LocusSolution& sol0,
                                 const PolynomialMap& theta1, const LocusSolution& sol1, int steps,
                                 const TrackerConfig& cfg);

struct HsopVerdict {
  bool accept = false;
  std::string reason;
  std::size_t points = 0;
  std::size_t expected = 0;
};

HsopVerdict regular_sequence_heuristic(const ReflectionGroup& g, const PolynomialMap& theta, int k,
                                       const TrackerConfig& cfg);

}  // namespace parking
