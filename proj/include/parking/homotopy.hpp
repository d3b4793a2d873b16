#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parking/polynomial.hpp"

namespace parking {

struct TrackerConfig {
  double tol_track = 1e-8;
  double tol_refine = 1e-12;
  double tol_match = 1e-8;
  double separation = 1e-6;
  double sigma_floor = 1e-6;
  double h_initial = 0.01;
  double h_max = 0.05;
  double h_min = 1e-6;
  double divergence_radius = 1e8;
  int max_newton = 4;
  double max_contraction = 0.5;
  int max_retries = 5;
  std::uint64_t seed = 1;
  bool record_traces = false;
  bool parallel = true;
};

// H(x, t) with its partial derivatives.
class Homotopy {
 public:
  virtual ~Homotopy() = default;
  virtual int dim() const = 0;
  virtual void eval(const CVec& x, double t, CVec& h, CMat& hx, CVec& ht) const = 0;
};

// (1-t) gamma (x_i^D - 1) + t (Theta(x) - x)
class TotalDegreeHomotopy : public Homotopy {
 public:
  TotalDegreeHomotopy(const CompiledMap& target, cd gamma) : target_(target), gamma_(gamma) {}
  int dim() const override { return target_.vars(); }
  void eval(const CVec& x, double t, CVec& h, CMat& hx, CVec& ht) const override;

 private:
  const CompiledMap& target_;
  cd gamma_;
};

// Theta_z(x) - x with Theta_z = (1-z) A + z B and z = za + t (zb - za)
class SegmentHomotopy : public Homotopy {
 public:
  SegmentHomotopy(const CompiledMap& a, const CompiledMap& b, cd za, cd zb) : a_(a), b_(b), za_(za), zb_(zb) {}
  int dim() const override { return a_.vars(); }
  void eval(const CVec& x, double t, CVec& h, CMat& hx, CVec& ht) const override;

 private:
  const CompiledMap& a_;
  const CompiledMap& b_;
  cd za_, zb_;
};

struct PathResult {
  CVec x;
  bool ok = false;
  std::size_t steps = 0;
  std::size_t rejects = 0;
  double min_step = 1.0;
  std::string failure;
  std::vector<std::pair<double, CVec>> trace;
};

PathResult track_path(const Homotopy& h, const CVec& x0, double t0, double t1, const TrackerConfig& cfg);
std::vector<PathResult> track_all(const Homotopy& h, const std::vector<CVec>& starts, double t0, double t1,
                                  const TrackerConfig& cfg);
std::vector<PathResult> track_all_serial(const Homotopy& h, const std::vector<CVec>& starts, double t0, double t1,
                                         const TrackerConfig& cfg);

// all solutions of x_i^D = 1
std::vector<CVec> total_degree_starts(int vars, int degree);

struct RefinedPoint {
  CVec x;
  double residual = 0;
  double sigma_min = 0;
};

// Newton on Theta(x) - x
RefinedPoint refine_fixed_point(const CompiledMap& theta, const CVec& x, double tol, int max_iter = 30);

}  // namespace parking
