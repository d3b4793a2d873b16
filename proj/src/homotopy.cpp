#include "parking/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "parking/linalg.hpp"

namespace parking {

void TotalDegreeHomotopy::eval(const CVec& x, double t, CVec& h, CMat& hx, CVec& ht) const {
  CVec f;
  CMat jf;
  target_.eval_jacobian(x, f, jf);
  const int n = dim();
  const int d = target_.degree();
  CVec start(n);
  CMat jstart = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    cd p = std::pow(x(i), d - 1);
    start(i) = p * x(i) - 1.0;
    jstart(i, i) = static_cast<double>(d) * p;
  }
  CVec target = f - x;
  CMat jtarget = jf - CMat::Identity(n, n);
  h = (1.0 - t) * gamma_ * start + t * target;
  hx = (1.0 - t) * gamma_ * jstart + t * jtarget;
  ht = target - gamma_ * start;
}

void SegmentHomotopy::eval(const CVec& x, double t, CVec& h, CMat& hx, CVec& ht) const {
  CVec fa, fb;
  CMat ja, jb;
  a_.eval_jacobian(x, fa, ja);
  b_.eval_jacobian(x, fb, jb);
  const cd z = za_ + t * (zb_ - za_);
  const int n = dim();
  h = (1.0 - z) * fa + z * fb - x;
  hx = (1.0 - z) * ja + z * jb - CMat::Identity(n, n);
  ht = (zb_ - za_) * (fb - fa);
}

PathResult track_path(const Homotopy& hom, const CVec& x0, double t0, double t1, const TrackerConfig& cfg) {
  PathResult r;
  CVec x = x0;
  double t = t0;
  double step = std::min(cfg.h_initial, cfg.h_max);
  int accepts = 0;
  CVec h, ht;
  CMat hx;
  if (cfg.record_traces) r.trace.emplace_back(t, x);
  while (t < t1) {
    const bool last = step >= t1 - t;
    const double dt = last ? t1 - t : step;
    hom.eval(x, t, h, hx, ht);
    Eigen::PartialPivLU<CMat> lu(hx);
    CVec xp = x - dt * lu.solve(ht);
    const double tn = last ? t1 : t + dt;
    bool ok = false;
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < cfg.max_newton; ++it) {
      hom.eval(xp, tn, h, hx, ht);
      CVec delta = hx.partialPivLu().solve(h);
      if (!delta.allFinite()) break;
      xp -= delta;
      double nd = delta.norm();
      if (it > 0 && nd > cfg.max_contraction * prev) break;
      prev = nd;
      if (nd < cfg.tol_track * (1.0 + xp.norm())) {
        ok = true;
        break;
      }
    }
    if (ok) {
      x = xp;
      t = tn;
      ++r.steps;
      r.min_step = std::min(r.min_step, dt);
      if (cfg.record_traces) r.trace.emplace_back(t, x);
      if (++accepts >= 3) {
        step = std::min(2.0 * step, cfg.h_max);
        accepts = 0;
      }
      if (x.norm() > cfg.divergence_radius) {
        r.failure = "divergence";
        r.x = x;
        return r;
      }
    } else {
      step = 0.5 * std::min(step, dt);
      accepts = 0;
      ++r.rejects;
      if (step < cfg.h_min) {
        r.failure = "step floor";
        r.x = x;
        return r;
      }
    }
  }
  r.x = x;
  r.ok = true;
  return r;
}

std::vector<PathResult> track_all(const Homotopy& h, const std::vector<CVec>& starts, double t0, double t1,
                                  const TrackerConfig& cfg) {
  std::vector<PathResult> out(starts.size());
  const long n = static_cast<long>(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = track_path(h, starts[i], t0, t1, cfg);
  return out;
}

std::vector<PathResult> track_all_serial(const Homotopy& h, const std::vector<CVec>& starts, double t0, double t1,
                                         const TrackerConfig& cfg) {
  std::vector<PathResult> out(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) out[i] = track_path(h, starts[i], t0, t1, cfg);
  return out;
}

std::vector<CVec> total_degree_starts(int vars, int degree) {
  std::vector<CVec> out;
  std::vector<int> idx(vars, 0);
  while (true) {
    CVec x(vars);
    for (int i = 0; i < vars; ++i) x(i) = std::polar(1.0, 2.0 * std::numbers::pi * idx[i] / degree);
    out.push_back(x);
    int i = vars - 1;
    while (i >= 0 && ++idx[i] == degree) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

RefinedPoint refine_fixed_point(const CompiledMap& theta, const CVec& x0, double tol, int max_iter) {
  RefinedPoint r;
  r.x = x0;
  const int n = theta.vars();
  CVec f;
  CMat j;
  for (int it = 0; it < max_iter; ++it) {
    theta.eval_jacobian(r.x, f, j);
    CVec res = f - r.x;
    if (res.norm() < 0.01 * tol) break;
    CVec delta = (j - CMat::Identity(n, n)).partialPivLu().solve(res);
    if (!delta.allFinite()) break;
    r.x -= delta;
    if (delta.norm() < 1e-16 * (1.0 + r.x.norm())) break;
  }
  theta.eval_jacobian(r.x, f, j);
  r.residual = (f - r.x).norm();
  r.sigma_min = min_singular_value(j - CMat::Identity(n, n));
  return r;
}

}  // namespace parking
