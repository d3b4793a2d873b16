#include "parking/locus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "parking/hsop.hpp"
#include "parking/kernels.hpp"
#include "parking/linalg.hpp"

namespace parking {

PointMatcher::PointMatcher(const std::vector<LocusPoint>& pts) : pts_(&pts) {
  int n = pts.empty() ? 0 : static_cast<int>(pts.front().x.size());
  dir_ = CVec(n);
  for (int i = 0; i < n; ++i) dir_(i) = cd(1.0 + 0.618 * i, 0.414 + 0.3 * i);
  if (n > 0) dir_ /= dir_.norm();
  sorted_.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) sorted_.emplace_back(key(pts[i].x), static_cast<std::uint32_t>(i));
  std::sort(sorted_.begin(), sorted_.end());
}

double PointMatcher::key(const CVec& x) const { return dir_.dot(x).real(); }

long PointMatcher::match(const CVec& x, double tol, double sep) const {
  const double kx = key(x);
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(kx - sep, std::uint32_t{0}));
  long found = -1;
  for (; it != sorted_.end() && it->first <= kx + sep; ++it) {
    double dist = ((*pts_)[it->second].x - x).norm();
    if (dist < tol) {
      if (found >= 0) return -2;
      found = it->second;
    } else if (dist < sep) {
      return -2;
    }
  }
  return found;
}

double PointMatcher::min_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sorted_.size(); ++i)
    for (std::size_t j = i + 1; j < sorted_.size() && sorted_[j].first - sorted_[i].first < best; ++j)
      best = std::min(best, ((*pts_)[sorted_[i].second].x - (*pts_)[sorted_[j].second].x).norm());
  return best;
}

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<LocusPoint> as_points(const std::vector<CVec>& xs) {
  std::vector<LocusPoint> pts(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) pts[i].x = xs[i];
  return pts;
}

double min_pairwise_distance(const std::vector<CVec>& xs) {
  auto pts = as_points(xs);
  return PointMatcher(pts).min_distance();
}

}  // namespace

LocusSolution solve_diagonal(const ReflectionGroup& g, int k) {
  PolynomialMap theta = diagonal_hsop(g, k);
  const int kh = k * g.coxeter_number();
  const int n = g.rank();
  std::vector<cd> values;
  for (int j = 0; j < kh; ++j) values.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / kh));
  values.push_back(0.0);
  LocusSolution sol;
  sol.k = k;
  sol.theta_ref = "diagonal";
  sol.expected = ipow(kh + 1, n);
  std::vector<int> idx(n, 0);
  while (true) {
    LocusPoint p;
    p.x = CVec(n);
    for (int i = 0; i < n; ++i) p.x(i) = values[idx[i]];
    sol.points.push_back(p);
    int i = n - 1;
    while (i >= 0 && ++idx[i] == kh + 1) idx[i--] = 0;
    if (i < 0) break;
  }
  TrackerConfig cfg;
  certify(theta, sol, cfg);
  return sol;
}

void certify(const PolynomialMap& theta, LocusSolution& sol, const TrackerConfig& cfg) {
  CompiledMap cm(theta);
  const long n = static_cast<long>(sol.points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    RefinedPoint r = refine_fixed_point(cm, sol.points[i].x, cfg.tol_refine);
    sol.points[i].x = r.x;
    sol.points[i].residual = r.residual;
    sol.points[i].sigma_min = r.sigma_min;
    sol.points[i].origin = r.x.norm() < cfg.tol_match;
  }
  sol.max_residual = 0;
  sol.min_sigma = std::numeric_limits<double>::infinity();
  for (const auto& p : sol.points) {
    sol.max_residual = std::max(sol.max_residual, p.residual);
    sol.min_sigma = std::min(sol.min_sigma, p.sigma_min);
  }
  sol.min_separation = PointMatcher(sol.points).min_distance();
  sol.certified = false;
  if (sol.points.size() != sol.expected)
    sol.failure = "point count " + std::to_string(sol.points.size()) + " != " + std::to_string(sol.expected);
  else if (!(sol.max_residual < cfg.tol_refine))
    sol.failure = "residual above refinement tolerance";
  else if (!(sol.min_sigma > cfg.sigma_floor))
    sol.failure = "singular fixed point";
  else if (!(sol.min_separation > cfg.separation))
    sol.failure = "points not separated";
  else {
    sol.certified = true;
    sol.failure.clear();
  }
}

LocusSolution solve_homotopy(const ReflectionGroup& g, const PolynomialMap& theta, int k, const TrackerConfig& cfg) {
  const int D = k * g.coxeter_number() + 1;
  const int n = g.rank();
  if (theta.vars != n || theta.degree != D) throw ConfigError("theta must have rank-many variables and degree kh+1");
  CompiledMap cm(theta);
  UnitRng rng(cfg.seed);
  auto starts = total_degree_starts(n, D);
  LocusSolution sol;
  sol.k = k;
  sol.expected = ipow(D, n);
  for (int attempt = 1; attempt <= cfg.max_retries; ++attempt) {
    sol.gamma_attempts = attempt;
    TotalDegreeHomotopy hom(cm, rng.unit_circle());
    auto paths = cfg.parallel ? track_all(hom, starts, 0.0, 1.0, cfg) : track_all_serial(hom, starts, 0.0, 1.0, cfg);
    std::size_t failed = 0;
    sol.points.clear();
    for (const auto& p : paths) {
      if (!p.ok) {
        ++failed;
        continue;
      }
      LocusPoint lp;
      lp.x = p.x;
      sol.points.push_back(lp);
    }
    certify(theta, sol, cfg);
    if (failed > 0) {
      sol.certified = false;
      sol.failure = std::to_string(failed) + " paths failed";
    }
    if (sol.certified) break;
  }
  return sol;
}

bool build_action_table(const ReflectionGroup& g, LocusSolution& sol, const TrackerConfig& cfg) {
  PointMatcher matcher(sol.points);
  const std::size_t n = sol.points.size();
  auto table_for = [&](auto&& image) -> std::vector<std::uint32_t> {
    std::vector<std::uint32_t> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      CVec y = image(sol.points[i].x);
      long m = matcher.match(y, cfg.tol_match * std::max(1.0, y.norm()), cfg.separation);
      if (m < 0) return {};
      t[i] = static_cast<std::uint32_t>(m);
    }
    std::vector<bool> seen(n, false);
    for (auto v : t) {
      if (seen[v]) return {};
      seen[v] = true;
    }
    return t;
  };
  sol.generator_tables.clear();
  sol.action_closed = false;
  for (ElementId s : g.simple_generators()) {
    auto t = table_for([&](const CVec& x) { return g.act(s, x); });
    if (t.empty()) {
      sol.failure = "generator image unmatched";
      return false;
    }
    sol.generator_tables.push_back(std::move(t));
  }
  const cd zeta = std::polar(1.0, 2.0 * std::numbers::pi / (sol.k * g.coxeter_number()));
  sol.rotation_table = table_for([&](const CVec& x) { return CVec(zeta * x); });
  if (sol.rotation_table.empty()) {
    sol.failure = "rotation image unmatched";
    return false;
  }
  try {
    GSet s = locus_gset(g, sol);
    sol.action_closed = s.is_action();
  } catch (const InvariantError& e) {
    sol.failure = e.what();
    sol.action_closed = false;
  }
  return sol.action_closed;
}

GSet locus_gset(const ReflectionGroup& g, const LocusSolution& sol) {
  return GSet::from_generators(g, sol.k, sol.points.size(), sol.generator_tables, sol.rotation_table);
}

long subspace_fixed_count(const ReflectionGroup& g, const LocusSolution& sol, FlatId x, ElementId w, long d,
                          double tol) {
  const CMat& basis = g.flat(x).basis;
  const cd lambda = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(d) / (sol.k * g.coxeter_number()));
  long count = 0;
  for (const auto& p : sol.points) {
    double scale = std::max(1.0, p.x.norm());
    if (distance_to_span(basis, p.x) >= tol * scale) continue;
    if ((g.act(w, p.x) - lambda * p.x).norm() >= tol * scale) continue;
    ++count;
  }
  return count;
}

FlatId point_flat(const ReflectionGroup& g, const CVec& q, double tol) {
  FlatId x = g.whole_space();
  double scale = std::max(1.0, q.norm());
  for (ElementId t : g.reflections())
    if ((g.act(t, q) - q).norm() < tol * scale) x = g.meet(x, g.fixed_space(t));
  return x;
}

StabilizerDescriptor stabilizer_of_point(const ReflectionGroup& g, const GSet& s, const LocusSolution& sol,
                                         std::size_t p) {
  return describe_stabilizer(s, p, point_flat(g, sol.points[p].x));
}

TransportResult transport_action(const ReflectionGroup& g, const PolynomialMap& theta0, const LocusSolution& sol0,
                                 const PolynomialMap& theta1, const LocusSolution& sol1, int steps,
                                 const TrackerConfig& cfg) {
  TransportResult res;
  if (sol0.size() != sol1.size() || sol0.size() == 0) {
    res.failure = "loci differ in size";
    return res;
  }
  if (steps < 1) throw ConfigError("steps must be positive");
  CompiledMap a(theta0), b(theta1);
  UnitRng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = sol0.size();
  const int vars = a.vars();

  std::vector<CVec> xs;
  auto run_segment = [&](cd za, cd zb, std::string& why) -> bool {
    SegmentHomotopy hom(a, b, za, zb);
    for (int c = 0; c < steps; ++c) {
      double t0 = static_cast<double>(c) / steps, t1 = static_cast<double>(c + 1) / steps;
      auto paths = cfg.parallel ? track_all(hom, xs, t0, t1, cfg) : track_all_serial(hom, xs, t0, t1, cfg);
      for (std::size_t i = 0; i < n; ++i) {
        if (!paths[i].ok) {
          why = "path " + std::to_string(i) + ": " + paths[i].failure;
          return false;
        }
        xs[i] = paths[i].x;
      }
      ++res.checkpoints;
      double dist = min_pairwise_distance(xs);
      res.min_path_distance = std::min(res.min_path_distance, dist);
      CVec h, ht;
      CMat hx;
      for (std::size_t i = 0; i < n; ++i) {
        hom.eval(xs[i], t1, h, hx, ht);
        res.min_sigma = std::min(res.min_sigma, min_singular_value(hx));
      }
      if (cfg.record_traces)
        for (std::size_t i = 0; i < n; ++i) res.traces[i].push_back(xs[i]);
      if (!(dist > cfg.separation)) {
        why = "paths merged";
        return false;
      }
      if (!(res.min_sigma > cfg.sigma_floor)) {
        why = "checkpoint lost regularity";
        return false;
      }
    }
    return true;
  };

  bool done = false;
  for (int attempt = 0; attempt <= cfg.max_retries && !done; ++attempt) {
    xs.clear();
    for (const auto& p : sol0.points) xs.push_back(p.x);
    res.min_path_distance = std::numeric_limits<double>::infinity();
    res.min_sigma = std::numeric_limits<double>::infinity();
    res.checkpoints = 0;
    res.traces.assign(cfg.record_traces ? n : 0, {});
    if (cfg.record_traces)
      for (std::size_t i = 0; i < n; ++i) res.traces[i].push_back(xs[i]);
    std::vector<cd> route{0.0, 1.0};
    if (attempt > 0) {
      double im = (0.1 + 0.5 * rng.uniform()) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      route = {0.0, cd(0.5, im), 1.0};
      res.detours = attempt;
    }
    std::string why;
    bool ok = true;
    for (std::size_t s = 0; s + 1 < route.size() && ok; ++s) ok = run_segment(route[s], route[s + 1], why);
    if (ok)
      done = true;
    else
      res.failure = why;
  }
  if (!done) return res;

  std::vector<LocusPoint> ends(n);
  for (std::size_t i = 0; i < n; ++i) ends[i].x = refine_fixed_point(b, xs[i], cfg.tol_refine).x;
  PointMatcher matcher(sol1.points);
  res.map.assign(n, 0);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    long m = matcher.match(ends[i].x, cfg.tol_match * std::max(1.0, ends[i].x.norm()), cfg.separation);
    if (m < 0 || hit[m]) {
      res.failure = "endpoint " + std::to_string(i) + " unmatched";
      res.map.clear();
      return res;
    }
    hit[m] = true;
    res.map[i] = static_cast<std::uint32_t>(m);
  }
  (void)vars;
  GSet s0 = locus_gset(g, sol0), s1 = locus_gset(g, sol1);
  res.equivariant = verify_equivariance(s0, s1, res.map);
  auto st0 = kernels::all_stabilizers(s0);
  auto st1 = kernels::all_stabilizers(s1);
  res.profiles_match = true;
  for (std::size_t i = 0; i < n; ++i)
    if (st0[i] != st1[res.map[i]]) res.profiles_match = false;
  res.success = res.equivariant && res.profiles_match && res.min_path_distance > cfg.separation;
  if (!res.success && res.failure.empty()) res.failure = "transported map is not equivariant";
  if (res.success) res.failure.clear();
  return res;
}

HsopVerdict regular_sequence_heuristic(const ReflectionGroup& g, const PolynomialMap& theta, int k,
                                       const TrackerConfig& cfg) {
  HsopVerdict v;
  LocusSolution sol = solve_homotopy(g, theta, k, cfg);
  v.points = sol.points.size();
  v.expected = sol.expected;
  v.accept = sol.certified;
  v.reason = sol.certified ? "all paths finite, simple and distinct" : sol.failure;
  return v;
}

}  // namespace parking
