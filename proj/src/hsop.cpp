#include "parking/hsop.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "parking/linalg.hpp"

namespace parking {

namespace {

// weakly decreasing length-n sequences of nonnegative integers with the given sum
void padded_partitions(int n, int sum, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> mu(n, 0);
  std::function<void(int, int, int)> rec = [&](int i, int left, int cap) {
    if (i == n) {
      if (left == 0) visit(mu);
      return;
    }
    for (int a = std::min(left, cap); a >= 0; --a) {
      if (a * (n - i) < left) break;
      mu[i] = a;
      rec(i + 1, left - a, a);
    }
  };
  rec(0, sum, sum);
}

long delta_sum(int n, int sum) {
  long total = 0;
  padded_partitions(n, sum, [&](const std::vector<int>& mu) {
    std::set<int> distinct(mu.begin(), mu.end());
    total += static_cast<long>(distinct.size()) - 1;
  });
  return total;
}

long odd_count(int n, int sum, int wanted, int alternative) {
  long total = 0;
  padded_partitions(n, sum, [&](const std::vector<int>& mu) {
    int odd = 0;
    for (int a : mu) odd += a % 2;
    if (odd == wanted || odd == alternative) ++total;
  });
  return total;
}

struct PhaseUnionFind {
  std::vector<int> parent;
  std::vector<long> pot;  // value(x) = value(parent) * zeta_L^{pot}
  std::vector<bool> dead;
  long L;
  PhaseUnionFind(std::size_t n, long l) : parent(n), pot(n, 0), dead(n, false), L(l) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  long mod(long v) const { return ((v % L) + L) % L; }
  std::pair<int, long> find(int x) {
    long p = 0;
    int r = x;
    while (parent[r] != r) {
      p += pot[r];
      r = parent[r];
    }
    int cur = x;
    long cp = p;
    while (parent[cur] != cur) {
      int next = parent[cur];
      long np = cp - pot[cur];
      parent[cur] = r;
      pot[cur] = mod(cp);
      cur = next;
      cp = np;
    }
    return {r, mod(p)};
  }
  // impose pot(u) - pot(v) = delta
  void unite(int u, int v, long delta) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      if (mod(pu - pv - delta) != 0) dead[ru] = true;
      return;
    }
    parent[ru] = rv;
    pot[ru] = mod(delta + pv - pu);
    dead[rv] = dead[rv] || dead[ru];
  }
};

// Equivariant maps C^vars -> C^vars for the monomial matrices of the simple generators.
std::vector<PolynomialMap> monomial_equivariant_maps(const ReflectionGroup& g, int vars, int degree) {
  auto monos = monomials_of_degree(vars, degree);
  std::map<Exponent, int> index;
  for (std::size_t j = 0; j < monos.size(); ++j) index[monos[j]] = static_cast<int>(j);
  const long L = g.phase_denominator();
  const int M = static_cast<int>(monos.size());
  PhaseUnionFind uf(static_cast<std::size_t>(vars) * M, L);
  for (ElementId s : g.simple_generators()) {
    std::vector<int> sigma;
    std::vector<long> p;
    g.monomial_form(s, sigma, p);
    std::vector<int> sinv(vars);
    for (int j = 0; j < vars; ++j) sinv[sigma[j]] = j;
    for (int b = 0; b < M; ++b) {
      const Exponent& beta = monos[b];
      Exponent alpha(vars);
      for (int l = 0; l < vars; ++l) alpha[l] = beta[sinv[l]];
      long pb = 0;
      for (int j = 0; j < vars; ++j) pb += p[j] * beta[j];
      int a = index.at(alpha);
      for (int i = 0; i < vars; ++i) {
        int si = sinv[i];
        uf.unite(i * M + a, si * M + b, p[si] - pb);
      }
    }
  }
  std::map<int, std::vector<std::pair<int, long>>> comps;
  for (int u = 0; u < vars * M; ++u) {
    auto [r, pu] = uf.find(u);
    comps[r].emplace_back(u, pu);
  }
  std::vector<PolynomialMap> out;
  for (const auto& [root, members] : comps) {
    if (uf.dead[root]) continue;
    PolynomialMap m = PolynomialMap::zero(vars, degree);
    double scale = 1.0 / std::sqrt(static_cast<double>(members.size()));
    for (auto [u, pu] : members) {
      cd phase = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(pu) / static_cast<double>(L));
      m.coords[u / M][monos[u % M]] = phase;
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Theta(y) = Q^T F(Q y) for an ambient map F on C^n.
class Projector {
 public:
  Projector(const Eigen::MatrixXd& q, int degree) : q_(q), n_(static_cast<int>(q.rows())), nv_(static_cast<int>(q.cols())) {
    for (int d = 0; d <= degree; ++d) {
      auto monos = monomials_of_degree(nv_, d);
      std::map<Exponent, int> idx;
      for (std::size_t j = 0; j < monos.size(); ++j) idx[monos[j]] = static_cast<int>(j);
      monos_.push_back(monos);
      index_.push_back(idx);
    }
  }

  // product of linear forms (Q_j . y)^{alpha_j} as a dense vector over degree-|alpha| monomials in y
  const CVec& expand(const Exponent& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    int deg = 0;
    for (int a : alpha) deg += a;
    CVec out;
    if (deg == 0) {
      out = CVec::Ones(1);
    } else {
      int j = 0;
      while (alpha[j] == 0) ++j;
      Exponent lower = alpha;
      --lower[j];
      CVec prev = expand(lower);
      out = CVec::Zero(static_cast<Eigen::Index>(monos_[deg].size()));
      for (std::size_t t = 0; t < monos_[deg - 1].size(); ++t) {
        if (prev(t) == cd(0)) continue;
        Exponent e = monos_[deg - 1][t];
        for (int a = 0; a < nv_; ++a) {
          if (q_(j, a) == 0.0) continue;
          ++e[a];
          out(index_[deg].at(e)) += prev(t) * q_(j, a);
          --e[a];
        }
      }
    }
    return memo_.emplace(alpha, std::move(out)).first->second;
  }

  CVec project(const PolynomialMap& f, int degree) {
    const std::size_t M = monos_[degree].size();
    CVec out = CVec::Zero(static_cast<Eigen::Index>(nv_ * M));
    for (int i = 0; i < n_; ++i)
      for (const auto& [alpha, c] : f.coords[i]) {
        const CVec& e = expand(alpha);
        for (int a = 0; a < nv_; ++a) {
          if (q_(i, a) == 0.0) continue;
          out.segment(a * M, M) += (c * q_(i, a)) * e;
        }
      }
    return out;
  }

 private:
  Eigen::MatrixXd q_;
  int n_, nv_;
  std::vector<std::vector<Exponent>> monos_;
  std::vector<std::map<Exponent, int>> index_;
  std::map<Exponent, CVec> memo_;
};

}  // namespace

long hom_dim_formula(const ReflectionGroup& g, int k) {
  int n = g.letters();
  switch (g.family()) {
    case Family::A: return delta_sum(n, k * n + 1) - delta_sum(n, k * n);
    case Family::B: return odd_count(n, 2 * n * k + 1, 1, 1);
    case Family::D: return odd_count(n, (2 * n - 2) * k + 1, 1, 1);
    case Family::I2: return k + 1;
  }
  return 0;
}

long hom_dim_corrected(const ReflectionGroup& g, int k) {
  switch (g.family()) {
    case Family::D: {
      // on even sign changes the odd-support characters of S and its complement coincide
      int n = g.letters();
      return odd_count(n, (2 * n - 2) * k + 1, 1, n - 1);
    }
    case Family::I2:
      // x^a y^b with a - b = 1 + jm, |j| <= k, parity forcing j = k mod 2 only for odd m
      return g.m() % 2 == 0 ? 2 * k + 1 : k + 1;
    default: return hom_dim_formula(g, k);
  }
}

long hom_dim_character(const ReflectionGroup& g, int k) {
  int D = k * g.coxeter_number() + 1;
  cd total = 0;
  for (std::uint32_t w = 0; w < g.order(); ++w) {
    const auto& angles = g.eigen_angles(ElementId{w});
    std::vector<cd> h(D + 1, cd(0));
    h[0] = 1;
    cd trace = 0;
    for (const auto& a : angles) {
      cd mu = std::conj(a.value());  // eigenvalue on the dual
      trace += a.value();
      for (int d = 1; d <= D; ++d) h[d] += mu * h[d - 1];
    }
    total += h[D] * trace;
  }
  double v = total.real() / static_cast<double>(g.order());
  return std::lround(v);
}

EquivariantMapSpace hom_basis_for_degree(const ReflectionGroup& g, int degree) {
  EquivariantMapSpace space;
  space.degree = degree;
  if (g.family() != Family::A) {
    space.basis = monomial_equivariant_maps(g, g.rank(), degree);
    space.dim = static_cast<int>(space.basis.size());
    return space;
  }
  auto ambient = monomial_equivariant_maps(g, g.letters(), degree);
  Projector proj(g.typeA_projection(), degree);
  int nv = g.rank();
  std::size_t len = nv * monomials_of_degree(nv, degree).size();
  CMat span(static_cast<Eigen::Index>(len), static_cast<Eigen::Index>(ambient.size()));
  for (std::size_t i = 0; i < ambient.size(); ++i) span.col(i) = proj.project(ambient[i], degree);
  CMat basis = orthonormal_column_basis(span);
  for (Eigen::Index c = 0; c < basis.cols(); ++c)
    space.basis.push_back(PolynomialMap::from_coefficients(nv, degree, basis.col(c)));
  space.dim = static_cast<int>(basis.cols());
  return space;
}

EquivariantMapSpace hom_basis_bruteforce(const ReflectionGroup& g, int k) {
  return hom_basis_for_degree(g, k * g.coxeter_number() + 1);
}

PolynomialMap diagonal_hsop(const ReflectionGroup& g, int k) {
  if (g.family() == Family::A && g.letters() > 2)
    throw ConfigError("no diagonal h.s.o.p. for the symmetric group beyond rank 1");
  int D = k * g.coxeter_number() + 1;
  int n = g.rank();
  PolynomialMap m = PolynomialMap::zero(n, D);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = D;
    m.coords[i][e] = 1.0;
  }
  return m;
}

PolynomialMap sample_theta(const EquivariantMapSpace& space, std::uint64_t seed) {
  if (space.basis.empty()) throw InvariantError("empty equivariant space");
  UnitRng rng(seed);
  PolynomialMap m = PolynomialMap::zero(space.basis.front().vars, space.degree);
  for (const auto& b : space.basis) m.add_scaled(b, rng.unit_disc());
  return m;
}

bool space_contains(const EquivariantMapSpace& space, const PolynomialMap& m) {
  if (space.basis.empty()) return m.term_count() == 0;
  if (m.vars != space.basis.front().vars || m.degree != space.degree)
    throw std::invalid_argument("map and space differ in shape");
  CVec target = m.coefficient_vector();
  CMat a(target.size(), static_cast<Eigen::Index>(space.basis.size()) + 1);
  for (std::size_t i = 0; i < space.basis.size(); ++i) a.col(i) = space.basis[i].coefficient_vector();
  a.col(space.basis.size()) = target;
  return numeric_rank(a) == numeric_rank(a.leftCols(space.basis.size()));
}

std::vector<PolynomialMap> explicit_generators(const ReflectionGroup& g, int k) {
  int D = k * g.coxeter_number() + 1;
  std::vector<PolynomialMap> out;
  if (g.family() == Family::I2) {
    int m = g.m();
    for (int j = 0; j <= k; ++j) {
      int a = (k - j) * m + 1, b = j * m;
      PolynomialMap t = PolynomialMap::zero(2, D);
      t.coords[0][{a, b}] = 1.0;
      t.coords[1][{b, a}] = 1.0;
      out.push_back(t);
    }
    return out;
  }
  if (g.family() == Family::A) throw ConfigError("explicit generators are given for B, D and I2");
  int n = g.letters();
  padded_partitions(n, D, [&](const std::vector<int>& mu) {
    int odd = 0, odd_val = 0;
    for (int a : mu)
      if (a % 2) {
        ++odd;
        odd_val = a;
      }
    if (odd != 1) return;
    std::vector<int> rest;
    bool skipped = false;
    for (int a : mu) {
      if (a == odd_val && !skipped) {
        skipped = true;
        continue;
      }
      rest.push_back(a);
    }
    std::sort(rest.begin(), rest.end());
    PolynomialMap t = PolynomialMap::zero(n, D);
    for (int i = 0; i < n; ++i) {
      std::vector<int> arr = rest;
      do {
        Exponent e(n, 0);
        e[i] = odd_val;
        for (int j = 0, c = 0; j < n; ++j)
          if (j != i) e[j] = arr[c++];
        t.coords[i][e] = 1.0;
      } while (std::next_permutation(arr.begin(), arr.end()));
    }
    out.push_back(t);
  });
  return out;
}

}  // namespace parking
