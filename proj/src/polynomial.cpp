#include "parking/polynomial.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace parking {

std::vector<Exponent> monomials_of_degree(int vars, int degree) {
  std::vector<Exponent> out;
  Exponent e(vars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (vars == 0) return {Exponent{}};
  rec(0, degree);
  return out;
}

PolynomialMap PolynomialMap::zero(int vars, int degree) {
  PolynomialMap m;
  m.vars = vars;
  m.degree = degree;
  m.coords.resize(vars);
  return m;
}

bool PolynomialMap::is_homogeneous() const {
  for (const auto& c : coords)
    for (const auto& [e, v] : c) {
      int s = 0;
      for (int a : e) s += a;
      if (s != degree || static_cast<int>(e.size()) != vars) return false;
    }
  return true;
}

PolynomialMap& PolynomialMap::add_scaled(const PolynomialMap& o, const cd& s) {
  if (o.vars != vars || o.degree != degree) throw std::invalid_argument("incompatible polynomial maps");
  for (int i = 0; i < vars; ++i)
    for (const auto& [e, v] : o.coords[i]) {
      cd& t = coords[i][e];
      t += s * v;
    }
  return *this;
}

PolynomialMap PolynomialMap::scaled(const cd& s) const {
  PolynomialMap m = *this;
  for (auto& c : m.coords)
    for (auto& [e, v] : c) v *= s;
  return m;
}

CVec PolynomialMap::coefficient_vector() const {
  auto monos = monomials_of_degree(vars, degree);
  CVec out = CVec::Zero(static_cast<Eigen::Index>(vars * monos.size()));
  for (int i = 0; i < vars; ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      auto it = coords[i].find(monos[j]);
      if (it != coords[i].end()) out(i * monos.size() + j) = it->second;
    }
  return out;
}

PolynomialMap PolynomialMap::from_coefficients(int vars, int degree, const CVec& c) {
  auto monos = monomials_of_degree(vars, degree);
  PolynomialMap m = zero(vars, degree);
  if (c.size() != static_cast<Eigen::Index>(vars * monos.size())) throw std::invalid_argument("coefficient length");
  for (int i = 0; i < vars; ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      cd v = c(i * monos.size() + j);
      if (std::abs(v) > 1e-14) m.coords[i][monos[j]] = v;
    }
  return m;
}

std::size_t PolynomialMap::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coords) n += c.size();
  return n;
}

CompiledMap::CompiledMap(const PolynomialMap& m) : vars_(m.vars), degree_(m.degree) {
  exps_.resize(vars_);
  coefs_.resize(vars_);
  for (int i = 0; i < vars_; ++i)
    for (const auto& [e, v] : m.coords[i]) {
      if (v == cd(0)) continue;
      exps_[i].insert(exps_[i].end(), e.begin(), e.end());
      coefs_[i].push_back(v);
    }
}

namespace {

void power_table(const CVec& x, int degree, std::vector<cd>& pw) {
  const int n = static_cast<int>(x.size());
  pw.assign(static_cast<std::size_t>(n) * (degree + 1), cd(1));
  for (int j = 0; j < n; ++j)
    for (int e = 1; e <= degree; ++e) pw[j * (degree + 1) + e] = pw[j * (degree + 1) + e - 1] * x(j);
}

}  // namespace

CVec CompiledMap::eval(const CVec& x) const {
  std::vector<cd> pw;
  power_table(x, degree_, pw);
  CVec f = CVec::Zero(vars_);
  const int stride = degree_ + 1;
  for (int i = 0; i < vars_; ++i) {
    const auto& ex = exps_[i];
    for (std::size_t t = 0; t < coefs_[i].size(); ++t) {
      cd mono = coefs_[i][t];
      for (int j = 0; j < vars_; ++j) mono *= pw[j * stride + ex[t * vars_ + j]];
      f(i) += mono;
    }
  }
  return f;
}

void CompiledMap::eval_jacobian(const CVec& x, CVec& f, CMat& jac) const {
  std::vector<cd> pw;
  power_table(x, degree_, pw);
  f = CVec::Zero(vars_);
  jac = CMat::Zero(vars_, vars_);
  const int stride = degree_ + 1;
  cd factors[8];
  for (int i = 0; i < vars_; ++i) {
    const auto& ex = exps_[i];
    for (std::size_t t = 0; t < coefs_[i].size(); ++t) {
      const int* a = &ex[t * vars_];
      cd mono = coefs_[i][t];
      for (int j = 0; j < vars_; ++j) {
        factors[j] = pw[j * stride + a[j]];
        mono *= factors[j];
      }
      f(i) += mono;
      for (int j = 0; j < vars_; ++j) {
        if (a[j] == 0) continue;
        cd d = coefs_[i][t] * static_cast<double>(a[j]) * pw[j * stride + a[j] - 1];
        for (int l = 0; l < vars_; ++l)
          if (l != j) d *= factors[l];
        jac(i, j) += d;
      }
    }
  }
}

UnitRng::UnitRng(std::uint64_t seed) : engine_(seed) {}

double UnitRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

cd UnitRng::unit_disc() {
  double r = std::sqrt(uniform());
  double t = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, t);
}

cd UnitRng::unit_circle() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

CVec UnitRng::unit_vector(int n) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = cd(2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0);
  double nv = v.norm();
  return nv > 0 ? CVec(v / nv) : v;
}

double equivariance_error(const ReflectionGroup& g, const PolynomialMap& m, std::uint64_t seed, int panel) {
  CompiledMap cm(m);
  UnitRng rng(seed);
  double worst = 0;
  for (int p = 0; p < panel; ++p) {
    CVec v = rng.unit_vector(g.rank());
    CVec tv = cm.eval(v);
    for (ElementId s : g.simple_generators()) {
      CVec lhs = cm.eval(g.act(s, v));
      CVec rhs = g.act(s, tv);
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

}  // namespace parking
