#include "parking/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "parking/kernels.hpp"
#include "parking/linalg.hpp"
#include "parking/parkfn.hpp"

namespace parking {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

long permutation_character(const GSet& s, ElementId w, long d) {
  return static_cast<long>(kernels::fixed_count(s, w, d));
}

long predicted_character(const ReflectionGroup& g, int k, ElementId w, long d) {
  long kh = static_cast<long>(k) * g.coxeter_number();
  return ipow(kh + 1, g.multiplicity(w, Angle::make(d, kh)));
}

CharacterReport compare_with_prediction(const GSet& s) {
  const auto& g = s.group();
  CharacterReport rep;
  rep.set_size = s.size();
  for (const auto& cl : g.conjugacy_classes())
    for (long d = 0; d < s.kh(); ++d) {
      CharacterRow row{cl.rep, cl.size, d, permutation_character(s, cl.rep, d), predicted_character(g, s.k(), cl.rep, d)};
      if (row.observed != row.predicted) {
        rep.pass = false;
        ++rep.mismatches;
      }
      rep.rows.push_back(row);
    }
  return rep;
}

CharacterReport verify_weak(const ReflectionGroup& g, int k) {
  ParkSpace park(g, k);
  return compare_with_prediction(park.to_gset());
}

QPolynomial::QPolynomial(std::vector<long long> c) : c_(std::move(c)) {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::q_integer(long b) { return QPolynomial(std::vector<long long>(b, 1)); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPolynomial(r);
}

QPolynomial QPolynomial::exact_div(const QPolynomial& o) const {
  if (o.c_.back() != 1) throw InvariantError("divisor must be monic");
  std::vector<long long> rem = c_;
  int dq = degree() - o.degree();
  if (dq < 0) throw InvariantError("polynomial not divisible");
  std::vector<long long> q(dq + 1, 0);
  for (int i = dq; i >= 0; --i) {
    long long coef = rem[i + o.degree()];
    q[i] = coef;
    for (int j = 0; j <= o.degree(); ++j) rem[i + j] -= coef * o.c_[j];
  }
  for (long long v : rem)
    if (v != 0) throw InvariantError("polynomial not divisible");
  return QPolynomial(q);
}

cd QPolynomial::eval(const cd& q) const {
  cd r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + static_cast<double>(*it);
  return r;
}

long long QPolynomial::at_one() const { return std::accumulate(c_.begin(), c_.end(), 0LL); }

long fuss_catalan(const ReflectionGroup& g, int k) {
  long kh = static_cast<long>(k) * g.coxeter_number();
  long num = 1, den = 1;
  for (int d : g.degrees()) {
    num *= kh + d;
    den *= d;
    long gg = std::gcd(num, den);
    num /= gg;
    den /= gg;
  }
  if (den != 1) throw InvariantError("Fuss-Catalan product is not integral");
  return num;
}

QPolynomial q_fuss_catalan(const ReflectionGroup& g, int k) {
  long kh = static_cast<long>(k) * g.coxeter_number();
  QPolynomial p(std::vector<long long>{1});
  for (int d : g.degrees()) p = p * QPolynomial::q_integer(kh + d);
  for (int d : g.degrees()) p = p.exact_div(QPolynomial::q_integer(d));
  return p;
}

long q_fuss_catalan_at_root(const ReflectionGroup& g, int k, long d) {
  long kh = static_cast<long>(k) * g.coxeter_number();
  long e0 = kh / std::gcd(((d % kh) + kh) % kh, kh);  // order of zeta^d
  // [a]_q vanishes at a primitive e0-th root (e0 > 1) iff e0 | a
  int zeros = 0;
  for (int di : g.degrees()) {
    if (e0 > 1 && (kh + di) % e0 == 0) ++zeros;
    if (e0 > 1 && di % e0 == 0) --zeros;
  }
  if (zeros > 0) return 0;
  if (zeros < 0) throw InvariantError("q-Fuss-Catalan has a pole at a root of unity");
  // factors with e0 not dividing d_i evaluate to 1 because q^{kh} = 1; the rest tend to (kh+d_i)/d_i
  long num = 1, den = 1;
  for (int di : g.degrees()) {
    if (di % e0 != 0) continue;
    num *= kh + di;
    den *= di;
    long gg = std::gcd(num, den);
    num /= gg;
    den /= gg;
  }
  if (den != 1) throw InvariantError("root-of-unity evaluation is not integral");
  return num;
}

CspReport verify_csp(const ReflectionGroup& g, int k) {
  NoncrossingData nc(g, k);
  long kh = static_cast<long>(k) * g.coxeter_number();
  CspReport rep;
  rep.total = static_cast<long>(nc.chains().size());
  long fix_sum = 0;
  for (long d = 0; d < kh; ++d) {
    long fixed = 0;
    for (std::size_t i = 0; i < nc.chains().size(); ++i) {
      std::size_t j = i;
      for (long s = 0; s < d; ++s) j = nc.rotated(j);
      if (j == i) ++fixed;
    }
    CspRow row{d, fixed, q_fuss_catalan_at_root(g, k, d)};
    if (row.fixed != row.predicted) rep.pass = false;
    fix_sum += fixed;
    rep.rows.push_back(row);
  }
  std::vector<bool> seen(nc.chains().size(), false);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) continue;
    ++rep.orbits_direct;
    for (std::size_t j = i; !seen[j]; j = nc.rotated(j)) seen[j] = true;
  }
  rep.orbits_burnside = fix_sum / kh;
  if (fix_sum % kh != 0 || rep.orbits_burnside != rep.orbits_direct) rep.pass = false;
  return rep;
}

long coset_character(const ReflectionGroup& g, FlatId x, ElementId w) {
  const auto& par = g.parabolic_subgroup(x);
  std::vector<bool> in(g.order(), false);
  for (ElementId u : par) in[u.value] = true;
  std::vector<bool> covered(g.order(), false);
  long count = 0;
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    if (covered[u]) continue;
    for (ElementId p : par) covered[g.mul(ElementId{u}, p).value] = true;
    // w u W_X = u W_X iff u^{-1} w u in W_X
    if (in[g.mul(g.mul(g.inv(ElementId{u}), w), ElementId{u}).value]) ++count;
  }
  return count;
}

std::vector<std::vector<FlatId>> flat_orbits(const ReflectionGroup& g) {
  std::vector<bool> seen(g.num_flats(), false);
  std::vector<std::vector<FlatId>> out;
  for (std::uint32_t x = 0; x < g.num_flats(); ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> orb;
    for (std::uint32_t w = 0; w < g.order(); ++w) orb.insert(g.flat_act(ElementId{w}, FlatId{x}).value);
    std::vector<FlatId> o;
    for (auto y : orb) {
      seen[y] = true;
      o.push_back(FlatId{y});
    }
    out.push_back(o);
  }
  return out;
}

int coset_character_rank(const ReflectionGroup& g) {
  const long long p = 1000000007LL;
  auto orbits = flat_orbits(g);
  const auto& classes = g.conjugacy_classes();
  std::vector<std::vector<long long>> m;
  for (const auto& o : orbits) {
    std::vector<long long> row;
    for (const auto& cl : classes) row.push_back(coset_character(g, o.front(), cl.rep) % p);
    m.push_back(row);
  }
  auto pw = [&](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  std::size_t cols = classes.size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long long inv = pw(m[rank][c], p - 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      long long f = m[r][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<Root> positive_roots(const ReflectionGroup& g) {
  if (g.family() == Family::I2) throw ConfigError("root poset needs a crystallographic family");
  int n = g.letters();
  auto vec = [&](int i, int si, int j, int sj) {
    std::vector<int> v(n, 0);
    v[i] += si;
    if (j >= 0) v[j] += sj;
    return v;
  };
  std::vector<std::vector<int>> simple;
  for (int i = 0; i + 1 < n; ++i) simple.push_back(vec(i, 1, i + 1, -1));
  if (g.family() == Family::B) simple.push_back(vec(n - 1, 1, -1, 0));
  if (g.family() == Family::D) simple.push_back(vec(n - 2, 1, n - 1, 1));
  Eigen::MatrixXd sm(n, simple.size());
  for (std::size_t c = 0; c < simple.size(); ++c)
    for (int r = 0; r < n; ++r) sm(r, c) = simple[c][r];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sm);

  auto make = [&](std::vector<int> amb, GroupElement refl) {
    Eigen::VectorXd b(n);
    for (int r = 0; r < n; ++r) b(r) = amb[r];
    Eigen::VectorXd x = qr.solve(b);
    Root root;
    root.ambient = amb;
    for (Eigen::Index i = 0; i < x.size(); ++i) root.simple.push_back(static_cast<int>(std::lround(x(i))));
    for (int r = 0; r < n; ++r) {
      long s = 0;
      for (std::size_t c = 0; c < simple.size(); ++c) s += static_cast<long>(simple[c][r]) * root.simple[c];
      if (s != amb[r]) throw InvariantError("root not an integer combination of simple roots");
    }
    root.reflection = g.find(refl);
    return root;
  };
  auto base = [&]() {
    GroupElement e;
    e.images.resize(n);
    std::iota(e.images.begin(), e.images.end(), 0);
    e.signs.assign(n, 1);
    return e;
  };
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GroupElement t = base();
      std::swap(t.images[i], t.images[j]);
      out.push_back(make(vec(i, 1, j, -1), t));
      if (g.family() != Family::A) {
        t.signs[i] = t.signs[j] = -1;
        out.push_back(make(vec(i, 1, j, 1), t));
      }
    }
  if (g.family() == Family::B)
    for (int i = 0; i < n; ++i) {
      GroupElement t = base();
      t.signs[i] = -1;
      out.push_back(make(vec(i, 1, -1, 0), t));
    }
  for (const auto& r : out)
    for (int c : r.simple)
      if (c < 0) throw InvariantError("positive root with a negative simple coordinate");
  return out;
}

bool root_leq(const Root& a, const Root& b) {
  for (std::size_t i = 0; i < a.simple.size(); ++i)
    if (b.simple[i] < a.simple[i]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> root_antichains(const std::vector<Root>& roots) {
  std::size_t R = roots.size();
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 0; mask < (1UL << R); ++mask) {
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i < R; ++i)
      if (mask >> i & 1) a.push_back(i);
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y)
        if (x != y && root_leq(roots[a[x]], roots[a[y]])) ok = false;
    if (ok) out.push_back(a);
  }
  return out;
}

KrewerasReport verify_kreweras(const ReflectionGroup& g) {
  auto roots = positive_roots(g);
  auto antichains = root_antichains(roots);
  NoncrossingData nc(g, 1);
  KrewerasReport rep;
  rep.antichains = static_cast<long>(antichains.size());
  std::set<std::uint32_t> nonnesting;
  for (const auto& a : antichains) {
    FlatId x = g.whole_space();
    for (auto i : a) x = g.meet(x, g.fixed_space(roots[i].reflection));
    nonnesting.insert(x.value);
  }
  if (nonnesting.size() != antichains.size()) rep.pass = false;  // antichain -> flat must be injective
  if (rep.antichains != fuss_catalan(g, 1)) rep.pass = false;
  for (const auto& orbit : flat_orbits(g)) {
    KrewerasRow row{orbit.front(), orbit.size(), 0, 0};
    for (FlatId x : orbit) {
      if (nc.is_noncrossing_flat(x)) ++row.noncrossing;
      if (nonnesting.count(x.value)) ++row.nonnesting;
    }
    if (row.noncrossing != row.nonnesting) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace parking
