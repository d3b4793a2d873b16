#include "parking/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <set>
#include <sstream>

#include "parking/linalg.hpp"

namespace parking {

namespace {

struct SignedUnionFind {
  std::vector<int> parent, parity;
  explicit SignedUnionFind(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent[r] != r) {
      p ^= parity[r];
      r = parent[r];
    }
    // path compression
    int cur = x, cp = p;
    while (parent[cur] != cur) {
      int next = parent[cur];
      int np = cp ^ parity[cur];
      parent[cur] = r;
      parity[cur] = cp;
      cur = next;
      cp = np;
    }
    return {r, p};
  }
  // impose x = (-1)^rel y; false on conflict
  bool unite(int x, int y, int rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rel;
    parent[rx] = ry;
    parity[rx] = px ^ py ^ rel;
    return true;
  }
};

// block[i] = -1 for zero, otherwise arbitrary id; sign[i] in {+1,-1}
std::vector<int> canonical_code(const std::vector<int>& block, const std::vector<int>& sign) {
  int n = static_cast<int>(block.size());
  std::vector<int> code(n, 0);
  std::map<int, std::pair<int, int>> seen;  // raw id -> (new id, sign of min letter)
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (block[i] < 0) continue;
    auto it = seen.find(block[i]);
    if (it == seen.end()) it = seen.emplace(block[i], std::make_pair(next++, sign[i])).first;
    code[i] = it->second.first * sign[i] * it->second.second;
  }
  return code;
}

void cycles_of(const std::vector<int>& images, std::vector<std::vector<int>>& out) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  out.clear();
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
}

int combinatorial_length(Family f, const GroupElement& e, int m) {
  if (f == Family::I2) {
    if (e.reflection) return 1;
    return (e.rotation % m == 0) ? 0 : 2;
  }
  std::vector<std::vector<int>> cyc;
  cycles_of(e.images, cyc);
  int n = static_cast<int>(e.images.size());
  if (f == Family::A) return n - static_cast<int>(cyc.size());
  int positive = 0;
  for (const auto& c : cyc) {
    int s = 1;
    for (int j : c) s *= e.signs[j];
    if (s == 1) ++positive;
  }
  return n - positive;
}

}  // namespace

Angle Angle::make(long num, long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Angle{num / g, den / g};
}

cd Angle::value() const { return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / den); }

std::vector<int> GroupElement::code() const {
  if (images.empty()) return {reflection ? 1 : 0, rotation};
  std::vector<int> c(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) c[i] = signs[i] * (images[i] + 1);
  return c;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
  }
  return "?";
}

std::string GroupSpec::str() const {
  if (family == Family::I2) return "I2:" + std::to_string(size);
  return family_name(family) + std::to_string(size);
}

GroupSpec GroupSpec::parse(const std::string& s) {
  auto number = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit))
      throw ConfigError("bad group spec: " + s);
    return std::stoi(t);
  };
  if (s.rfind("I2:", 0) == 0) return {Family::I2, number(s.substr(3))};
  if (s.empty()) throw ConfigError("empty group spec");
  if (s[0] == 'A') return {Family::A, number(s.substr(1))};
  if (s[0] == 'B' || s[0] == 'C') return {Family::B, number(s.substr(1))};
  if (s[0] == 'D') return {Family::D, number(s.substr(1))};
  throw ConfigError("bad group spec: " + s);
}

GroupElement ReflectionGroup::compose(const GroupElement& a, const GroupElement& b) const {
  GroupElement r;
  if (family_ == Family::I2) {
    int rot = a.reflection ? a.rotation - b.rotation : a.rotation + b.rotation;
    r.rotation = ((rot % m_) + m_) % m_;
    r.reflection = a.reflection != b.reflection;
    return r;
  }
  int n = letters_;
  r.images.resize(n);
  r.signs.resize(n);
  for (int i = 0; i < n; ++i) {
    r.images[i] = a.images[b.images[i]];
    r.signs[i] = b.signs[i] * a.signs[b.images[i]];
  }
  return r;
}

ReflectionGroup ReflectionGroup::build(Family family, int size) {
  ReflectionGroup g;
  g.family_ = family;
  g.size_ = size;
  std::vector<GroupElement> all;
  switch (family) {
    case Family::A: {
      if (size < 2 || size > 6) throw ConfigError("type A supports 2..6 letters");
      g.letters_ = size;
      g.rank_ = size - 1;
      g.h_ = size;
      for (int d = 2; d <= size; ++d) g.degrees_.push_back(d);
      std::vector<int> p(size);
      std::iota(p.begin(), p.end(), 0);
      do {
        all.push_back(GroupElement{p, std::vector<int>(size, 1)});
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Family::B:
    case Family::D: {
      if (family == Family::B && (size < 2 || size > 4)) throw ConfigError("type B supports n = 2..4");
      if (family == Family::D && size != 4) throw ConfigError("type D supports n = 4");
      g.letters_ = size;
      g.rank_ = size;
      if (family == Family::B) {
        g.h_ = 2 * size;
        for (int i = 1; i <= size; ++i) g.degrees_.push_back(2 * i);
      } else {
        g.h_ = 2 * size - 2;
        for (int i = 1; i < size; ++i) g.degrees_.push_back(2 * i);
        g.degrees_.push_back(size);
        std::sort(g.degrees_.begin(), g.degrees_.end());
      }
      std::vector<int> p(size);
      std::iota(p.begin(), p.end(), 0);
      do {
        for (int mask = 0; mask < (1 << size); ++mask) {
          if (family == Family::D && (__builtin_popcount(mask) % 2)) continue;
          std::vector<int> s(size);
          for (int i = 0; i < size; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
          all.push_back(GroupElement{p, s});
        }
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Family::I2: {
      if (size < 3 || size > 12) throw ConfigError("type I2 supports m = 3..12");
      g.letters_ = 2;
      g.rank_ = 2;
      g.m_ = size;
      g.h_ = size;
      g.degrees_ = {2, size};
      for (int f = 0; f < 2; ++f)
        for (int r = 0; r < size; ++r) all.push_back(GroupElement{{}, {}, r, f == 1});
      break;
    }
  }
  std::vector<std::pair<int, std::vector<int>>> keys;
  keys.reserve(all.size());
  for (const auto& e : all) keys.emplace_back(combinatorial_length(family, e, g.m_), e.code());
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t i : order) {
    g.index_[all[i].code()] = static_cast<std::uint32_t>(g.elements_.size());
    g.refl_len_.push_back(keys[i].first);
    g.elements_.push_back(all[i]);
  }
  g.finish();
  return g;
}

ElementId ReflectionGroup::find(const GroupElement& e) const {
  auto it = index_.find(e.code());
  if (it == index_.end()) throw InvariantError("element not in group");
  return ElementId{it->second};
}

ElementId ReflectionGroup::power(ElementId a, long e) const {
  int ord = element_order(a);
  e %= ord;
  if (e < 0) e += ord;
  ElementId r = identity();
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int ReflectionGroup::element_order(ElementId a) const {
  int o = 1;
  for (ElementId x = a; x != identity(); x = mul(x, a)) ++o;
  return o;
}

void ReflectionGroup::finish() {
  const std::size_t N = elements_.size();
  if (family_ == Family::A) {
    int n = letters_;
    q_ = Eigen::MatrixXd::Zero(n, n - 1);
    for (int j = 0; j < n - 1; ++j) {
      double s = std::sqrt(static_cast<double>((j + 1) * (j + 2)));
      for (int i = 0; i <= j; ++i) q_(i, j) = 1.0 / s;
      q_(j + 1, j) = -(j + 1) / s;
    }
  }
  mul_.resize(N * N);
  inv_.resize(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::uint32_t p = index_.at(compose(elements_[a], elements_[b]).code());
      mul_[a * N + b] = p;
      if (p == 0) inv_[a] = static_cast<std::uint32_t>(b);
    }
  for (std::size_t a = 0; a < N; ++a) {
    matrices_.push_back(build_matrix(elements_[a]));
    angles_.push_back(build_angles(elements_[a]));
    if (refl_len_[a] == 1) reflections_.push_back(ElementId{static_cast<std::uint32_t>(a)});
  }

  // simple generators
  auto transposition = [&](int i, int j) {
    GroupElement e;
    e.images.resize(letters_);
    std::iota(e.images.begin(), e.images.end(), 0);
    e.signs.assign(letters_, 1);
    std::swap(e.images[i], e.images[j]);
    return e;
  };
  if (family_ == Family::I2) {
    simple_ = {find(GroupElement{{}, {}, 0, true}), find(GroupElement{{}, {}, 1, true})};
  } else {
    int last = (family_ == Family::A) ? letters_ - 1 : letters_ - 1;
    for (int i = 0; i + 1 < letters_ && static_cast<int>(simple_.size()) < last; ++i)
      simple_.push_back(find(transposition(i, i + 1)));
    if (family_ == Family::B) {
      GroupElement e = transposition(0, 0);
      e.signs[letters_ - 1] = -1;
      simple_.push_back(find(e));
    } else if (family_ == Family::D) {
      GroupElement e = transposition(letters_ - 2, letters_ - 1);
      e.signs[letters_ - 2] = -1;
      e.signs[letters_ - 1] = -1;
      simple_.push_back(find(e));
    }
  }
  coxeter_ = identity();
  for (ElementId s : simple_) coxeter_ = mul(coxeter_, s);

  // flats: all fixed spaces, closed under meet
  std::set<std::vector<int>> codes;
  std::vector<std::vector<int>> fixed_codes(N);
  for (std::size_t a = 0; a < N; ++a) {
    fixed_codes[a] = fixed_code(elements_[a]);
    codes.insert(fixed_codes[a]);
  }
  std::vector<std::vector<int>> sorted(codes.begin(), codes.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    int dx = code_dim(x), dy = code_dim(y);
    if (dx != dy) return dx > dy;
    return x < y;
  });
  for (const auto& c : sorted) {
    Flat f;
    f.code = c;
    f.dim = code_dim(c);
    f.basis = code_basis(c);
    flat_index_[c] = static_cast<std::uint32_t>(flats_.size());
    flats_.push_back(std::move(f));
  }
  const std::size_t F = flats_.size();
  fixed_.resize(N);
  for (std::size_t a = 0; a < N; ++a) fixed_[a] = flat_index_.at(fixed_codes[a]);
  meet_.resize(F * F);
  for (std::size_t x = 0; x < F; ++x)
    for (std::size_t y = 0; y < F; ++y) {
      auto c = meet_code(flats_[x].code, flats_[y].code);
      auto it = flat_index_.find(c);
      if (it == flat_index_.end()) throw InvariantError("fixed spaces not closed under intersection");
      meet_[x * F + y] = it->second;
    }
  std::vector<bool> has_rep(F, false);
  for (std::size_t a = 0; a < N; ++a) {
    Flat& f = flats_[fixed_[a]];
    if (!has_rep[fixed_[a]]) {
      f.rep = ElementId{static_cast<std::uint32_t>(a)};
      has_rep[fixed_[a]] = true;
    }
  }
  for (std::size_t x = 0; x < F; ++x)
    for (std::size_t a = 0; a < N; ++a)
      if (meet_[x * F + fixed_[a]] == x) flats_[x].parabolic.push_back(ElementId{static_cast<std::uint32_t>(a)});
  flat_act_.resize(N * F);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t x = 0; x < F; ++x) {
      ElementId w{static_cast<std::uint32_t>(a)};
      flat_act_[a * F + x] = fixed_[conj(w, flats_[x].rep).value];
    }

  class_of_.assign(N, SIZE_MAX);
  for (std::size_t a = 0; a < N; ++a) {
    if (class_of_[a] != SIZE_MAX) continue;
    ConjugacyClass cl{ElementId{static_cast<std::uint32_t>(a)}, 0};
    std::size_t idx = classes_.size();
    for (std::size_t u = 0; u < N; ++u) {
      auto c = conj(ElementId{static_cast<std::uint32_t>(u)}, ElementId{static_cast<std::uint32_t>(a)});
      if (class_of_[c.value] == SIZE_MAX) {
        class_of_[c.value] = idx;
        ++cl.size;
      }
    }
    classes_.push_back(cl);
  }
}

std::vector<int> ReflectionGroup::fixed_code(const GroupElement& e) const {
  if (family_ == Family::I2) {
    if (e.reflection) return {1, e.rotation};
    return {e.rotation == 0 ? 0 : 2, 0};
  }
  int n = letters_;
  std::vector<std::vector<int>> cyc;
  cycles_of(e.images, cyc);
  std::vector<int> block(n, -1), sign(n, 1);
  for (std::size_t ci = 0; ci < cyc.size(); ++ci) {
    const auto& c = cyc[ci];
    int prod = 1;
    for (int j : c) prod *= e.signs[j];
    if (prod == -1) continue;
    int s = 1;
    for (int j : c) {
      block[j] = static_cast<int>(ci);
      sign[j] = s;
      s *= e.signs[j];
    }
  }
  return canonical_code(block, sign);
}

std::vector<int> ReflectionGroup::meet_code(const std::vector<int>& a, const std::vector<int>& b) const {
  if (family_ == Family::I2) {
    if (a[0] == 0) return b;
    if (b[0] == 0) return a;
    if (a == b) return a;
    return {2, 0};
  }
  int n = letters_;
  SignedUnionFind uf(n + 1);  // node n stands for zero
  std::vector<bool> bad(n + 1, false);
  auto impose = [&](const std::vector<int>& code) {
    std::map<int, int> first;
    for (int i = 0; i < n; ++i) {
      if (code[i] == 0) {
        uf.unite(i, n, 0);
        continue;
      }
      int blk = std::abs(code[i]);
      int rel = code[i] < 0 ? 1 : 0;
      auto it = first.find(blk);
      if (it == first.end()) {
        first[blk] = i * 2 + rel;
      } else {
        int j = it->second / 2, relj = it->second % 2;
        if (!uf.unite(i, j, rel ^ relj)) bad[i] = true;
      }
    }
  };
  impose(a);
  impose(b);
  std::vector<bool> zero_root(n + 1, false);
  zero_root[uf.find(n).first] = true;
  for (int i = 0; i < n; ++i)
    if (bad[i]) zero_root[uf.find(i).first] = true;
  std::vector<int> block(n), sign(n);
  for (int i = 0; i < n; ++i) {
    auto [r, p] = uf.find(i);
    block[i] = zero_root[r] ? -1 : r;
    sign[i] = p ? -1 : 1;
  }
  return canonical_code(block, sign);
}

int ReflectionGroup::code_dim(const std::vector<int>& code) const {
  if (family_ == Family::I2) return code[0] == 0 ? 2 : (code[0] == 1 ? 1 : 0);
  std::set<int> blocks;
  for (int c : code)
    if (c != 0) blocks.insert(std::abs(c));
  int nb = static_cast<int>(blocks.size());
  return family_ == Family::A ? nb - 1 : nb;
}

CMat ReflectionGroup::code_basis(const std::vector<int>& code) const {
  if (family_ == Family::I2) {
    if (code[0] == 0) return CMat::Identity(2, 2);
    if (code[0] == 2) return CMat(2, 0);
    CMat b(2, 1);
    double t = std::numbers::pi * code[1] / m_;
    b(0, 0) = std::polar(1.0 / std::sqrt(2.0), t);
    b(1, 0) = std::polar(1.0 / std::sqrt(2.0), -t);
    return b;
  }
  int n = letters_;
  int nb = 0;
  for (int c : code) nb = std::max(nb, std::abs(c));
  CMat amb = CMat::Zero(n, nb);
  for (int i = 0; i < n; ++i)
    if (code[i] != 0) amb(i, std::abs(code[i]) - 1) = (code[i] > 0 ? 1.0 : -1.0);
  if (family_ == Family::A) {
    CMat proj = q_.transpose().cast<cd>() * amb;
    return orthonormal_column_basis(proj);
  }
  for (int j = 0; j < nb; ++j) amb.col(j).normalize();
  return amb;
}

CMat ReflectionGroup::build_matrix(const GroupElement& e) const {
  if (family_ == Family::I2) {
    cd b = std::polar(1.0, 2.0 * std::numbers::pi * e.rotation / m_);
    CMat mat = CMat::Zero(2, 2);
    if (!e.reflection) {
      mat(0, 0) = b;
      mat(1, 1) = std::conj(b);
    } else {
      mat(0, 1) = b;
      mat(1, 0) = std::conj(b);
    }
    return mat;
  }
  int n = letters_;
  CMat p = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) p(e.images[j], j) = static_cast<double>(e.signs[j]);
  if (family_ == Family::A) return q_.transpose().cast<cd>() * p * q_.cast<cd>();
  return p;
}

std::vector<Angle> ReflectionGroup::build_angles(const GroupElement& e) const {
  std::vector<Angle> out;
  if (family_ == Family::I2) {
    if (e.reflection) return {Angle::make(0, 1), Angle::make(1, 2)};
    return {Angle::make(e.rotation, m_), Angle::make(-e.rotation, m_)};
  }
  std::vector<std::vector<int>> cyc;
  cycles_of(e.images, cyc);
  bool dropped = family_ != Family::A;
  for (const auto& c : cyc) {
    long L = static_cast<long>(c.size());
    int prod = 1;
    for (int j : c) prod *= e.signs[j];
    for (long j = 0; j < L; ++j) {
      Angle a = prod == 1 ? Angle::make(j, L) : Angle::make(2 * j + 1, 2 * L);
      if (!dropped && a.num == 0) {
        dropped = true;
        continue;
      }
      out.push_back(a);
    }
  }
  return out;
}

CVec ReflectionGroup::act(ElementId w, const CVec& v) const {
  if (v.size() != rank_) throw std::invalid_argument("act: dimension mismatch");
  return matrices_[w.value] * v;
}

int ReflectionGroup::multiplicity(ElementId w, const Angle& a) const {
  int c = 0;
  for (const auto& x : angles_[w.value])
    if (x == a) ++c;
  return c;
}

FlatId ReflectionGroup::flat_of_code(const std::vector<int>& code) const {
  auto it = flat_index_.find(code);
  if (it == flat_index_.end()) throw InvariantError("unknown flat code");
  return FlatId{it->second};
}

std::vector<FlatId> ReflectionGroup::intersection_lattice() const {
  std::vector<FlatId> out;
  for (std::size_t i = 0; i < flats_.size(); ++i) out.push_back(FlatId{static_cast<std::uint32_t>(i)});
  return out;
}

int ReflectionGroup::eigenspace_intersection_dim(const CMat& basis, ElementId w, const cd& lambda) const {
  if (basis.cols() == 0) return 0;
  CMat m = (matrices_[w.value] - lambda * CMat::Identity(rank_, rank_)) * basis;
  return static_cast<int>(basis.cols()) - numeric_rank(m);
}

int ReflectionGroup::eigenspace_intersection_dim(FlatId x, ElementId w, long d, int k) const {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  cd lambda = Angle::make(-d, static_cast<long>(k) * h_).value();
  return eigenspace_intersection_dim(flats_[x.value].basis, w, lambda);
}

int ReflectionGroup::phase_denominator() const {
  switch (family_) {
    case Family::A: return 1;
    case Family::B:
    case Family::D: return 2;
    case Family::I2: return m_;
  }
  return 1;
}

void ReflectionGroup::monomial_form(ElementId w, std::vector<int>& sigma, std::vector<long>& phase) const {
  const auto& e = elements_[w.value];
  if (family_ == Family::I2) {
    if (!e.reflection) {
      sigma = {0, 1};
      phase = {e.rotation, (m_ - e.rotation) % m_};
    } else {
      sigma = {1, 0};
      phase = {(m_ - e.rotation) % m_, e.rotation};
    }
    return;
  }
  sigma = e.images;
  phase.resize(letters_);
  for (int j = 0; j < letters_; ++j) phase[j] = e.signs[j] == 1 ? 0 : (family_ == Family::A ? 0 : 1);
}

std::string ReflectionGroup::element_string(ElementId w) const {
  const auto& e = elements_[w.value];
  std::ostringstream os;
  if (family_ == Family::I2) {
    os << "r^" << e.rotation << (e.reflection ? " s" : "");
    return os.str();
  }
  if (family_ == Family::A) {
    std::vector<std::vector<int>> cyc;
    cycles_of(e.images, cyc);
    bool any = false;
    for (const auto& c : cyc) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
      os << ')';
    }
    if (!any) os << 'e';
    return os.str();
  }
  os << '[';
  for (int i = 0; i < letters_; ++i) os << (i ? "," : "") << e.signs[i] * (e.images[i] + 1);
  os << ']';
  return os.str();
}

std::string ReflectionGroup::flat_string(FlatId x) const {
  const auto& c = flats_[x.value].code;
  std::ostringstream os;
  if (family_ == Family::I2) {
    if (c[0] == 0) return "V";
    if (c[0] == 2) return "0";
    return "L" + std::to_string(c[1]);
  }
  int nb = 0;
  for (int v : c) nb = std::max(nb, std::abs(v));
  for (int b = 1; b <= nb; ++b) {
    os << '{';
    bool first = true;
    for (int i = 0; i < letters_; ++i)
      if (std::abs(c[i]) == b) {
        os << (first ? "" : ",") << (c[i] < 0 ? "-" : "") << i + 1;
        first = false;
      }
    os << '}';
  }
  bool zero = false;
  for (int v : c) zero |= v == 0;
  if (zero) {
    os << "0{";
    bool first = true;
    for (int i = 0; i < letters_; ++i)
      if (c[i] == 0) {
        os << (first ? "" : ",") << i + 1;
        first = false;
      }
    os << '}';
  }
  return os.str();
}

}  // namespace parking
