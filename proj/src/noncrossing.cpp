#include "parking/noncrossing.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace parking {

bool absolute_leq(const ReflectionGroup& g, ElementId u, ElementId w) { return g.absolute_leq(u, w); }

std::vector<ElementId> enumerate_nc(const ReflectionGroup& g) {
  ElementId c = g.coxeter_element();
  std::set<ElementId> seen{g.identity()};
  std::deque<ElementId> frontier{g.identity()};
  while (!frontier.empty()) {
    ElementId u = frontier.front();
    frontier.pop_front();
    for (ElementId t : g.reflections()) {
      ElementId v = g.mul(u, t);
      if (g.reflection_length(v) != g.reflection_length(u) + 1) continue;
      if (!g.absolute_leq(v, c)) continue;
      if (seen.insert(v).second) frontier.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// up[i] = indices j with nc[i] <=_T nc[j], found by walking covers upward
std::vector<std::vector<std::size_t>> up_sets(const ReflectionGroup& g, const std::vector<ElementId>& nc) {
  std::map<ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < nc.size(); ++i) pos[nc[i]] = i;
  std::vector<std::vector<std::size_t>> covers(nc.size());
  for (std::size_t i = 0; i < nc.size(); ++i)
    for (ElementId t : g.reflections()) {
      auto it = pos.find(g.mul(nc[i], t));
      if (it == pos.end()) continue;
      if (g.reflection_length(it->first) == g.reflection_length(nc[i]) + 1) covers[i].push_back(it->second);
    }
  std::vector<std::vector<std::size_t>> up(nc.size());
  for (std::size_t i = 0; i < nc.size(); ++i) {
    std::set<std::size_t> s{i};
    std::deque<std::size_t> q{i};
    while (!q.empty()) {
      auto a = q.front();
      q.pop_front();
      for (auto b : covers[a])
        if (s.insert(b).second) q.push_back(b);
    }
    up[i].assign(s.begin(), s.end());
  }
  return up;
}

}  // namespace

std::vector<MultiChain> enumerate_nck(const ReflectionGroup& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  auto nc = enumerate_nc(g);
  auto up = up_sets(g, nc);
  std::vector<MultiChain> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      MultiChain m;
      for (auto i : cur) m.w.push_back(nc[i]);
      out.push_back(std::move(m));
      return;
    }
    for (auto j : up[from]) {
      cur.push_back(j);
      self(self, j);
      cur.pop_back();
    }
  };
  rec(rec, 0);  // nc[0] is the identity, below everything
  std::sort(out.begin(), out.end());
  return out;
}

long count_nck(const ReflectionGroup& g, int k) {
  auto nc = enumerate_nc(g);
  auto up = up_sets(g, nc);
  std::vector<long> ways(nc.size(), 1);  // chains of length 1 ending anywhere above i
  for (int step = 1; step < k; ++step) {
    std::vector<long> next(nc.size(), 0);
    for (std::size_t i = 0; i < nc.size(); ++i)
      for (auto j : up[i]) next[i] += ways[j];
    ways = next;
  }
  long total = 0;
  for (auto j : up[0]) total += ways[j];
  return total;
}

Factorization delta(const ReflectionGroup& g, const MultiChain& chain) {
  Factorization f;
  const auto& w = chain.w;
  f.parts.push_back(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) f.parts.push_back(g.mul(g.inv(w[i - 1]), w[i]));
  f.parts.push_back(g.mul(g.inv(w.back()), g.coxeter_element()));
  return f;
}

MultiChain integrate(const ReflectionGroup& g, const Factorization& f) {
  if (!is_valid_factorization(g, f)) throw InvariantError("integrate: invalid factorization");
  MultiChain m;
  ElementId acc = g.identity();
  for (std::size_t i = 0; i + 1 < f.parts.size(); ++i) {
    acc = g.mul(acc, f.parts[i]);
    m.w.push_back(acc);
  }
  return m;
}

bool is_valid_factorization(const ReflectionGroup& g, const Factorization& f) {
  ElementId p = g.identity();
  int len = 0;
  for (ElementId x : f.parts) {
    p = g.mul(p, x);
    len += g.reflection_length(x);
  }
  return p == g.coxeter_element() && len == g.rank();
}

Factorization rotate(const ReflectionGroup& g, const Factorization& f) {
  std::size_t k = f.parts.size() - 1;
  ElementId c = g.coxeter_element();
  ElementId cwk = g.conj(c, f.parts[k]);
  Factorization r;
  r.parts.push_back(g.conj(cwk, f.parts[0]));
  r.parts.push_back(cwk);
  for (std::size_t i = 1; i < k; ++i) r.parts.push_back(f.parts[i]);
  return r;
}

MultiChain rotate_chain(const ReflectionGroup& g, const MultiChain& chain) {
  return integrate(g, rotate(g, delta(g, chain)));
}

NCFlatChain to_flat_chain(const ReflectionGroup& g, const MultiChain& chain) {
  NCFlatChain out;
  for (ElementId w : chain.w) out.flats.push_back(g.fixed_space(w));
  return out;
}

SetPartition typeA_kdivisible_partition(const ReflectionGroup& g, const MultiChain& chain) {
  if (g.family() != Family::A) throw ConfigError("k-divisible partitions need type A");
  int n = g.letters();
  int k = static_cast<int>(chain.w.size());
  int N = k * n;
  Factorization f = delta(g, chain);
  // kappa = prod_j iota_{j-1}(f_j), iota_r placing letter i at position k*i + r
  std::vector<int> kappa(N);
  for (int i = 0; i < N; ++i) kappa[i] = i;
  for (int j = 1; j <= k; ++j) {
    const auto& e = g.element(f.parts[j]);
    std::vector<int> emb(N);
    for (int i = 0; i < N; ++i) emb[i] = i;
    for (int i = 0; i < n; ++i) emb[k * i + (j - 1)] = k * e.images[i] + (j - 1);
    std::vector<int> next(N);
    for (int i = 0; i < N; ++i) next[i] = kappa[emb[i]];
    kappa = next;
  }
  std::vector<int> kinv(N);
  for (int i = 0; i < N; ++i) kinv[kappa[i]] = i;
  // pi = C kappa^{-1} with C the long cycle i -> i+1
  std::vector<int> pi(N);
  for (int i = 0; i < N; ++i) pi[i] = (kinv[i] + 1) % N;
  std::vector<bool> seen(N, false);
  SetPartition out;
  for (int i = 0; i < N; ++i) {
    if (seen[i]) continue;
    std::vector<int> b;
    for (int j = i; !seen[j]; j = pi[j]) {
      seen[j] = true;
      b.push_back(j + 1);
    }
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition rotate_partition(const SetPartition& p, int size) {
  SetPartition out;
  for (const auto& b : p) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(x % size + 1);
    std::sort(nb.begin(), nb.end());
    out.push_back(nb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_noncrossing(const SetPartition& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      for (int a : p[i])
        for (int b : p[i])
          for (int x : p[j])
            for (int y : p[j])
              if (a < x && x < b && b < y) return false;
    }
  return true;
}

NoncrossingData::NoncrossingData(const ReflectionGroup& g, int k) : g_(&g), k_(k) {
  nc_ = enumerate_nc(g);
  chains_ = enumerate_nck(g, k);
  for (std::size_t i = 0; i < chains_.size(); ++i) index_[chains_[i]] = i;
  rot_.resize(chains_.size());
  for (std::size_t i = 0; i < chains_.size(); ++i) rot_[i] = chain_index(rotate_chain(g, chains_[i]));
  for (ElementId u : nc_) {
    auto [it, fresh] = flat_to_nc_.emplace(g.fixed_space(u).value, u);
    if (!fresh) throw InvariantError("two noncrossing elements share a fixed space");
  }
}

std::size_t NoncrossingData::chain_index(const MultiChain& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw InvariantError("chain not in NC^k");
  return it->second;
}

ElementId NoncrossingData::nc_of_flat(FlatId x) const {
  auto it = flat_to_nc_.find(x.value);
  if (it == flat_to_nc_.end()) throw InvariantError("flat is not noncrossing");
  return it->second;
}

}  // namespace parking
