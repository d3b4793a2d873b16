#include "parking/parkfn.hpp"

#include <algorithm>
#include <functional>

namespace parking {

ParkSpace::ParkSpace(const ReflectionGroup& g, int k) : nc_(g, k) {
  const std::size_t N = g.order();
  const auto& chains = nc_.chains();
  coset_rep_.resize(g.num_flats());
  index_.assign(chains.size() * N, UINT32_MAX);
  step_.resize(chains.size());
  ElementId cinv = g.inv(g.coxeter_element());
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    FlatId x1 = g.fixed_space(chains[ci].w.front());
    auto& reps = coset_rep_[x1.value];
    if (reps.empty()) {
      reps.assign(N, UINT32_MAX);
      for (std::uint32_t w = 0; w < N; ++w) {
        if (reps[w] != UINT32_MAX) continue;
        for (ElementId u : g.parabolic_subgroup(x1)) reps[g.mul(ElementId{w}, u).value] = w;
      }
    }
    for (std::uint32_t w = 0; w < N; ++w)
      if (reps[w] == w) {
        index_[ci * N + w] = static_cast<std::uint32_t>(elems_.size());
        elems_.push_back({ElementId{w}, ci});
      }
    ElementId uk = nc_.nc_of_flat(g.fixed_space(chains[ci].w.back()));
    step_[ci] = g.mul(uk, cinv);
  }
}

NCFlatChain ParkSpace::flat_chain(std::size_t i) const {
  return to_flat_chain(group(), nc_.chains()[elems_[i].chain]);
}

ElementId ParkSpace::coset_rep(FlatId x, ElementId w) const { return ElementId{coset_rep_[x.value][w.value]}; }

std::size_t ParkSpace::index_of(ElementId w, std::size_t chain) const {
  const auto& g = group();
  FlatId x1 = g.fixed_space(nc_.chains()[chain].w.front());
  return index_[chain * g.order() + coset_rep_[x1.value][w.value]];
}

std::size_t ParkSpace::act(ElementId v, long j, std::size_t p) const {
  const auto& g = group();
  long jj = ((j % kh()) + kh()) % kh();
  ElementId w = elems_[p].rep;
  std::size_t ci = elems_[p].chain;
  for (long s = 0; s < jj; ++s) {
    w = g.mul(w, step_[ci]);
    ci = nc_.rotated(ci);
  }
  return index_of(g.mul(v, w), ci);
}

GSet ParkSpace::to_gset() const {
  const auto& g = group();
  const long N = static_cast<long>(g.order());
  const std::size_t P = size();
  std::vector<std::uint32_t> table(N * P);
#pragma omp parallel for schedule(dynamic, 1)
  for (long w = 0; w < N; ++w)
    for (std::size_t x = 0; x < P; ++x)
      table[w * P + x] = static_cast<std::uint32_t>(act(ElementId{static_cast<std::uint32_t>(w)}, 0, x));
  std::vector<std::uint32_t> rot(P);
  for (std::size_t x = 0; x < P; ++x) rot[x] = static_cast<std::uint32_t>(act(g.identity(), 1, x));
  return GSet::from_elements(g, k(), P, std::move(table), rot);
}

LabeledNCPartition to_labeled_model(const ParkSpace& park, std::size_t p) {
  const auto& g = park.group();
  int k = park.k();
  const auto& el = park.element(p);
  LabeledNCPartition out;
  out.pi = typeA_kdivisible_partition(g, park.noncrossing().chains()[el.chain]);
  const auto& w = g.element(el.rep);
  for (const auto& block : out.pi) {
    std::vector<int> lab;
    for (int b : block)
      if ((b - 1) % k == 0) lab.push_back(w.images[(b - 1) / k] + 1);
    std::sort(lab.begin(), lab.end());
    out.labels.push_back(lab);
  }
  return out;
}

namespace {

void canonicalize(LabeledNCPartition& x) {
  std::vector<std::size_t> order(x.pi.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
    std::sort(x.pi[i].begin(), x.pi[i].end());
    std::sort(x.labels[i].begin(), x.labels[i].end());
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x.pi[a] < x.pi[b]; });
  LabeledNCPartition y;
  for (auto i : order) {
    y.pi.push_back(x.pi[i]);
    y.labels.push_back(x.labels[i]);
  }
  x = std::move(y);
}

// noncrossing partitions of {lo..hi} with all block sizes divisible by k
std::vector<SetPartition> nc_interval(int lo, int hi, int k) {
  if (lo > hi) return {SetPartition{}};
  std::vector<SetPartition> out;
  std::vector<int> block{lo};
  std::function<void()> rec = [&]() {
    int last = block.back();
    if (block.size() % k == 0 && (hi - last) % k == 0) {
      // close the block: fill the gaps independently
      std::vector<std::pair<int, int>> gaps;
      for (std::size_t i = 0; i + 1 < block.size(); ++i) gaps.emplace_back(block[i] + 1, block[i + 1] - 1);
      gaps.emplace_back(last + 1, hi);
      std::vector<SetPartition> acc{SetPartition{block}};
      for (auto [a, b] : gaps) {
        auto sub = nc_interval(a, b, k);
        std::vector<SetPartition> next;
        for (const auto& x : acc)
          for (const auto& y : sub) {
            SetPartition z = x;
            z.insert(z.end(), y.begin(), y.end());
            next.push_back(std::move(z));
          }
        acc = std::move(next);
      }
      for (auto& p : acc) out.push_back(std::move(p));
    }
    for (int nx = last + 1; nx <= hi; ++nx) {
      if ((nx - last - 1) % k != 0) continue;
      block.push_back(nx);
      rec();
      block.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

std::vector<SetPartition> kdivisible_noncrossing_partitions(int n, int k) {
  auto out = nc_interval(1, k * n, k);
  for (auto& p : out) std::sort(p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

LabeledModel::LabeledModel(const ReflectionGroup& g, int k) : g_(&g), k_(k) {
  if (g.family() != Family::A) throw ConfigError("labeled model needs type A");
  int n = g.letters();
  for (const auto& pi : kdivisible_noncrossing_partitions(n, k)) {
    LabeledNCPartition cur{pi, std::vector<std::vector<int>>(pi.size())};
    std::vector<bool> used(n + 1, false);
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
      if (b == pi.size()) {
        elems_.push_back(cur);
        return;
      }
      std::size_t need = pi[b].size() / k;
      std::function<void(int)> pick = [&](int from) {
        if (cur.labels[b].size() == need) {
          rec(b + 1);
          return;
        }
        for (int l = from; l <= n; ++l) {
          if (used[l]) continue;
          used[l] = true;
          cur.labels[b].push_back(l);
          pick(l + 1);
          cur.labels[b].pop_back();
          used[l] = false;
        }
      };
      pick(1);
    };
    rec(0);
  }
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
}

std::size_t LabeledModel::index_of(const LabeledNCPartition& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw InvariantError("not a labeled k-divisible noncrossing partition");
  return it->second;
}

LabeledNCPartition LabeledModel::act(ElementId w, long j, const LabeledNCPartition& x) const {
  int N = k_ * g_->letters();
  long jj = ((j % N) + N) % N;
  const auto& e = g_->element(w);
  LabeledNCPartition y = x;
  for (auto& b : y.pi)
    for (auto& v : b) v = static_cast<int>((v - 1 + jj) % N) + 1;
  for (auto& l : y.labels)
    for (auto& v : l) v = e.images[v - 1] + 1;
  canonicalize(y);
  return y;
}

GSet LabeledModel::to_gset() const {
  const std::size_t N = g_->order();
  const std::size_t P = elems_.size();
  std::vector<std::uint32_t> table(N * P);
  for (std::size_t w = 0; w < N; ++w)
    for (std::size_t x = 0; x < P; ++x)
      table[w * P + x] = static_cast<std::uint32_t>(index_of(act(ElementId{static_cast<std::uint32_t>(w)}, 0, elems_[x])));
  std::vector<std::uint32_t> rot(P);
  for (std::size_t x = 0; x < P; ++x) rot[x] = static_cast<std::uint32_t>(index_of(act(g_->identity(), 1, elems_[x])));
  return GSet::from_elements(*g_, k_, P, std::move(table), rot);
}

bool is_classical_parking_function(const ClassicalParkingFunction& a, int k) {
  auto b = a;
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 1 || b[i] > k * static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<ClassicalParkingFunction> classical_fuss_enumerate(int n, int k) {
  if (n < 1 || n > 6) throw ConfigError("classical parking functions need 1 <= n <= 6");
  int top = k * (n - 1) + 1;
  std::vector<ClassicalParkingFunction> out;
  ClassicalParkingFunction a(n, 1);
  while (true) {
    if (is_classical_parking_function(a, k)) out.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[i] == top) a[i--] = 1;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

long classical_fixed_count(const std::vector<int>& w, int n, int k) {
  long c = 0;
  for (const auto& a : classical_fuss_enumerate(n, k)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a[w[i]] == a[i];
    if (ok) ++c;
  }
  return c;
}

}  // namespace parking
