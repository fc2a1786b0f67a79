#include "set_cover.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hopdom::detail {

namespace {

bool test_bit(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }
void set_bit(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
void clear_bit(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

template <typename F>
void for_each_bit(const std::uint64_t* w, int words, F&& f) {
  for (int k = 0; k < words; ++k) {
    std::uint64_t x = w[k];
    while (x) {
      int b = std::countr_zero(x);
      f(k * 64 + b);
      x &= x - 1;
    }
  }
}

}  // namespace

struct CoverEngine::State {
  std::vector<std::uint64_t> unc;        // (n_sets + 2) x ew
  std::vector<std::uint64_t> forbidden;  // sw
  std::vector<std::uint64_t> used;       // sw, scratch for the packing bound
  std::vector<std::pair<int, int>> order;  // scratch (count, element)
  std::vector<int> chosen;
  std::vector<int> best_sets;
  int best = 0;
  bool stop_first = false;
  int stop_at_size = -1;
  bool done = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  const StopFn* stop = nullptr;
};

CoverEngine::CoverEngine(int n_elems, const std::vector<std::vector<int>>& set_elems)
    : n_elems_(n_elems),
      n_sets_(static_cast<int>(set_elems.size())),
      ew_(std::max(1, (n_elems + 63) / 64)),
      sw_(std::max(1, (static_cast<int>(set_elems.size()) + 63) / 64)) {
  cover_.assign(static_cast<std::size_t>(n_sets_) * ew_, 0);
  by_.assign(static_cast<std::size_t>(n_elems_) * sw_, 0);
  for (int s = 0; s < n_sets_; ++s)
    for (int e : set_elems[s]) {
      if (e < 0 || e >= n_elems_) throw std::out_of_range("set cover element out of range");
      set_bit(&cover_[static_cast<std::size_t>(s) * ew_], e);
      set_bit(&by_[static_cast<std::size_t>(e) * sw_], s);
    }
}

bool CoverEngine::coverable() const {
  for (int e = 0; e < n_elems_; ++e) {
    const std::uint64_t* b = &by_[static_cast<std::size_t>(e) * sw_];
    if (std::all_of(b, b + sw_, [](std::uint64_t w) { return w == 0; })) return false;
  }
  return true;
}

std::vector<int> CoverEngine::greedy() const {
  std::vector<std::uint64_t> unc(ew_, 0);
  for (int e = 0; e < n_elems_; ++e) set_bit(unc.data(), e);
  std::vector<int> out;
  while (true) {
    int best = -1, gain = 0;
    for (int s = 0; s < n_sets_; ++s) {
      int g = 0;
      for (int k = 0; k < ew_; ++k) g += std::popcount(cover_[static_cast<std::size_t>(s) * ew_ + k] & unc[k]);
      if (g > gain) {
        gain = g;
        best = s;
      }
    }
    if (best < 0) break;
    out.push_back(best);
    for (int k = 0; k < ew_; ++k) unc[k] &= ~cover_[static_cast<std::size_t>(best) * ew_ + k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

int CoverEngine::lower_bound(State& st, const std::uint64_t* unc, int* branch_elem) const {
  st.order.clear();
  int min_count = n_sets_ + 1;
  *branch_elem = -1;
  bool dead = false;
  for_each_bit(unc, ew_, [&](int e) {
    if (dead) return;
    const std::uint64_t* b = &by_[static_cast<std::size_t>(e) * sw_];
    int c = 0;
    for (int k = 0; k < sw_; ++k) c += std::popcount(b[k] & ~st.forbidden[k]);
    if (c == 0) {
      dead = true;
      return;
    }
    if (c < min_count) {
      min_count = c;
      *branch_elem = e;
    }
    st.order.emplace_back(c, e);
  });
  if (dead) return n_sets_ + 1;
  if (st.order.empty()) return 0;

  std::sort(st.order.begin(), st.order.end());
  std::fill(st.used.begin(), st.used.end(), 0);
  int packing = 0;
  for (auto [c, e] : st.order) {
    const std::uint64_t* b = &by_[static_cast<std::size_t>(e) * sw_];
    bool clash = false;
    for (int k = 0; k < sw_ && !clash; ++k) clash = (b[k] & ~st.forbidden[k] & st.used[k]) != 0;
    if (clash) continue;
    for (int k = 0; k < sw_; ++k) st.used[k] |= b[k] & ~st.forbidden[k];
    ++packing;
  }

  int max_gain = 0;
  for (int s = 0; s < n_sets_; ++s) {
    if (test_bit(st.forbidden.data(), s)) continue;
    int g = 0;
    const std::uint64_t* c = &cover_[static_cast<std::size_t>(s) * ew_];
    for (int k = 0; k < ew_; ++k) g += std::popcount(c[k] & unc[k]);
    max_gain = std::max(max_gain, g);
  }
  int total = static_cast<int>(st.order.size());
  int ratio = max_gain == 0 ? n_sets_ + 1 : (total + max_gain - 1) / max_gain;
  return std::max(packing, ratio);
}

int CoverEngine::root_lower_bound() const {
  State st;
  st.forbidden.assign(sw_, 0);
  st.used.assign(sw_, 0);
  std::vector<std::uint64_t> unc(ew_, 0);
  for (int e = 0; e < n_elems_; ++e) set_bit(unc.data(), e);
  int elem = -1;
  return lower_bound(st, unc.data(), &elem);
}

void CoverEngine::dfs(State& st, int depth) const {
  ++st.nodes;
  if ((st.nodes & 255) == 0 && st.stop && *st.stop && (*st.stop)()) {
    st.aborted = true;
    return;
  }
  const std::uint64_t* unc = &st.unc[static_cast<std::size_t>(depth) * ew_];
  bool all_covered = std::all_of(unc, unc + ew_, [](std::uint64_t w) { return w == 0; });
  int size = static_cast<int>(st.chosen.size());
  if (all_covered) {
    if (size < st.best) {
      st.best = size;
      st.best_sets = st.chosen;
      std::sort(st.best_sets.begin(), st.best_sets.end());
      if (st.stop_first || (st.stop_at_size >= 0 && size <= st.stop_at_size)) st.done = true;
    }
    return;
  }
  int elem = -1;
  int lb = lower_bound(st, unc, &elem);
  if (size + lb >= st.best) return;

  // Usable sets for the branching element, most new coverage first.
  std::vector<std::pair<int, int>> cand;
  const std::uint64_t* b = &by_[static_cast<std::size_t>(elem) * sw_];
  for (int k = 0; k < sw_; ++k) {
    std::uint64_t x = b[k] & ~st.forbidden[k];
    while (x) {
      int s = k * 64 + std::countr_zero(x);
      x &= x - 1;
      int g = 0;
      const std::uint64_t* c = &cover_[static_cast<std::size_t>(s) * ew_];
      for (int w = 0; w < ew_; ++w) g += std::popcount(c[w] & unc[w]);
      cand.emplace_back(-g, s);
    }
  }
  std::sort(cand.begin(), cand.end());

  std::uint64_t* next = &st.unc[static_cast<std::size_t>(depth + 1) * ew_];
  std::vector<int> banned;
  for (auto [neg_gain, s] : cand) {
    const std::uint64_t* c = &cover_[static_cast<std::size_t>(s) * ew_];
    for (int w = 0; w < ew_; ++w) next[w] = unc[w] & ~c[w];
    st.chosen.push_back(s);
    set_bit(st.forbidden.data(), s);
    dfs(st, depth + 1);
    st.chosen.pop_back();
    // s stays forbidden for the remaining siblings: they cover elem without it.
    banned.push_back(s);
    if (st.done || st.aborted) break;
    if (size + 1 >= st.best) break;
  }
  for (int s : banned) clear_bit(st.forbidden.data(), s);
}

CoverEngine::Outcome CoverEngine::search(const Query& q, const StopFn& stop) const {
  State st;
  st.unc.assign(static_cast<std::size_t>(n_sets_ + 2) * ew_, 0);
  st.forbidden.assign(sw_, 0);
  st.used.assign(sw_, 0);
  st.best = q.limit + 1;
  st.stop_first = q.stop_at_first;
  st.stop_at_size = q.stop_at_size;
  st.stop = &stop;

  std::uint64_t* unc = st.unc.data();
  for (int e = 0; e < n_elems_; ++e) set_bit(unc, e);
  for (int s : q.forbidden) set_bit(st.forbidden.data(), s);
  for (int s : q.forced) {
    if (test_bit(st.forbidden.data(), s)) return {};
    set_bit(st.forbidden.data(), s);
    st.chosen.push_back(s);
    const std::uint64_t* c = &cover_[static_cast<std::size_t>(s) * ew_];
    for (int w = 0; w < ew_; ++w) unc[w] &= ~c[w];
  }
  dfs(st, 0);

  Outcome out;
  out.nodes = st.nodes;
  out.aborted = st.aborted;
  out.found = st.best <= q.limit;
  if (out.found) out.sets = st.best_sets;
  return out;
}

CoverEngine::Outcome CoverEngine::brute(int k_lo, int k_hi, const StopFn& stop) const {
  Outcome out;
  std::vector<std::uint64_t> unions(static_cast<std::size_t>(n_sets_ + 2) * ew_, 0);
  std::vector<int> pick;
  std::vector<std::uint64_t> full(ew_, 0);
  for (int e = 0; e < n_elems_; ++e) set_bit(full.data(), e);

  for (int k = std::max(0, k_lo); k <= k_hi && k <= n_sets_; ++k) {
    pick.assign(k, 0);
    // Iterative lexicographic k-combination walk with prefix unions.
    int d = 0;
    if (k == 0) {
      ++out.nodes;
      if (n_elems_ == 0) {
        out.found = true;
        return out;
      }
      continue;
    }
    pick[0] = 0;
    while (d >= 0) {
      if (pick[d] > n_sets_ - (k - d)) {
        --d;
        if (d >= 0) ++pick[d];
        continue;
      }
      ++out.nodes;
      if ((out.nodes & 4095) == 0 && stop && stop()) {
        out.aborted = true;
        return out;
      }
      const std::uint64_t* prev = d == 0 ? nullptr : &unions[static_cast<std::size_t>(d - 1) * ew_];
      std::uint64_t* cur = &unions[static_cast<std::size_t>(d) * ew_];
      const std::uint64_t* c = &cover_[static_cast<std::size_t>(pick[d]) * ew_];
      for (int w = 0; w < ew_; ++w) cur[w] = (prev ? prev[w] : 0) | c[w];
      if (d == k - 1) {
        bool ok = true;
        for (int w = 0; w < ew_ && ok; ++w) ok = (cur[w] & full[w]) == full[w];
        if (ok) {
          out.found = true;
          out.sets = pick;
          return out;
        }
        ++pick[d];
      } else {
        ++d;
        pick[d] = pick[d - 1] + 1;
      }
    }
  }
  return out;
}

}  // namespace hopdom::detail
