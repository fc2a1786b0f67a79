#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace hopdom::detail {

// Minimum-cardinality set cover over a small universe, using word-packed
// bitsets. Elements and sets are dense ids; set ids double as vertex ids so
// the lexicographic order of chosen sets is the witness order.
class CoverEngine {
 public:
  CoverEngine(int n_elems, const std::vector<std::vector<int>>& set_elems);

  int n_elems() const { return n_elems_; }
  int n_sets() const { return n_sets_; }
  // True iff every element belongs to at least one set.
  bool coverable() const;

  std::vector<int> greedy() const;
  int root_lower_bound() const;

  struct Query {
    std::vector<int> forced;       // sets that must be part of the cover
    std::vector<int> forbidden;    // sets that may not be used
    int limit = 0;                 // accept only covers with size <= limit
    bool stop_at_first = false;    // return the first cover within limit
    int stop_at_size = -1;         // return as soon as a cover of size <= this is found
  };
  struct Outcome {
    bool found = false;
    bool aborted = false;  // stop callback fired
    std::vector<int> sets;  // sorted
    std::uint64_t nodes = 0;
  };
  using StopFn = std::function<bool()>;

  // Branch and bound: branch on the uncovered element with the fewest
  // usable sets; bound by a packing of pairwise set-disjoint elements.
  Outcome search(const Query& q, const StopFn& stop) const;

  // Enumerates k-subsets in lexicographic order for k = k_lo..k_hi; the first
  // cover found is the lexicographically smallest of minimum size.
  Outcome brute(int k_lo, int k_hi, const StopFn& stop) const;

 private:
  int n_elems_;
  int n_sets_;
  int ew_;  // words per element bitset
  int sw_;  // words per set bitset
  std::vector<std::uint64_t> cover_;  // n_sets_ x ew_
  std::vector<std::uint64_t> by_;     // n_elems_ x sw_

  struct State;
  void dfs(State& st, int depth) const;
  int lower_bound(State& st, const std::uint64_t* unc, int* branch_elem) const;
};

}  // namespace hopdom::detail
