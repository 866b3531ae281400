#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "plslab/set_problems.hpp"

namespace plslab {
namespace detail {

// Member order shared by both greedy passes: heavier first, index breaking
// ties, so runs are deterministic.
inline std::vector<int> weight_descending_order(const WeightedCollection& col) {
  std::vector<int> order(static_cast<std::size_t>(col.num_sets()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&col](int a, int b) {
    return col.weights[static_cast<std::size_t>(a)] >
           col.weights[static_cast<std::size_t>(b)];
  });
  return order;
}

}  // namespace detail

// Greedy packing: scan members by descending weight, keep one whenever it is
// disjoint from everything kept so far and the capacity allows.  The result
// is 1-differ optimal: any addable outside member was already rejected
// against a kept subset, and a single swap can only re-admit a member no
// heavier than the one it evicts.  (It need not be 2-differ optimal: one
// heavy member can block two lighter disjoint ones worth more together.)
inline Solution greedy_packing(const SpInstance& inst) {
  validate_sp(inst);
  CollectionSubset chosen;
  std::vector<char> occupied(static_cast<std::size_t>(inst.col.ground_size), 0);
  for (int i : detail::weight_descending_order(inst.col)) {
    if (static_cast<int>(chosen.indices.size()) >= inst.max_chosen) break;
    const ElemSet& s = inst.col.sets[static_cast<std::size_t>(i)];
    bool clash = false;
    for (int e : s)
      if (occupied[static_cast<std::size_t>(e)]) {
        clash = true;
        break;
      }
    if (clash) continue;
    for (int e : s) occupied[static_cast<std::size_t>(e)] = 1;
    chosen.indices.push_back(i);
  }
  canonicalize(chosen);
  return chosen;
}

// Greedy covering: start from the full collection (which must cover) and scan
// members by descending weight, dropping one whenever the rest still covers.
// The survivors form a cover no 1-differ move can lighten: every kept member
// privately covers some element against everything still present when it was
// scanned, which includes every lighter member a swap could bring in.
inline Solution greedy_cover(const ScInstance& inst) {
  validate_sc(inst);
  std::vector<int> cover_count(static_cast<std::size_t>(inst.col.ground_size),
                               0);
  for (const ElemSet& s : inst.col.sets)
    for (int e : s) ++cover_count[static_cast<std::size_t>(e)];
  for (int e = 0; e < inst.col.ground_size; ++e)
    require(cover_count[static_cast<std::size_t>(e)] > 0,
            "collection does not cover the ground set");

  std::vector<char> kept(static_cast<std::size_t>(inst.col.num_sets()), 1);
  for (int i : detail::weight_descending_order(inst.col)) {
    const ElemSet& s = inst.col.sets[static_cast<std::size_t>(i)];
    bool removable = true;
    for (int e : s)
      if (cover_count[static_cast<std::size_t>(e)] <= 1) {
        removable = false;
        break;
      }
    if (!removable) continue;
    kept[static_cast<std::size_t>(i)] = 0;
    for (int e : s) --cover_count[static_cast<std::size_t>(e)];
  }
  CollectionSubset chosen;
  for (int i = 0; i < inst.col.num_sets(); ++i)
    if (kept[static_cast<std::size_t>(i)]) chosen.indices.push_back(i);
  return chosen;
}

}  // namespace plslab
