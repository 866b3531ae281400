#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "plslab/error.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// Neighbor streams deliver candidates through a visitor; returning false
// stops the enumeration (first-improvement, caps).  Emission order is fixed
// and documented per problem, which keeps searches replayable.
using SolutionVisitor =
    std::function<bool(const Solution&, const std::string&)>;

// k-differ distance: at most k member operations, each an addition, deletion,
// or exchange, i.e. max(|S \ S'|, |S' \ S|) <= k.  Enumeration order: drop
// count d from 0..k (outer), add count a from 0..k (inner, skipping d=a=0),
// combinations lexicographic.
namespace detail {

inline bool for_each_combination(
    int n, int c, const std::function<bool(const std::vector<int>&)>& fn) {
  if (c > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(idx)) return false;
    int i = c - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - c + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < c; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::string id_list(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i] + 1);  // 1-based, matching the text format
  }
  return out + "}";
}

// Shared driver for index-subset solutions (SP/SC/TS): drop d members of the
// current subset, add a members of its complement, keep whatever the
// problem's feasibility predicate accepts.
inline void index_subset_kdiffer(
    int universe, const std::vector<int>& current, int k,
    const std::function<bool(const std::vector<int>&)>& feasible,
    const SolutionVisitor& visit) {
  std::vector<int> outside;
  {
    std::vector<char> in(static_cast<std::size_t>(universe), 0);
    for (int i : current) in[static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < universe; ++i)
      if (!in[static_cast<std::size_t>(i)]) outside.push_back(i);
  }
  int cur_n = static_cast<int>(current.size());
  int out_n = static_cast<int>(outside.size());
  for (int d = 0; d <= k && d <= cur_n; ++d) {
    for (int a = 0; a <= k && a <= out_n; ++a) {
      if (d == 0 && a == 0) continue;
      bool keep_going = for_each_combination(
          cur_n, d, [&](const std::vector<int>& drop_pos) {
            std::vector<int> dropped;
            dropped.reserve(drop_pos.size());
            for (int p : drop_pos)
              dropped.push_back(current[static_cast<std::size_t>(p)]);
            return for_each_combination(
                out_n, a, [&](const std::vector<int>& add_pos) {
                  std::vector<int> added;
                  added.reserve(add_pos.size());
                  for (int p : add_pos)
                    added.push_back(outside[static_cast<std::size_t>(p)]);
                  std::vector<int> next;
                  next.reserve(current.size() - dropped.size() + added.size());
                  std::size_t di = 0;
                  for (int i : current) {
                    if (di < dropped.size() && dropped[di] == i) {
                      ++di;
                      continue;
                    }
                    next.push_back(i);
                  }
                  for (int i : added) next.push_back(i);
                  std::sort(next.begin(), next.end());
                  if (!feasible(next)) return true;
                  std::string desc =
                      "drop " + id_list(dropped) + " add " + id_list(added);
                  return visit(CollectionSubset{std::move(next)}, desc);
                });
          });
      if (!keep_going) return;
    }
  }
}

}  // namespace detail

inline void kdiffer_neighbors(const SpInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit) {
  const auto& s = solution_as<CollectionSubset>(sol, "set packing");
  detail::index_subset_kdiffer(
      inst.col.num_sets(), s.indices, k,
      [&](const std::vector<int>& next) {
        return static_cast<int>(next.size()) <= inst.max_chosen;
      },
      visit);
}

inline void kdiffer_neighbors(const ScInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit) {
  const auto& s = solution_as<CollectionSubset>(sol, "set cover");
  detail::index_subset_kdiffer(
      inst.col.num_sets(), s.indices, k,
      [&](const std::vector<int>& next) {
        return covers_ground(inst.col, next);
      },
      visit);
}

inline void kdiffer_neighbors(const TsInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit) {
  const auto& s = solution_as<CollectionSubset>(sol, "test set");
  detail::index_subset_kdiffer(
      inst.col.num_sets(), s.indices, k,
      [&](const std::vector<int>& next) {
        return !next.empty() &&
               static_cast<int>(next.size()) <= inst.max_chosen;
      },
      visit);
}

// SSP: flip the side of up to k elements.
inline void kdiffer_neighbors(const SspInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit) {
  const auto& s = solution_as<Partition>(sol, "set splitting");
  int n = inst.col.ground_size;
  for (int c = 1; c <= k && c <= n; ++c) {
    bool keep_going =
        detail::for_each_combination(n, c, [&](const std::vector<int>& flips) {
          Partition next = s;
          for (int e : flips)
            next.side[static_cast<std::size_t>(e)] ^= 1;
          return visit(Solution{std::move(next)},
                       "flip " + detail::id_list(flips));
        });
    if (!keep_going) return;
  }
}

// HS / CC: element-subset add/drop/exchange.
namespace detail {
inline void element_subset_kdiffer(int ground, const ElemSet& current, int k,
                                   int capacity /* -1 = unbounded */,
                                   const SolutionVisitor& visit) {
  std::vector<int> cur(current.begin(), current.end());
  index_subset_kdiffer(
      ground, cur, k,
      [&](const std::vector<int>& next) {
        return capacity < 0 || static_cast<int>(next.size()) <= capacity;
      },
      [&](const Solution& candidate, const std::string& desc) {
        const auto& cs = std::get<CollectionSubset>(candidate);
        return visit(Solution{ElementSubset{ElemSet(cs.indices.begin(),
                                                    cs.indices.end())}},
                     desc);
      });
}
}  // namespace detail

inline void kdiffer_neighbors(const HsInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit) {
  const auto& s = solution_as<ElementSubset>(sol, "hitting set");
  detail::element_subset_kdiffer(inst.col.ground_size, s.elements, k,
                                 inst.max_chosen, visit);
}

inline void kdiffer_neighbors(const CcInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit) {
  const auto& s = solution_as<ElementSubset>(sol, "comparative containment");
  detail::element_subset_kdiffer(inst.m_side.ground_size, s.elements, k, -1,
                                 visit);
}

// IP: change the donor at up to k positions.
inline void kdiffer_neighbors(const IpInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit) {
  const auto& s = solution_as<SetVector>(sol, "intersection pattern");
  int n = inst.dim();
  int donors = inst.donors.num_sets();
  for (int c = 1; c <= k && c <= n; ++c) {
    bool keep_going = detail::for_each_combination(
        n, c, [&](const std::vector<int>& positions) {
          // product of alternative donors over the chosen positions
          std::vector<int> choice(positions.size(), 0);
          std::function<bool(std::size_t, SetVector&)> rec =
              [&](std::size_t at, SetVector& next) -> bool {
            if (at == positions.size()) {
              std::string desc;
              for (std::size_t t = 0; t < positions.size(); ++t) {
                if (t) desc += ", ";
                desc += "pos " + std::to_string(positions[t] + 1) + " -> D" +
                        std::to_string(
                            next.donor[static_cast<std::size_t>(positions[t])] +
                            1);
              }
              return visit(Solution{next}, desc);
            }
            int pos = positions[at];
            int old = s.donor[static_cast<std::size_t>(pos)];
            for (int d = 0; d < donors; ++d) {
              if (d == old) continue;
              next.donor[static_cast<std::size_t>(pos)] = d;
              if (!rec(at + 1, next)) return false;
            }
            next.donor[static_cast<std::size_t>(pos)] = old;
            return true;
          };
          SetVector next = s;
          return rec(0, next);
        });
    if (!keep_going) return;
  }
}

// SB: replace up to k basis members by arbitrary new subsets of the ground
// set (family stays distinct and of fixed size).  The ground set is capped
// because each slot ranges over 2^|B| candidates.
inline void kdiffer_neighbors(const SbInstance& inst, const Solution& sol,
                              int k, const SolutionVisitor& visit,
                              int ground_cap = 16) {
  const auto& s = solution_as<BasisFamily>(sol, "set basis");
  int n = inst.col.ground_size;
  if (n > ground_cap)
    throw NeighborhoodTooLarge(
        "neighborhood too large: set-basis ground set exceeds the enumeration "
        "cap (" +
        std::to_string(n) + " > " + std::to_string(ground_cap) + ")");
  int m = static_cast<int>(s.members.size());
  std::uint64_t subsets = 1ull << n;

  std::function<bool(std::size_t, const std::vector<int>&, BasisFamily&)> rec =
      [&](std::size_t at, const std::vector<int>& slots,
          BasisFamily& next) -> bool {
    if (at == slots.size()) {
      BasisFamily canon = next;
      canonicalize(canon);
      for (std::size_t i = 1; i < canon.members.size(); ++i)
        if (canon.members[i - 1] == canon.members[i]) return true;  // dup
      if (canon == s) return true;
      std::string desc;
      for (std::size_t t = 0; t < slots.size(); ++t) {
        if (t) desc += ", ";
        std::vector<int> ids(next.members[static_cast<std::size_t>(slots[t])]);
        desc += "member " + std::to_string(slots[t] + 1) + " -> " +
                detail::id_list(ids);
      }
      return visit(Solution{std::move(canon)}, desc);
    }
    int slot = slots[at];
    ElemSet old = next.members[static_cast<std::size_t>(slot)];
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      ElemSet cand;
      for (int e = 0; e < n; ++e)
        if (mask & (1ull << e)) cand.push_back(e);
      if (cand == old) continue;
      next.members[static_cast<std::size_t>(slot)] = cand;
      if (!rec(at + 1, slots, next)) {
        next.members[static_cast<std::size_t>(slot)] = old;
        return false;
      }
    }
    next.members[static_cast<std::size_t>(slot)] = old;
    return true;
  };

  for (int c = 1; c <= k && c <= m; ++c) {
    bool keep_going = detail::for_each_combination(
        m, c, [&](const std::vector<int>& slots) {
          BasisFamily next = s;
          return rec(0, slots, next);
        });
    if (!keep_going) return;
  }
}

// X3C: replace up to k chosen 3-sets; the freed elements must be regrouped
// into new 3-sets (the cover stays exact).  All regroupings are enumerated.
namespace detail {
inline bool for_each_triple_partition(
    std::vector<int> elems, std::vector<Triple>& acc,
    const std::function<bool(const std::vector<Triple>&)>& fn) {
  if (elems.empty()) return fn(acc);
  int first = elems[0];
  for (std::size_t i = 1; i + 1 < elems.size() + 1; ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      Triple t{first, elems[i], elems[j]};
      std::vector<int> rest;
      rest.reserve(elems.size() - 3);
      for (std::size_t p = 1; p < elems.size(); ++p)
        if (p != i && p != j) rest.push_back(elems[p]);
      acc.push_back(t);
      bool cont = for_each_triple_partition(std::move(rest), acc, fn);
      acc.pop_back();
      if (!cont) return false;
    }
  }
  return true;
}
}  // namespace detail

inline void kdiffer_neighbors(const X3cInstance&, const Solution& sol, int k,
                              const SolutionVisitor& visit) {
  // Covers are exact, so replacement 3-sets can only regroup the elements the
  // dropped 3-sets freed; the instance itself adds no further choices.
  const auto& s = solution_as<Matching>(sol, "exact cover by 3-sets");
  int m = static_cast<int>(s.triples.size());
  for (int c = 1; c <= k && c <= m; ++c) {
    bool keep_going = detail::for_each_combination(
        m, c, [&](const std::vector<int>& picks) {
          std::vector<int> freed;
          std::vector<char> removed(static_cast<std::size_t>(m), 0);
          for (int p : picks) {
            removed[static_cast<std::size_t>(p)] = 1;
            for (int e : s.triples[static_cast<std::size_t>(p)])
              freed.push_back(e);
          }
          std::sort(freed.begin(), freed.end());
          std::vector<Triple> acc;
          return detail::for_each_triple_partition(
              freed, acc, [&](const std::vector<Triple>& regroup) {
                Matching next;
                next.triples.reserve(s.triples.size());
                for (int i = 0; i < m; ++i)
                  if (!removed[static_cast<std::size_t>(i)])
                    next.triples.push_back(s.triples[static_cast<std::size_t>(i)]);
                for (const Triple& t : regroup) next.triples.push_back(t);
                canonicalize(next);
                if (next == s) return true;
                return visit(Solution{std::move(next)},
                             "replace " + std::to_string(c) + " sets");
              });
        });
    if (!keep_going) return;
  }
}

// W3DM (p,q): up to p triples replaced, up to q boys-or-girls moved to a new
// home.  Exhaustive; guarded by caps because combinations times rewirings
// explodes.  Candidates are deduplicated within the stream.
inline void w3dm_pq_neighbors(const W3dmInstance& inst, const Solution& sol,
                              int p, int q, const SolutionVisitor& visit,
                              int n_cap = 14, int p_cap = 4) {
  const auto& s = solution_as<Matching>(sol, "3-dimensional matching");
  if (inst.n > n_cap)
    throw NeighborhoodTooLarge(
        "neighborhood too large: matching dimension exceeds the (p,q)-scan "
        "cap (" +
        std::to_string(inst.n) + " > " + std::to_string(n_cap) + ")");
  if (p > p_cap)
    throw NeighborhoodTooLarge(
        "neighborhood too large: p exceeds the (p,q)-scan cap");

  int m = static_cast<int>(s.triples.size());
  std::set<std::vector<Triple>> seen;
  for (int pp = 1; pp <= p && pp <= m; ++pp) {
    bool keep_going = detail::for_each_combination(
        m, pp, [&](const std::vector<int>& picks) {
          std::vector<int> boys, girls, homes;
          std::vector<char> removed(static_cast<std::size_t>(m), 0);
          for (int i : picks) {
            removed[static_cast<std::size_t>(i)] = 1;
            const Triple& t = s.triples[static_cast<std::size_t>(i)];
            boys.push_back(t[0]);
            girls.push_back(t[1]);
            homes.push_back(t[2]);
          }
          std::sort(boys.begin(), boys.end());
          std::sort(girls.begin(), girls.end());
          std::sort(homes.begin(), homes.end());

          std::vector<int> gp(girls.size()), hp(homes.size());
          std::iota(gp.begin(), gp.end(), 0);
          bool cont = true;
          do {
            std::iota(hp.begin(), hp.end(), 0);
            do {
              std::vector<Triple> rebuilt;
              rebuilt.reserve(boys.size());
              for (std::size_t i = 0; i < boys.size(); ++i)
                rebuilt.push_back({boys[i], girls[static_cast<std::size_t>(gp[i])],
                                   homes[static_cast<std::size_t>(hp[i])]});
              Matching next;
              next.triples.reserve(s.triples.size());
              for (int i = 0; i < m; ++i)
                if (!removed[static_cast<std::size_t>(i)])
                  next.triples.push_back(s.triples[static_cast<std::size_t>(i)]);
              for (const Triple& t : rebuilt) next.triples.push_back(t);
              canonicalize(next);
              if (next == s) continue;
              if (!seen.insert(next.triples).second) continue;
              // relocations: boys plus girls whose home changed
              int moved = 0;
              {
                std::vector<int> old_bh(static_cast<std::size_t>(inst.n), -1);
                std::vector<int> old_gh(static_cast<std::size_t>(inst.n), -1);
                std::vector<int> new_bh(static_cast<std::size_t>(inst.n), -1);
                std::vector<int> new_gh(static_cast<std::size_t>(inst.n), -1);
                for (const Triple& t : s.triples) {
                  old_bh[static_cast<std::size_t>(t[0])] = t[2];
                  old_gh[static_cast<std::size_t>(t[1])] = t[2];
                }
                for (const Triple& t : next.triples) {
                  new_bh[static_cast<std::size_t>(t[0])] = t[2];
                  new_gh[static_cast<std::size_t>(t[1])] = t[2];
                }
                for (int i = 0; i < inst.n; ++i) {
                  if (old_bh[static_cast<std::size_t>(i)] !=
                      new_bh[static_cast<std::size_t>(i)])
                    ++moved;
                  if (old_gh[static_cast<std::size_t>(i)] !=
                      new_gh[static_cast<std::size_t>(i)])
                    ++moved;
                }
              }
              if (moved > q) continue;
              if (!visit(Solution{next}, "rewire " + std::to_string(pp) +
                                             " triples, " +
                                             std::to_string(moved) + " moved")) {
                cont = false;
                goto done;
              }
            } while (std::next_permutation(hp.begin(), hp.end()));
          } while (std::next_permutation(gp.begin(), gp.end()));
        done:
          return cont;
        });
    if (!keep_going) return;
  }
}

}  // namespace plslab
