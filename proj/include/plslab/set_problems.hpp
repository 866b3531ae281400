#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "plslab/error.hpp"
#include "plslab/ints.hpp"
#include "plslab/sets.hpp"

namespace plslab {

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

// Indexed weighted family of subsets of a ground set [0, ground_size).
// Duplicate element-sets with distinct indices are allowed everywhere (the
// constructions rely on it); labels are optional and purely descriptive.
struct WeightedCollection {
  int ground_size = 0;
  std::vector<ElemSet> sets;
  std::vector<Weight> weights;
  std::vector<std::string> element_labels;  // empty or size ground_size
  std::vector<std::string> set_labels;      // empty or size sets.size()

  int num_sets() const { return static_cast<int>(sets.size()); }
};

inline void validate_collection(const WeightedCollection& col) {
  require(col.ground_size >= 0, "negative ground size");
  require(col.sets.size() == col.weights.size(),
          "collection weights size mismatch");
  if (!col.element_labels.empty())
    require(static_cast<int>(col.element_labels.size()) == col.ground_size,
            "element label table size mismatch");
  if (!col.set_labels.empty())
    require(col.set_labels.size() == col.sets.size(),
            "set label table size mismatch");
  for (const ElemSet& s : col.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      require(s[i] >= 0 && s[i] < col.ground_size,
              "set element out of ground range");
      require(i == 0 || s[i - 1] < s[i], "set elements must be sorted unique");
    }
  }
  for (const Weight& w : col.weights) require(w >= 0, "negative set weight");
}

// Set packing: pick at most max_chosen sets; only members disjoint from every
// other member score.
struct SpInstance {
  WeightedCollection col;
  int max_chosen = 0;
};

// Set splitting: 2-partition the ground set; split sets score.
struct SspInstance {
  WeightedCollection col;
};

// Set cover (minimization): chosen sets must cover the ground set.
struct ScInstance {
  WeightedCollection col;
};

enum class TsSeparation { two_sided, one_sided };

// Test set: pick at most max_chosen sets; an element pair scores its pair
// weight when the chosen family separates it.
struct TsInstance {
  WeightedCollection col;
  std::vector<Weight> pair_w;  // dense upper triangle over the ground set
  int max_chosen = 0;
  TsSeparation separation = TsSeparation::two_sided;
};

inline std::size_t pair_index(int i, int j, int n) {
  // i < j, both in [0, n)
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

inline const Weight& ts_pair_weight(const TsInstance& inst, int i, int j) {
  if (i > j) std::swap(i, j);
  return inst.pair_w[pair_index(i, j, inst.col.ground_size)];
}

// Set basis: pick exactly basis_size distinct subsets of the ground set;
// collection entries expressible as unions of picked subsets score.
struct SbInstance {
  WeightedCollection col;
  int basis_size = 0;
};

// Hitting set: pick at most max_chosen elements; hit sets score.
struct HsInstance {
  WeightedCollection col;
  int max_chosen = 0;
};

// Intersection pattern: place one donor set per position; position pairs
// (i <= j) whose intersection cardinality matches a[i][j] score b[i][j].
struct IpInstance {
  std::vector<std::vector<long long>> a;  // cardinality targets, n x n
  std::vector<std::vector<Weight>> b;     // bonuses, n x n
  WeightedCollection donors;

  int dim() const { return static_cast<int>(a.size()); }
};

// Comparative containment: pick any S subseteq B; score the weight of M-side
// supersets of S minus the weight of N-side supersets, plus a fixed shift.
struct CcInstance {
  WeightedCollection m_side;
  WeightedCollection n_side;  // shares the ground set with m_side
  Weight shift = 0;
};

using Triple = std::array<int, 3>;

// Weighted 3-dimensional matching over [0, n) x [0, n) x [0, n); triples not
// in the weight map weigh 0.
struct W3dmInstance {
  int n = 0;
  std::map<Triple, Weight> weights;
};

// Exact cover by 3-sets over a ground set of size 3q; *every* 3-element
// subset is admissible, unlisted ones weigh 0.  Triples are stored sorted.
struct X3cInstance {
  int ground_size = 0;
  std::map<Triple, Weight> weights;
};

inline void validate_sp(const SpInstance& inst) {
  validate_collection(inst.col);
  require(inst.max_chosen >= 0, "negative capacity");
}

inline void validate_ssp(const SspInstance& inst) {
  validate_collection(inst.col);
}

inline void validate_sc(const ScInstance& inst) { validate_collection(inst.col); }

inline void validate_ts(const TsInstance& inst) {
  validate_collection(inst.col);
  require(inst.max_chosen >= 0, "negative capacity");
  int n = inst.col.ground_size;
  require(inst.pair_w.size() == static_cast<std::size_t>(n) * (n - 1) / 2,
          "pair weight table must cover every unordered element pair");
  for (const Weight& w : inst.pair_w) require(w >= 0, "negative pair weight");
}

inline void validate_sb(const SbInstance& inst) {
  validate_collection(inst.col);
  require(inst.basis_size >= 0, "negative basis size");
}

inline void validate_hs(const HsInstance& inst) {
  validate_collection(inst.col);
  require(inst.max_chosen >= 0, "negative capacity");
}

inline void validate_ip(const IpInstance& inst) {
  validate_collection(inst.donors);
  std::size_t n = inst.a.size();
  require(inst.b.size() == n, "pattern matrices must have equal dimension");
  for (std::size_t i = 0; i < n; ++i) {
    require(inst.a[i].size() == n && inst.b[i].size() == n,
            "pattern matrices must be square");
    for (std::size_t j = 0; j < n; ++j) {
      require(inst.a[i][j] >= 0, "negative cardinality target");
      require(inst.b[i][j] >= 0, "negative bonus");
      require(inst.a[i][j] == inst.a[j][i] && inst.b[i][j] == inst.b[j][i],
              "pattern matrices must be symmetric");
    }
  }
  require(inst.donors.num_sets() >= 1, "donor collection must be non-empty");
}

inline void validate_cc(const CcInstance& inst) {
  validate_collection(inst.m_side);
  validate_collection(inst.n_side);
  require(inst.m_side.ground_size == inst.n_side.ground_size,
          "comparative containment sides must share the ground set");
}

inline void validate_triple(const Triple& t, int n) {
  for (int c : t) require(c >= 0 && c < n, "triple coordinate out of range");
}

inline void validate_w3dm(const W3dmInstance& inst) {
  require(inst.n >= 1, "matching dimension must be positive");
  for (const auto& [t, w] : inst.weights) {
    validate_triple(t, inst.n);
    require(w >= 0, "negative triple weight");
  }
}

inline void validate_x3c(const X3cInstance& inst) {
  require(inst.ground_size >= 3 && inst.ground_size % 3 == 0,
          "exact-cover ground size must be a positive multiple of 3");
  for (const auto& [t, w] : inst.weights) {
    validate_triple(t, inst.ground_size);
    require(t[0] < t[1] && t[1] < t[2], "3-set must be sorted and distinct");
    require(w >= 0, "negative 3-set weight");
  }
}

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

struct CollectionSubset {  // SP, SC, TS
  std::vector<int> indices;  // sorted unique set indices
  bool operator==(const CollectionSubset&) const = default;
};

struct ElementSubset {  // HS, CC
  ElemSet elements;
  bool operator==(const ElementSubset&) const = default;
};

struct Partition {  // SSP: side[e] == 0 -> S1, == 1 -> S2
  std::vector<std::uint8_t> side;
  bool operator==(const Partition&) const = default;
};

struct SetVector {  // IP: donor index per position
  std::vector<int> donor;
  bool operator==(const SetVector&) const = default;
};

struct BasisFamily {  // SB: distinct subsets, kept sorted for canonical form
  std::vector<ElemSet> members;
  bool operator==(const BasisFamily&) const = default;
};

struct Matching {  // W3DM (coordinate triples) and X3C (sorted 3-sets)
  std::vector<Triple> triples;  // kept sorted
  bool operator==(const Matching&) const = default;
};

using Solution = std::variant<CollectionSubset, ElementSubset, Partition,
                              SetVector, BasisFamily, Matching>;

template <class T>
inline const T& solution_as(const Solution& s, const char* what) {
  const T* p = std::get_if<T>(&s);
  if (!p) throw Error(std::string("solution type mismatch for ") + what);
  return *p;
}

inline void canonicalize(CollectionSubset& s) {
  std::sort(s.indices.begin(), s.indices.end());
  s.indices.erase(std::unique(s.indices.begin(), s.indices.end()),
                  s.indices.end());
}

inline void canonicalize(BasisFamily& s) {
  for (ElemSet& m : s.members) m = make_set(std::move(m));
  std::sort(s.members.begin(), s.members.end());
}

inline void canonicalize(Matching& s) {
  std::sort(s.triples.begin(), s.triples.end());
}

// ---------------------------------------------------------------------------
// Feasibility
// ---------------------------------------------------------------------------

inline bool valid_index_subset(const std::vector<int>& idx, int num_sets) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= num_sets) return false;
    if (i > 0 && idx[i - 1] >= idx[i]) return false;
  }
  return true;
}

inline bool covers_ground(const WeightedCollection& col,
                          const std::vector<int>& idx) {
  std::vector<char> hit(static_cast<std::size_t>(col.ground_size), 0);
  for (int i : idx)
    for (Element e : col.sets[static_cast<std::size_t>(i)])
      hit[static_cast<std::size_t>(e)] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

inline bool feasible_sp(const SpInstance& inst, const Solution& sol) {
  const auto& s = solution_as<CollectionSubset>(sol, "set packing");
  return valid_index_subset(s.indices, inst.col.num_sets()) &&
         static_cast<int>(s.indices.size()) <= inst.max_chosen;
}

inline bool feasible_ssp(const SspInstance& inst, const Solution& sol) {
  const auto& s = solution_as<Partition>(sol, "set splitting");
  if (static_cast<int>(s.side.size()) != inst.col.ground_size) return false;
  for (std::uint8_t b : s.side)
    if (b > 1) return false;
  return true;
}

inline bool feasible_sc(const ScInstance& inst, const Solution& sol) {
  const auto& s = solution_as<CollectionSubset>(sol, "set cover");
  return valid_index_subset(s.indices, inst.col.num_sets()) &&
         covers_ground(inst.col, s.indices);
}

inline bool feasible_ts(const TsInstance& inst, const Solution& sol) {
  const auto& s = solution_as<CollectionSubset>(sol, "test set");
  return !s.indices.empty() &&
         valid_index_subset(s.indices, inst.col.num_sets()) &&
         static_cast<int>(s.indices.size()) <= inst.max_chosen;
}

inline bool feasible_sb(const SbInstance& inst, const Solution& sol) {
  const auto& s = solution_as<BasisFamily>(sol, "set basis");
  if (static_cast<int>(s.members.size()) != inst.basis_size) return false;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    const ElemSet& m = s.members[i];
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m[t] < 0 || m[t] >= inst.col.ground_size) return false;
      if (t > 0 && m[t - 1] >= m[t]) return false;
    }
    if (i > 0 && !(s.members[i - 1] < m)) return false;  // sorted, distinct
  }
  return true;
}

inline bool feasible_hs(const HsInstance& inst, const Solution& sol) {
  const auto& s = solution_as<ElementSubset>(sol, "hitting set");
  if (static_cast<int>(s.elements.size()) > inst.max_chosen) return false;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (s.elements[i] < 0 || s.elements[i] >= inst.col.ground_size)
      return false;
    if (i > 0 && s.elements[i - 1] >= s.elements[i]) return false;
  }
  return true;
}

inline bool feasible_ip(const IpInstance& inst, const Solution& sol) {
  const auto& s = solution_as<SetVector>(sol, "intersection pattern");
  if (static_cast<int>(s.donor.size()) != inst.dim()) return false;
  for (int d : s.donor)
    if (d < 0 || d >= inst.donors.num_sets()) return false;
  return true;
}

inline bool feasible_cc(const CcInstance& inst, const Solution& sol) {
  const auto& s = solution_as<ElementSubset>(sol, "comparative containment");
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (s.elements[i] < 0 || s.elements[i] >= inst.m_side.ground_size)
      return false;
    if (i > 0 && s.elements[i - 1] >= s.elements[i]) return false;
  }
  return true;
}

inline bool feasible_w3dm(const W3dmInstance& inst, const Solution& sol) {
  const auto& s = solution_as<Matching>(sol, "3-dimensional matching");
  if (static_cast<int>(s.triples.size()) != inst.n) return false;
  for (int coord = 0; coord < 3; ++coord) {
    std::vector<char> used(static_cast<std::size_t>(inst.n), 0);
    for (const Triple& t : s.triples) {
      int v = t[static_cast<std::size_t>(coord)];
      if (v < 0 || v >= inst.n) return false;
      if (used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (std::size_t i = 1; i < s.triples.size(); ++i)
    if (!(s.triples[i - 1] < s.triples[i])) return false;
  return true;
}

inline bool feasible_x3c(const X3cInstance& inst, const Solution& sol) {
  const auto& s = solution_as<Matching>(sol, "exact cover by 3-sets");
  if (static_cast<int>(s.triples.size()) * 3 != inst.ground_size) return false;
  std::vector<char> used(static_cast<std::size_t>(inst.ground_size), 0);
  for (const Triple& t : s.triples) {
    if (!(t[0] < t[1] && t[1] < t[2])) return false;
    for (int e : t) {
      if (e < 0 || e >= inst.ground_size) return false;
      if (used[static_cast<std::size_t>(e)]) return false;
      used[static_cast<std::size_t>(e)] = 1;
    }
  }
  for (std::size_t i = 1; i < s.triples.size(); ++i)
    if (!(s.triples[i - 1] < s.triples[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Costs
// ---------------------------------------------------------------------------

// SP: a member scores iff it is disjoint from every other member.
inline Cost cost_sp(const SpInstance& inst, const Solution& sol) {
  const auto& s = solution_as<CollectionSubset>(sol, "set packing");
  Cost total = 0;
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    const ElemSet& si = inst.col.sets[static_cast<std::size_t>(s.indices[i])];
    bool lonely = true;
    for (std::size_t j = 0; j < s.indices.size() && lonely; ++j) {
      if (i == j) continue;
      if (sets_intersect(si,
                         inst.col.sets[static_cast<std::size_t>(s.indices[j])]))
        lonely = false;
    }
    if (lonely) total += inst.col.weights[static_cast<std::size_t>(s.indices[i])];
  }
  return total;
}

// SSP: a set scores iff the partition splits it (elements on both sides).
inline Cost cost_ssp(const SspInstance& inst, const Solution& sol) {
  const auto& s = solution_as<Partition>(sol, "set splitting");
  Cost total = 0;
  for (int i = 0; i < inst.col.num_sets(); ++i) {
    bool on0 = false, on1 = false;
    for (Element e : inst.col.sets[static_cast<std::size_t>(i)]) {
      if (s.side[static_cast<std::size_t>(e)] == 0)
        on0 = true;
      else
        on1 = true;
    }
    if (on0 && on1) total += inst.col.weights[static_cast<std::size_t>(i)];
  }
  return total;
}

// SC: total weight of the chosen cover (minimized).
inline Cost cost_sc(const ScInstance& inst, const Solution& sol) {
  const auto& s = solution_as<CollectionSubset>(sol, "set cover");
  require(feasible_sc(inst, sol), "cost of a non-cover is undefined");
  Cost total = 0;
  for (int i : s.indices) total += inst.col.weights[static_cast<std::size_t>(i)];
  return total;
}

// TS: element pair (i, j) scores its pair weight when separated.  two_sided
// needs a chosen set containing i-but-not-j *and* one containing j-but-not-i;
// one_sided needs only one set containing exactly one endpoint.
inline Cost cost_ts(const TsInstance& inst, const Solution& sol) {
  const auto& s = solution_as<CollectionSubset>(sol, "test set");
  int n = inst.col.ground_size;
  Cost total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool i_only = false, j_only = false;
      for (int idx : s.indices) {
        const ElemSet& c = inst.col.sets[static_cast<std::size_t>(idx)];
        bool has_i = set_contains(c, i);
        bool has_j = set_contains(c, j);
        if (has_i && !has_j) i_only = true;
        if (has_j && !has_i) j_only = true;
        if (i_only && j_only) break;
      }
      bool separated = inst.separation == TsSeparation::two_sided
                           ? (i_only && j_only)
                           : (i_only || j_only);
      if (separated) total += ts_pair_weight(inst, i, j);
    }
  }
  return total;
}

// SB: a collection entry scores iff it equals the union of some subfamily of
// the basis.  Equivalent test: the union of all basis members contained in
// the entry reproduces the entry (the empty subfamily yields the empty set).
inline bool sb_expressible(const BasisFamily& basis, const ElemSet& entry) {
  ElemSet u;
  for (const ElemSet& m : basis.members)
    if (is_subset(m, entry)) u = set_union(u, m);
  return u == entry;
}

inline Cost cost_sb(const SbInstance& inst, const Solution& sol) {
  const auto& s = solution_as<BasisFamily>(sol, "set basis");
  Cost total = 0;
  for (int i = 0; i < inst.col.num_sets(); ++i)
    if (sb_expressible(s, inst.col.sets[static_cast<std::size_t>(i)]))
      total += inst.col.weights[static_cast<std::size_t>(i)];
  return total;
}

// HS: a collection entry scores iff the chosen elements hit it.
inline Cost cost_hs(const HsInstance& inst, const Solution& sol) {
  const auto& s = solution_as<ElementSubset>(sol, "hitting set");
  Cost total = 0;
  for (int i = 0; i < inst.col.num_sets(); ++i)
    if (sets_intersect(inst.col.sets[static_cast<std::size_t>(i)], s.elements))
      total += inst.col.weights[static_cast<std::size_t>(i)];
  return total;
}

// IP: position pair (i <= j) scores b[i][j] iff the placed donors intersect
// in exactly a[i][j] elements (i == j reads as the donor's cardinality).
inline Cost cost_ip(const IpInstance& inst, const Solution& sol) {
  const auto& s = solution_as<SetVector>(sol, "intersection pattern");
  int n = inst.dim();
  Cost total = 0;
  for (int i = 0; i < n; ++i) {
    const ElemSet& ci = inst.donors.sets[static_cast<std::size_t>(s.donor[i])];
    for (int j = i; j < n; ++j) {
      const ElemSet& cj =
          inst.donors.sets[static_cast<std::size_t>(s.donor[j])];
      long long isz = i == j ? static_cast<long long>(ci.size())
                             : intersection_size(ci, cj);
      if (isz == inst.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        total += inst.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return total;
}

// CC: supersets of S on the M side score positively, on the N side
// negatively; the fixed shift keeps reduced instances non-negative.
inline Cost cost_cc(const CcInstance& inst, const Solution& sol) {
  const auto& s = solution_as<ElementSubset>(sol, "comparative containment");
  Cost total = inst.shift;
  for (int i = 0; i < inst.m_side.num_sets(); ++i)
    if (is_subset(s.elements, inst.m_side.sets[static_cast<std::size_t>(i)]))
      total += inst.m_side.weights[static_cast<std::size_t>(i)];
  for (int i = 0; i < inst.n_side.num_sets(); ++i)
    if (is_subset(s.elements, inst.n_side.sets[static_cast<std::size_t>(i)]))
      total -= inst.n_side.weights[static_cast<std::size_t>(i)];
  return total;
}

inline Cost cost_w3dm(const W3dmInstance& inst, const Solution& sol) {
  const auto& s = solution_as<Matching>(sol, "3-dimensional matching");
  require(feasible_w3dm(inst, sol), "cost of a non-matching is undefined");
  Cost total = 0;
  for (const Triple& t : s.triples) {
    auto it = inst.weights.find(t);
    if (it != inst.weights.end()) total += it->second;
  }
  return total;
}

inline Cost cost_x3c(const X3cInstance& inst, const Solution& sol) {
  const auto& s = solution_as<Matching>(sol, "exact cover by 3-sets");
  require(feasible_x3c(inst, sol), "cost of a non-exact-cover is undefined");
  Cost total = 0;
  for (const Triple& t : s.triples) {
    auto it = inst.weights.find(t);
    if (it != inst.weights.end()) total += it->second;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Canonical initial solutions
// ---------------------------------------------------------------------------

inline Solution init_sp(const SpInstance&) { return CollectionSubset{}; }

inline Solution init_ssp(const SspInstance& inst) {
  return Partition{std::vector<std::uint8_t>(
      static_cast<std::size_t>(inst.col.ground_size), 0)};
}

inline Solution init_sc(const ScInstance& inst) {
  CollectionSubset s;
  s.indices.resize(static_cast<std::size_t>(inst.col.num_sets()));
  std::iota(s.indices.begin(), s.indices.end(), 0);
  if (!covers_ground(inst.col, s.indices))
    throw Error("collection does not cover the ground set");
  return s;
}

inline Solution init_ts(const TsInstance& inst) {
  require(inst.col.num_sets() >= 1 && inst.max_chosen >= 1,
          "test set instance admits no non-empty solution");
  return CollectionSubset{{0}};
}

inline Solution init_sb(const SbInstance& inst) {
  require(inst.basis_size <= inst.col.ground_size,
          "ground set too small for the requested basis size");
  BasisFamily fam;
  for (int e = 0; e < inst.basis_size; ++e) fam.members.push_back({e});
  return fam;
}

inline Solution init_hs(const HsInstance&) { return ElementSubset{}; }

inline Solution init_ip(const IpInstance& inst) {
  return SetVector{std::vector<int>(static_cast<std::size_t>(inst.dim()), 0)};
}

inline Solution init_cc(const CcInstance&) { return ElementSubset{}; }

inline Solution init_w3dm(const W3dmInstance& inst) {
  Matching m;
  for (int i = 0; i < inst.n; ++i) m.triples.push_back({i, i, i});
  return m;
}

// First-fit exact cover: sorted elements grouped in threes.  Always works
// because every 3-element subset is admissible.
inline Solution init_x3c(const X3cInstance& inst) {
  require(inst.ground_size % 3 == 0,
          "ground size must be divisible by 3 for a first-fit cover");
  Matching m;
  for (int e = 0; e + 2 < inst.ground_size; e += 3)
    m.triples.push_back({e, e + 1, e + 2});
  return m;
}

}  // namespace plslab
