#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

namespace detail {

// Shared structure of the tri-colored table constructions for set packing
// and set cover.  Per constraint i and scope assignment (a, b, c) there is a
// family set holding the constraint element c_i plus, per scope variable, a
// value gadget: the direct element at the variable's *first* occurrence, the
// complement of its value elements at the *second*.  Disjointness of two
// incident family sets is then exactly value agreement.
struct TupleFamilies {
  int m = 0;         // constraints
  int n = 0;         // variables
  int r = 0;         // domain size
  int tuple_count = 0;  // r^3
  std::vector<std::array<int, 2>> var_constraints;  // first/second occurrence

  void init(const McaInstance& src) {
    validate_tricolored(src);
    m = src.num_constraints();
    n = src.num_vars;
    r = src.domain_size;
    tuple_count = r * r * r;
    auto occ = occurrence_table(src);
    var_constraints.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      require(occ[static_cast<std::size_t>(v)].size() == 2,
              "tri-colored variable must occur exactly twice");
      var_constraints[static_cast<std::size_t>(v)] = {
          occ[static_cast<std::size_t>(v)][0],
          occ[static_cast<std::size_t>(v)][1]};
    }
  }

  bool first_occurrence(int var, int constraint) const {
    return var_constraints[static_cast<std::size_t>(var)][0] == constraint;
  }

  // Element layout: constraint elements first, then r value elements per
  // variable.  `extra` shifts the variable block (the packing construction
  // prepends its e_i elements).
  int value_elem(int extra, int var, int val) const {
    return extra + m + var * r + val;
  }

  std::vector<int> decode_tuple(int tuple) const {
    std::vector<int> vals(3);
    for (int pos = 0; pos < 3; ++pos) {
      vals[static_cast<std::size_t>(pos)] = tuple % r;
      tuple /= r;
    }
    return vals;
  }

  ElemSet family_set(const McaInstance& src, int extra, int constraint,
                     int tuple) const {
    const auto& scope =
        src.constraints[static_cast<std::size_t>(constraint)].scope;
    std::vector<int> vals = decode_tuple(tuple);
    ElemSet out;
    out.push_back(extra + constraint);  // c_i
    for (int pos = 0; pos < 3; ++pos) {
      int var = scope[static_cast<std::size_t>(pos)];
      int val = vals[static_cast<std::size_t>(pos)];
      if (first_occurrence(var, constraint)) {
        out.push_back(value_elem(extra, var, val));
      } else {
        for (int t = 0; t < r; ++t)
          if (t != val) out.push_back(value_elem(extra, var, t));
      }
    }
    return make_set(std::move(out));
  }

  std::string tuple_label(const std::string& prefix, int constraint,
                          int tuple) const {
    std::vector<int> vals = decode_tuple(tuple);
    return prefix + std::to_string(constraint + 1) + "(" +
           std::to_string(vals[0] + 1) + "," + std::to_string(vals[1] + 1) +
           "," + std::to_string(vals[2] + 1) + ")";
  }

  // Consistency over family sets: one member per family, pairwise disjoint.
  // `family_of(index)` maps a chosen set index to its constraint, or -1.
  ConsistencyVerdict check_families(
      const WeightedCollection& col, const std::vector<int>& chosen,
      const std::function<int(int)>& family_of) const {
    if (static_cast<int>(chosen.size()) != m)
      return ConsistencyVerdict::fail(
          "solution has " + std::to_string(chosen.size()) + " sets, needs " +
          std::to_string(m));
    std::vector<int> per_family(static_cast<std::size_t>(m), 0);
    for (int idx : chosen) {
      int fam = family_of(idx);
      if (fam < 0)
        return ConsistencyVerdict::fail(
            "solution contains non-family set " + std::to_string(idx + 1));
      ++per_family[static_cast<std::size_t>(fam)];
    }
    for (int i = 0; i < m; ++i)
      if (per_family[static_cast<std::size_t>(i)] != 1)
        return ConsistencyVerdict::fail(
            "family " + std::to_string(i + 1) + " has " +
            std::to_string(per_family[static_cast<std::size_t>(i)]) +
            " members, needs 1");
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (sets_intersect(col.sets[static_cast<std::size_t>(chosen[i])],
                           col.sets[static_cast<std::size_t>(chosen[j])]))
          return ConsistencyVerdict::fail(
              "sets " + std::to_string(chosen[i] + 1) + " and " +
              std::to_string(chosen[j] + 1) + " intersect");
    return ConsistencyVerdict::ok();
  }

  // Decode an assignment from first-occurrence positions of the chosen
  // family tuples.
  Assignment decode(const McaInstance& src,
                    const std::vector<std::pair<int, int>>& family_tuples) const {
    Assignment a(static_cast<std::size_t>(n), 0);
    for (const auto& [constraint, tuple] : family_tuples) {
      const auto& scope =
          src.constraints[static_cast<std::size_t>(constraint)].scope;
      std::vector<int> vals = decode_tuple(tuple);
      for (int pos = 0; pos < 3; ++pos) {
        int var = scope[static_cast<std::size_t>(pos)];
        if (first_occurrence(var, constraint))
          a[static_cast<std::size_t>(var)] = vals[static_cast<std::size_t>(pos)];
      }
    }
    return a;
  }

  int tuple_of_assignment(const McaInstance& src, int constraint,
                          const Assignment& a) const {
    return static_cast<int>(table_index(
        src.constraints[static_cast<std::size_t>(constraint)], r, a));
  }
};

}  // namespace detail

// Tri-colored MCA -> set packing.  Ground set: blocking elements e_i, the
// constraint elements c_i, and r value elements per variable.  Collection:
// one weight-1 singleton {e_i} per constraint followed by the family sets at
// their table weights.  Capacity m_C = m.
struct SpReduction {
  McaInstance source;
  SpInstance target;
  Weight W;
  detail::TupleFamilies fam;

  int family_set_index(int constraint, int tuple) const {
    return fam.m + constraint * fam.tuple_count + tuple;
  }

  int family_of(int set_index) const {
    if (set_index < fam.m) return -1;
    return (set_index - fam.m) / fam.tuple_count;
  }

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<CollectionSubset>(sol, "set packing");
    return fam.check_families(target.col, s.indices,
                              [this](int idx) { return family_of(idx); });
  }

  Assignment pull_back(const Solution& sol) const {
    if (!is_consistent(sol).consistent) return initial_assignment(source);
    const auto& s = solution_as<CollectionSubset>(sol, "set packing");
    std::vector<std::pair<int, int>> fts;
    for (int idx : s.indices)
      fts.emplace_back(family_of(idx), (idx - fam.m) % fam.tuple_count);
    return fam.decode(source, fts);
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    CollectionSubset s;
    for (int i = 0; i < fam.m; ++i)
      s.indices.push_back(
          family_set_index(i, fam.tuple_of_assignment(source, i, a)));
    canonicalize(s);
    return s;
  }

  Cost cost_offset() const { return 0; }
};

inline SpReduction reduce_mca_sp(const McaInstance& src) {
  require(src.sense == Sense::maximize,
          "set packing reduces the maximization problem");
  SpReduction red;
  red.source = src;
  red.W = big_w(src);
  red.fam.init(src);
  const auto& fam = red.fam;

  WeightedCollection& col = red.target.col;
  col.ground_size = 2 * fam.m + fam.n * fam.r;
  col.element_labels.resize(static_cast<std::size_t>(col.ground_size));
  for (int i = 0; i < fam.m; ++i) {
    col.element_labels[static_cast<std::size_t>(i)] =
        "e" + std::to_string(i + 1);
    col.element_labels[static_cast<std::size_t>(fam.m + i)] =
        "c" + std::to_string(i + 1);
  }
  for (int v = 0; v < fam.n; ++v)
    for (int t = 0; t < fam.r; ++t)
      col.element_labels[static_cast<std::size_t>(
          fam.value_elem(fam.m, v, t))] =
          "x" + std::to_string(v + 1) + "_" + std::to_string(t + 1);

  for (int i = 0; i < fam.m; ++i) {  // blocking singletons {e_i} at weight 1
    col.sets.push_back({i});
    col.weights.push_back(1);
    col.set_labels.push_back("E" + std::to_string(i + 1));
  }
  for (int i = 0; i < fam.m; ++i) {
    const McaConstraint& c = src.constraints[static_cast<std::size_t>(i)];
    for (int tuple = 0; tuple < fam.tuple_count; ++tuple) {
      col.sets.push_back(fam.family_set(src, fam.m, i, tuple));
      col.weights.push_back(c.table[static_cast<std::size_t>(tuple)]);
      col.set_labels.push_back(fam.tuple_label("C", i, tuple));
    }
  }
  red.target.max_chosen = fam.m;
  validate_sp(red.target);
  return red;
}

// Tri-colored MINCA -> set cover.  Same family sets without the blocking
// elements; every weight is shifted by W; feasibility is covering, and the
// c_i elements force one set per family into any cover.
struct ScReduction {
  McaInstance source;
  ScInstance target;
  Weight W;
  detail::TupleFamilies fam;

  int family_set_index(int constraint, int tuple) const {
    return constraint * fam.tuple_count + tuple;
  }

  int family_of(int set_index) const { return set_index / fam.tuple_count; }

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<CollectionSubset>(sol, "set cover");
    return fam.check_families(target.col, s.indices,
                              [this](int idx) { return family_of(idx); });
  }

  Assignment pull_back(const Solution& sol) const {
    if (!is_consistent(sol).consistent) return initial_assignment(source);
    const auto& s = solution_as<CollectionSubset>(sol, "set cover");
    std::vector<std::pair<int, int>> fts;
    for (int idx : s.indices)
      fts.emplace_back(family_of(idx), idx % fam.tuple_count);
    return fam.decode(source, fts);
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    CollectionSubset s;
    for (int i = 0; i < fam.m; ++i)
      s.indices.push_back(
          family_set_index(i, fam.tuple_of_assignment(source, i, a)));
    canonicalize(s);
    return s;
  }

  Cost cost_offset() const { return Cost(W) * fam.m; }
};

inline ScReduction reduce_minca_sc(const McaInstance& src) {
  require(src.sense == Sense::minimize,
          "set cover reduces the minimization problem");
  ScReduction red;
  red.source = src;
  red.W = big_w(src);
  red.fam.init(src);
  const auto& fam = red.fam;

  WeightedCollection& col = red.target.col;
  col.ground_size = fam.m + fam.n * fam.r;
  col.element_labels.resize(static_cast<std::size_t>(col.ground_size));
  for (int i = 0; i < fam.m; ++i)
    col.element_labels[static_cast<std::size_t>(i)] =
        "c" + std::to_string(i + 1);
  for (int v = 0; v < fam.n; ++v)
    for (int t = 0; t < fam.r; ++t)
      col.element_labels[static_cast<std::size_t>(fam.value_elem(0, v, t))] =
          "x" + std::to_string(v + 1) + "_" + std::to_string(t + 1);

  for (int i = 0; i < fam.m; ++i) {
    const McaConstraint& c = src.constraints[static_cast<std::size_t>(i)];
    for (int tuple = 0; tuple < fam.tuple_count; ++tuple) {
      col.sets.push_back(fam.family_set(src, 0, i, tuple));
      col.weights.push_back(c.table[static_cast<std::size_t>(tuple)] + red.W);
      col.set_labels.push_back(fam.tuple_label("C", i, tuple));
    }
  }
  validate_sc(red.target);
  // a full-collection cover exists (encode of any assignment covers)
  return red;
}

}  // namespace plslab
