#pragma once

#include <string>
#include <vector>

#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// CNF -> set basis.  Ground set: the 2|X| literals.  Collection: every
// literal singleton at 2W, every non-complementary literal pair at W, and one
// set of satisfying literals per (clause, satisfying scope assignment) at the
// clause weight.  Basis size m_C = |X|.  A consistent basis is one literal
// singleton per variable; it expresses its own singletons, the C(|X|,2)
// chosen pairs, and exactly the satisfied clauses' assignment sets.
struct SbReduction {
  McaInstance source;
  SbInstance target;
  Weight W;

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<BasisFamily>(sol, "set basis");
    int n = source.num_vars;
    if (static_cast<int>(s.members.size()) != n)
      return ConsistencyVerdict::fail(
          "basis has " + std::to_string(s.members.size()) +
          " members, needs " + std::to_string(n));
    std::vector<int> per_var(static_cast<std::size_t>(n), 0);
    for (const ElemSet& m : s.members) {
      if (m.size() != 1)
        return ConsistencyVerdict::fail("basis member is not a singleton");
      ++per_var[static_cast<std::size_t>(m[0] / 2)];
    }
    for (int v = 0; v < n; ++v)
      if (per_var[static_cast<std::size_t>(v)] != 1)
        return ConsistencyVerdict::fail(
            "variable " + std::to_string(v + 1) + " has " +
            std::to_string(per_var[static_cast<std::size_t>(v)]) +
            " literal singletons, needs 1");
    return ConsistencyVerdict::ok();
  }

  Assignment pull_back(const Solution& sol) const {
    if (!is_consistent(sol).consistent) return initial_assignment(source);
    const auto& s = solution_as<BasisFamily>(sol, "set basis");
    Assignment a(static_cast<std::size_t>(source.num_vars), 0);
    for (const ElemSet& m : s.members)
      a[static_cast<std::size_t>(m[0] / 2)] = m[0] % 2 == 0 ? 1 : 0;
    return a;
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    BasisFamily fam;
    for (int v = 0; v < source.num_vars; ++v)
      fam.members.push_back(
          {lit_elem(v, a[static_cast<std::size_t>(v)] == 0)});
    canonicalize(fam);
    return fam;
  }

  Cost cost_offset() const {
    long long n = source.num_vars;
    return Cost(W) * 2 * n + Cost(W) * (n * (n - 1) / 2);
  }
};

inline SbReduction reduce_cnf_sb(const McaInstance& src) {
  validate_mca(src);
  require(src.semantics == ConstraintSemantics::cnf,
          "set basis reduces CNF sources");
  SbReduction red;
  red.source = src;
  red.W = big_w(src);

  int n = src.num_vars;
  WeightedCollection& col = red.target.col;
  col.ground_size = 2 * n;
  col.element_labels = literal_labels(n);

  for (int e = 0; e < 2 * n; ++e) {  // literal singletons at 2W
    col.sets.push_back({e});
    col.weights.push_back(Weight(red.W) * 2);
    col.set_labels.push_back(
        "{" + col.element_labels[static_cast<std::size_t>(e)] + "}");
  }
  for (int v = 0; v < n; ++v) {  // non-complementary pairs at W
    for (int u = v + 1; u < n; ++u) {
      for (int pv = 0; pv < 2; ++pv) {
        for (int pu = 0; pu < 2; ++pu) {
          col.sets.push_back(
              make_set({lit_elem(v, pv == 1), lit_elem(u, pu == 1)}));
          col.weights.push_back(red.W);
          col.set_labels.push_back(
              "{" + lit_label(v, pv == 1) + "," + lit_label(u, pu == 1) + "}");
        }
      }
    }
  }
  // per clause, one literal set per satisfying scope assignment
  for (int c = 0; c < src.num_constraints(); ++c) {
    const McaConstraint& cl = src.constraints[static_cast<std::size_t>(c)];
    int len = static_cast<int>(cl.scope.size());
    for (int mask = 0; mask < (1 << len); ++mask) {
      bool satisfied = false;
      for (int t = 0; t < len && !satisfied; ++t) {
        int val = (mask >> t) & 1;
        if (val == (cl.negated[static_cast<std::size_t>(t)] ? 0 : 1))
          satisfied = true;
      }
      if (!satisfied) continue;
      std::vector<int> elems;
      for (int t = 0; t < len; ++t)
        elems.push_back(
            lit_elem(cl.scope[static_cast<std::size_t>(t)], ((mask >> t) & 1) == 0));
      col.sets.push_back(make_set(std::move(elems)));
      col.weights.push_back(cl.clause_weight);
      col.set_labels.push_back("C" + std::to_string(c + 1) + "#" +
                               std::to_string(mask));
    }
  }
  red.target.basis_size = n;
  validate_sb(red.target);
  return red;
}

}  // namespace plslab
