#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// CNFSAT -> comparative containment.  Ground set = literal elements.  The
// M side rewards committing to a literal (every "lit" set misses exactly the
// complementary element) and rewards each clause whose scope assignment is
// matched by a satisfying choice of literals; the N side punishes leaving a
// variable undecided.  Consistent solutions pick one literal per variable.
struct CcReduction {
  McaInstance source;
  CcInstance target;
  Weight W;

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<ElementSubset>(sol, "comparative containment");
    return one_literal_per_variable(s.elements, source.num_vars);
  }

  Assignment pull_back(const Solution& sol) const {
    if (!is_consistent(sol).consistent) return initial_assignment(source);
    const auto& s = solution_as<ElementSubset>(sol, "comparative containment");
    return assignment_of_literals(s.elements, source.num_vars);
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    ElementSubset s;
    for (int v = 0; v < source.num_vars; ++v)
      s.elements.push_back(lit_elem(v, a[static_cast<std::size_t>(v)] == 0));
    return s;
  }

  Cost cost_offset() const {
    // n literal sets always contain a consistent choice, and the shift.
    return Cost(W) * source.num_vars + Cost(target.shift);
  }
};

inline CcReduction reduce_cnf_cc(const McaInstance& src) {
  validate_mca(src);
  require(src.semantics == ConstraintSemantics::cnf,
          "comparative containment reduces CNFSAT sources");
  int n = src.num_vars;

  CcReduction red;
  red.source = src;
  red.W = big_w(src);

  ElemSet everything;
  for (int e = 0; e < 2 * n; ++e) everything.push_back(e);

  WeightedCollection& m_side = red.target.m_side;
  m_side.ground_size = 2 * n;
  m_side.element_labels = literal_labels(n);
  // One set per literal: everything except the complementary element, so a
  // chosen literal set contains S exactly when S avoids the complement.
  for (int v = 0; v < n; ++v) {
    for (int neg = 0; neg < 2; ++neg) {
      m_side.sets.push_back(
          set_difference(everything, {lit_elem(v, neg == 0)}));
      m_side.weights.push_back(red.W);
      m_side.set_labels.push_back("lit[" + lit_label(v, neg == 1) + "]");
    }
  }
  // One set per clause per satisfying scope assignment: free elements for
  // every out-of-scope variable plus the true literal of every scope
  // variable.  It contains a consistent S exactly when S restricted to the
  // scope equals this assignment.
  for (int c = 0; c < src.num_constraints(); ++c) {
    const McaConstraint& cl = src.constraints[static_cast<std::size_t>(c)];
    int arity = static_cast<int>(cl.scope.size());
    std::vector<bool> in_scope(static_cast<std::size_t>(n), false);
    for (int var : cl.scope) in_scope[static_cast<std::size_t>(var)] = true;
    ElemSet free_elems;
    for (int v = 0; v < n; ++v)
      if (!in_scope[static_cast<std::size_t>(v)]) {
        free_elems.push_back(lit_elem(v, false));
        free_elems.push_back(lit_elem(v, true));
      }
    for (int mask = 0; mask < (1 << arity); ++mask) {
      bool satisfied = false;
      for (int t = 0; t < arity; ++t) {
        int val = (mask >> t) & 1;
        if (val != (cl.negated[static_cast<std::size_t>(t)] ? 1 : 0))
          satisfied = true;
      }
      if (!satisfied) continue;
      ElemSet elems = free_elems;
      for (int t = 0; t < arity; ++t)
        elems.push_back(lit_elem(cl.scope[static_cast<std::size_t>(t)],
                                 ((mask >> t) & 1) == 0));
      m_side.sets.push_back(make_set(std::move(elems)));
      m_side.weights.push_back(cl.clause_weight);
      m_side.set_labels.push_back("C" + std::to_string(c + 1) + "#" +
                                  std::to_string(mask));
    }
  }

  WeightedCollection& n_side = red.target.n_side;
  n_side.ground_size = 2 * n;
  n_side.element_labels = literal_labels(n);
  // One set per variable: everything except that variable's two literal
  // elements; it contains S exactly when S leaves the variable undecided.
  //
  // The penalty must dominate everything deciding a variable can cost.
  // Adding a literal forfeits one lit set (W) plus every clause set whose
  // scope assignment disagrees on that variable -- and a clause of arity h
  // contributes one set per satisfying scope assignment, so up to 2^(h-1)
  // of its sets (each at the clause weight) drop out at once.  A weight of
  // 2W covers the clause weights only once each and lets searches stall
  // with variables undecided; (2^h + 1) * W covers the worst case.
  int max_arity = 0;
  for (const McaConstraint& cl : src.constraints)
    max_arity = std::max(max_arity, static_cast<int>(cl.scope.size()));
  Weight decide_weight = red.W;
  for (int t = 0; t < max_arity; ++t) decide_weight *= 2;
  decide_weight += red.W;
  for (int v = 0; v < n; ++v) {
    n_side.sets.push_back(set_difference(
        everything, make_set({lit_elem(v, false), lit_elem(v, true)})));
    n_side.weights.push_back(decide_weight);
    n_side.set_labels.push_back("dec[x" + std::to_string(v + 1) + "]");
  }

  // The N side subtracts at most the sum of its weights, so this shift
  // keeps costs >= 0.
  red.target.shift = decide_weight * n;
  validate_cc(red.target);
  return red;
}

}  // namespace plslab
