#pragma once

#include <string>
#include <vector>

#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// CNF -> hitting set.  Ground set: the 2|X| literals.  Collection: one
// complementary pair {x, ~x} per variable at W, plus each clause's satisfying
// literals at the clause weight.  Capacity m_B = |X|; a consistent solution
// picks one literal per variable, hits every variable pair (|X| * W) and
// exactly the satisfied clauses.
struct HsReduction {
  McaInstance source;
  HsInstance target;
  Weight W;

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<ElementSubset>(sol, "hitting set");
    return one_literal_per_variable(s.elements, source.num_vars);
  }

  Assignment pull_back(const Solution& sol) const {
    if (!is_consistent(sol).consistent) return initial_assignment(source);
    const auto& s = solution_as<ElementSubset>(sol, "hitting set");
    return assignment_of_literals(s.elements, source.num_vars);
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    ElementSubset s;
    for (int v = 0; v < source.num_vars; ++v)
      s.elements.push_back(lit_elem(v, a[static_cast<std::size_t>(v)] == 0));
    s.elements = make_set(std::move(s.elements));
    return s;
  }

  Cost cost_offset() const { return Cost(W) * source.num_vars; }
};

inline HsReduction reduce_cnf_hs(const McaInstance& src) {
  validate_mca(src);
  require(src.semantics == ConstraintSemantics::cnf,
          "hitting set reduces CNF sources");
  HsReduction red;
  red.source = src;
  red.W = big_w(src);

  int n = src.num_vars;
  WeightedCollection& col = red.target.col;
  col.ground_size = 2 * n;
  col.element_labels = literal_labels(n);
  for (int v = 0; v < n; ++v) {  // complementary pairs at W
    col.sets.push_back(make_set({lit_elem(v, false), lit_elem(v, true)}));
    col.weights.push_back(red.W);
    col.set_labels.push_back("{" + lit_label(v, false) + "," +
                             lit_label(v, true) + "}");
  }
  for (int c = 0; c < src.num_constraints(); ++c) {
    const McaConstraint& cl = src.constraints[static_cast<std::size_t>(c)];
    std::vector<int> sat;
    for (std::size_t t = 0; t < cl.scope.size(); ++t)
      sat.push_back(lit_elem(cl.scope[t], cl.negated[t]));
    col.sets.push_back(make_set(std::move(sat)));
    col.weights.push_back(cl.clause_weight);
    col.set_labels.push_back("C" + std::to_string(c + 1));
  }
  red.target.max_chosen = n;
  validate_hs(red.target);
  return red;
}

}  // namespace plslab
