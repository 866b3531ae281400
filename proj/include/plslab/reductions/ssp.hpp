#pragma once

#include <string>

#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// POSNAE -> set splitting.  Ground set = the variables; one 2-set per clause
// at the clause weight.  A set is split exactly when its clause is
// not-all-equal, so every partition is consistent and the correspondence is
// exact (offset 0).
struct SspReduction {
  McaInstance source;
  SspInstance target;
  Weight W;

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    solution_as<Partition>(sol, "set splitting");
    return ConsistencyVerdict::ok();
  }

  Assignment pull_back(const Solution& sol) const {
    const auto& s = solution_as<Partition>(sol, "set splitting");
    Assignment a(s.side.size());
    for (std::size_t v = 0; v < s.side.size(); ++v) a[v] = s.side[v];
    return a;
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    Partition p;
    p.side.resize(a.size());
    for (std::size_t v = 0; v < a.size(); ++v)
      p.side[v] = static_cast<std::uint8_t>(a[v]);
    return p;
  }

  Cost cost_offset() const { return 0; }
};

inline SspReduction reduce_posnae_ssp(const McaInstance& src) {
  validate_mca(src);
  require(src.semantics == ConstraintSemantics::nae,
          "set splitting reduces POSNAE sources");
  SspReduction red;
  red.source = src;
  red.W = big_w(src);
  WeightedCollection& col = red.target.col;
  col.ground_size = src.num_vars;
  col.element_labels.resize(static_cast<std::size_t>(src.num_vars));
  for (int v = 0; v < src.num_vars; ++v)
    col.element_labels[static_cast<std::size_t>(v)] =
        "x" + std::to_string(v + 1);
  for (int c = 0; c < src.num_constraints(); ++c) {
    const McaConstraint& cl = src.constraints[static_cast<std::size_t>(c)];
    col.sets.push_back(make_set({cl.scope[0], cl.scope[1]}));
    col.weights.push_back(cl.clause_weight);
    col.set_labels.push_back("C" + std::to_string(c + 1));
  }
  validate_ssp(red.target);
  return red;
}

}  // namespace plslab
