#pragma once

#include <array>
#include <string>
#include <vector>

#include "plslab/error.hpp"
#include "plslab/ints.hpp"
#include "plslab/mca.hpp"

namespace plslab {

// The dominating weight: one more than the sum of every weight the source
// can ever pay (all table entries resp. all clause weights).  Construction
// weights scaled by W strictly dominate any payload sum.
inline Weight big_w(const McaInstance& inst) {
  Weight total = 0;
  for (const McaConstraint& c : inst.constraints) {
    if (inst.semantics == ConstraintSemantics::table)
      for (const Weight& w : c.table) total += w;
    else
      total += c.clause_weight;
  }
  return total + 1;
}

struct ConsistencyVerdict {
  bool consistent = false;
  std::string reason;  // empty when consistent

  static ConsistencyVerdict ok() { return {true, ""}; }
  static ConsistencyVerdict fail(std::string why) {
    return {false, std::move(why)};
  }
};

// Ordered occurrence table: for every variable, the constraints it appears
// in (constraint order; scope repetitions would repeat, but validated
// sources never repeat a variable inside one scope).
inline std::vector<std::vector<int>> occurrence_table(const McaInstance& inst) {
  std::vector<std::vector<int>> occ(static_cast<std::size_t>(inst.num_vars));
  for (int c = 0; c < inst.num_constraints(); ++c)
    for (int v : inst.constraints[static_cast<std::size_t>(c)].scope)
      occ[static_cast<std::size_t>(v)].push_back(c);
  return occ;
}

// Literal elements for the CNF/POSNAE-based constructions: the positive
// literal of variable v is element 2v, the negative literal 2v+1.
inline int lit_elem(int var, bool negative) { return 2 * var + (negative ? 1 : 0); }

inline std::string lit_label(int var, bool negative) {
  return (negative ? "~x" : "x") + std::to_string(var + 1);
}

inline std::vector<std::string> literal_labels(int num_vars) {
  std::vector<std::string> labels;
  labels.reserve(2 * static_cast<std::size_t>(num_vars));
  for (int v = 0; v < num_vars; ++v) {
    labels.push_back(lit_label(v, false));
    labels.push_back(lit_label(v, true));
  }
  return labels;
}

// Checks that a literal-element selection commits every variable exactly
// once; several constructions share this consistency notion.
inline ConsistencyVerdict one_literal_per_variable(
    const std::vector<int>& elements, int num_vars) {
  if (static_cast<int>(elements.size()) != num_vars)
    return ConsistencyVerdict::fail(
        "solution has " + std::to_string(elements.size()) +
        " elements, needs " + std::to_string(num_vars));
  std::vector<int> per_var(static_cast<std::size_t>(num_vars), 0);
  for (int e : elements) {
    if (e < 0 || e >= 2 * num_vars)
      return ConsistencyVerdict::fail("element " + std::to_string(e + 1) +
                                      " is not a literal element");
    ++per_var[static_cast<std::size_t>(e / 2)];
  }
  for (int v = 0; v < num_vars; ++v)
    if (per_var[static_cast<std::size_t>(v)] != 1)
      return ConsistencyVerdict::fail(
          "variable " + std::to_string(v + 1) + " has " +
          std::to_string(per_var[static_cast<std::size_t>(v)]) +
          " chosen literals, needs 1");
  return ConsistencyVerdict::ok();
}

// Reads an assignment off a one-literal-per-variable selection: the positive
// element 2v sets variable v to 1, the negative element to 0.
inline Assignment assignment_of_literals(const std::vector<int>& elements,
                                         int num_vars) {
  Assignment a(static_cast<std::size_t>(num_vars), 0);
  for (int e : elements)
    a[static_cast<std::size_t>(e / 2)] = e % 2 == 0 ? 1 : 0;
  return a;
}

}  // namespace plslab
