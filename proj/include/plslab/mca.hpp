#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plslab/error.hpp"
#include "plslab/ints.hpp"

namespace plslab {

enum class Sense { maximize, minimize };

// How a constraint's payoff is evaluated.
//   table : explicit weight table over the scope's value combinations
//           ((p,q,r)-MCA / MINCA)
//   nae   : binary clause over {0,1}, pays its weight iff the endpoints
//           differ (POSNAE, positive not-all-equal)
//   cnf   : disjunction of literals over {0,1}, pays iff some literal holds
enum class ConstraintSemantics { table, nae, cnf };

enum class VarColor { none, blue, red, white };

// One source-side constraint.  `table` is row-major with the first scope
// variable as the least significant digit: index = sum_t a(scope[t]) * r^t.
struct McaConstraint {
  std::vector<int> scope;        // variable indices, 0-based
  std::vector<Weight> table;     // table semantics: size r^|scope|
  Weight clause_weight = 0;      // nae/cnf semantics
  std::vector<bool> negated;     // cnf: per-literal polarity (true = negated)
};

// A weighted constraint-assignment instance over r-valued variables.  Values
// are 0-based internally; the text format and the construction labels speak
// 1-based.
struct McaInstance {
  int num_vars = 0;
  int domain_size = 2;  // r >= 2
  Sense sense = Sense::maximize;
  ConstraintSemantics semantics = ConstraintSemantics::table;
  std::vector<McaConstraint> constraints;
  std::vector<VarColor> colors;  // empty or size num_vars

  int num_constraints() const { return static_cast<int>(constraints.size()); }
};

// Total assignment, one value in [0, r) per variable.
using Assignment = std::vector<int>;

inline std::size_t table_index(const McaConstraint& c, int r,
                               const Assignment& a) {
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (int v : c.scope) {
    idx += static_cast<std::size_t>(a[v]) * stride;
    stride *= static_cast<std::size_t>(r);
  }
  return idx;
}

inline void validate_mca(const McaInstance& inst) {
  require(inst.num_vars >= 1, "instance needs at least one variable");
  require(inst.domain_size >= 2, "domain size must be at least 2");
  require(!inst.constraints.empty(), "instance needs at least one constraint");
  if (!inst.colors.empty())
    require(static_cast<int>(inst.colors.size()) == inst.num_vars,
            "color table size mismatch");
  std::size_t r = static_cast<std::size_t>(inst.domain_size);
  for (const McaConstraint& c : inst.constraints) {
    require(!c.scope.empty(), "empty constraint scope");
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      require(c.scope[i] >= 0 && c.scope[i] < inst.num_vars,
              "scope variable out of range");
      for (std::size_t j = 0; j < i; ++j)
        require(c.scope[j] != c.scope[i],
                "scope variables must be distinct");
    }
    if (inst.semantics == ConstraintSemantics::table) {
      std::size_t want = 1;
      for (std::size_t i = 0; i < c.scope.size(); ++i) want *= r;
      require(c.table.size() == want, "constraint table size mismatch");
      for (const Weight& w : c.table) require(w >= 0, "negative table entry");
    } else {
      require(c.clause_weight >= 0, "negative clause weight");
      require(inst.domain_size == 2, "clause semantics need a binary domain");
      if (inst.semantics == ConstraintSemantics::nae) {
        require(c.scope.size() == 2, "NAE clause must have two variables");
        require(c.scope[0] != c.scope[1], "NAE clause variables must differ");
      } else {
        require(c.negated.size() == c.scope.size(),
                "cnf polarity vector size mismatch");
      }
    }
  }
}

inline void validate_assignment(const McaInstance& inst, const Assignment& a) {
  require(static_cast<int>(a.size()) == inst.num_vars,
          "assignment length mismatch");
  for (int v : a)
    require(v >= 0 && v < inst.domain_size, "assignment value out of range");
}

inline Cost constraint_payoff(const McaInstance& inst, const McaConstraint& c,
                              const Assignment& a) {
  switch (inst.semantics) {
    case ConstraintSemantics::table:
      return c.table[table_index(c, inst.domain_size, a)];
    case ConstraintSemantics::nae:
      return a[c.scope[0]] != a[c.scope[1]] ? Cost(c.clause_weight) : Cost(0);
    case ConstraintSemantics::cnf:
      for (std::size_t i = 0; i < c.scope.size(); ++i) {
        int want = c.negated[i] ? 0 : 1;
        if (a[c.scope[i]] == want) return Cost(c.clause_weight);
      }
      return Cost(0);
  }
  return Cost(0);
}

inline Cost source_cost(const McaInstance& inst, const Assignment& a) {
  validate_assignment(inst, a);
  Cost total = 0;
  for (const McaConstraint& c : inst.constraints)
    total += constraint_payoff(inst, c, a);
  return total;
}

// Canonical start: every variable takes its first value.
inline Assignment initial_assignment(const McaInstance& inst) {
  return Assignment(static_cast<std::size_t>(inst.num_vars), 0);
}

// 1-flip neighborhood: all assignments differing in exactly one variable.
// Exactly num_vars * (r - 1) results, emitted variable-major then value-major.
inline std::vector<Assignment> flip_neighbors(const McaInstance& inst,
                                              const Assignment& a) {
  validate_assignment(inst, a);
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(inst.num_vars) *
              static_cast<std::size_t>(inst.domain_size - 1));
  for (int v = 0; v < inst.num_vars; ++v) {
    for (int val = 0; val < inst.domain_size; ++val) {
      if (val == a[v]) continue;
      Assignment b = a;
      b[v] = val;
      out.push_back(std::move(b));
    }
  }
  return out;
}

inline bool improves(Sense sense, const Cost& candidate, const Cost& incumbent) {
  return sense == Sense::maximize ? candidate > incumbent
                                  : candidate < incumbent;
}

// True iff no single flip strictly improves under the instance's sense.
inline bool is_local_opt_source(const McaInstance& inst, const Assignment& a) {
  Cost base = source_cost(inst, a);
  Assignment b = a;
  for (int v = 0; v < inst.num_vars; ++v) {
    int keep = b[v];
    for (int val = 0; val < inst.domain_size; ++val) {
      if (val == keep) continue;
      b[v] = val;
      if (improves(inst.sense, source_cost(inst, b), base)) return false;
    }
    b[v] = keep;
  }
  return true;
}

// Number of constraints each variable appears in (scope repetitions count).
inline std::vector<int> occurrence_counts(const McaInstance& inst) {
  std::vector<int> occ(static_cast<std::size_t>(inst.num_vars), 0);
  for (const McaConstraint& c : inst.constraints)
    for (int v : c.scope) ++occ[static_cast<std::size_t>(v)];
  return occ;
}

// Tri-colored profile required by the W3DM/SP/SC constructions: every
// constraint has three rainbow-colored variables, every variable appears in
// exactly two constraints, and each color class has |X|/3 variables.
inline void validate_tricolored(const McaInstance& inst) {
  validate_mca(inst);
  require(inst.semantics == ConstraintSemantics::table,
          "tri-colored instances use table semantics");
  require(!inst.colors.empty(), "tri-colored instance needs variable colors");
  require(inst.num_vars % 3 == 0,
          "tri-colored instance needs |X| divisible by 3");
  int per_class = inst.num_vars / 3;
  int blue = 0, red = 0, white = 0;
  for (VarColor c : inst.colors) {
    if (c == VarColor::blue)
      ++blue;
    else if (c == VarColor::red)
      ++red;
    else if (c == VarColor::white)
      ++white;
    else
      throw Error("tri-colored instance has an uncolored variable");
  }
  require(blue == per_class && red == per_class && white == per_class,
          "color classes must have equal size");
  for (const McaConstraint& c : inst.constraints) {
    require(c.scope.size() == 3, "tri-colored constraints have three variables");
    bool has_blue = false, has_red = false, has_white = false;
    for (int v : c.scope) {
      VarColor col = inst.colors[static_cast<std::size_t>(v)];
      if (col == VarColor::blue) has_blue = true;
      if (col == VarColor::red) has_red = true;
      if (col == VarColor::white) has_white = true;
    }
    require(has_blue && has_red && has_white,
            "constraint scope must be rainbow colored");
  }
  for (int occ : occurrence_counts(inst))
    require(occ == 2, "every variable must appear in exactly two constraints");
}

}  // namespace plslab
