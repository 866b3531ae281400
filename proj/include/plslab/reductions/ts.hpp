#pragma once

#include <string>
#include <vector>

#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// Pair-weight scheme for the test-set construction.  `corrected` gives every
// distinct-variable pair a dominating W(+payload)+1 weight so that any
// consistent solution beats any inconsistent one; `paper_literal` transcribes
// the published table verbatim (non-clause pairs and same-index clause pairs
// stay at weight 1), which breaks the dominance argument and is kept as an
// observation mode.
enum class TsScheme { corrected, paper_literal };

// POSNAE -> test set.  Ground set: elements x_0, x_1 per variable; the
// collection is all singletons; capacity m_B = |X|.  Pair weights carry the
// construction: complementary pairs 1, clause pairs with differing indices
// W + clause weight + 1, and (under `corrected`) every other
// distinct-variable pair W + 1.
struct TsReduction {
  McaInstance source;
  TsInstance target;
  Weight W;
  TsScheme scheme = TsScheme::corrected;

  int elem(int var, int index) const { return 2 * var + index; }

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<CollectionSubset>(sol, "test set");
    int n = source.num_vars;
    if (static_cast<int>(s.indices.size()) != n)
      return ConsistencyVerdict::fail(
          "solution has " + std::to_string(s.indices.size()) +
          " singletons, needs " + std::to_string(n));
    std::vector<int> per_var(static_cast<std::size_t>(n), 0);
    for (int idx : s.indices) ++per_var[static_cast<std::size_t>(idx / 2)];
    for (int v = 0; v < n; ++v)
      if (per_var[static_cast<std::size_t>(v)] != 1)
        return ConsistencyVerdict::fail(
            "variable " + std::to_string(v + 1) + " has " +
            std::to_string(per_var[static_cast<std::size_t>(v)]) +
            " chosen elements, needs 1");
    return ConsistencyVerdict::ok();
  }

  Assignment pull_back(const Solution& sol) const {
    if (!is_consistent(sol).consistent) return initial_assignment(source);
    const auto& s = solution_as<CollectionSubset>(sol, "test set");
    Assignment a(static_cast<std::size_t>(source.num_vars), 0);
    for (int idx : s.indices) a[static_cast<std::size_t>(idx / 2)] = idx % 2;
    return a;
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    CollectionSubset s;
    for (int v = 0; v < source.num_vars; ++v)
      s.indices.push_back(elem(v, a[static_cast<std::size_t>(v)]));
    canonicalize(s);
    return s;
  }

  // Consistent solutions pick one element per variable, so all C(|X|,2)
  // distinct-variable pairs separate; under `corrected` each contributes
  // W + 1 plus the clause payload when the indices differ.
  Cost cost_offset() const {
    require(scheme == TsScheme::corrected,
            "the literal scheme has no affine correspondence");
    long long n = source.num_vars;
    return (Cost(W) + 1) * (n * (n - 1) / 2);
  }
};

inline TsReduction reduce_posnae_ts(const McaInstance& src,
                                    TsScheme scheme = TsScheme::corrected,
                                    TsSeparation separation =
                                        TsSeparation::two_sided) {
  validate_mca(src);
  require(src.semantics == ConstraintSemantics::nae,
          "test set reduces POSNAE sources");
  TsReduction red;
  red.source = src;
  red.W = big_w(src);
  red.scheme = scheme;

  int n = src.num_vars;
  WeightedCollection& col = red.target.col;
  col.ground_size = 2 * n;
  col.element_labels.resize(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v) {
    col.element_labels[static_cast<std::size_t>(2 * v)] =
        "x" + std::to_string(v + 1) + "_0";
    col.element_labels[static_cast<std::size_t>(2 * v + 1)] =
        "x" + std::to_string(v + 1) + "_1";
  }
  for (int e = 0; e < 2 * n; ++e) {  // all singletons, unweighted
    col.sets.push_back({e});
    col.weights.push_back(0);
    col.set_labels.push_back("{" + col.element_labels[static_cast<std::size_t>(e)] +
                             "}");
  }
  red.target.max_chosen = n;
  red.target.separation = separation;

  // clause payload per unordered variable pair (duplicate clauses aggregate)
  std::vector<std::vector<Weight>> payload(
      static_cast<std::size_t>(n),
      std::vector<Weight>(static_cast<std::size_t>(n), 0));
  std::vector<std::vector<bool>> has_clause(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const McaConstraint& c : src.constraints) {
    int x = c.scope[0], y = c.scope[1];
    payload[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +=
        c.clause_weight;
    payload[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] +=
        c.clause_weight;
    has_clause[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
    has_clause[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = true;
  }

  int ground = 2 * n;
  red.target.pair_w.assign(
      static_cast<std::size_t>(ground) * (ground - 1) / 2, 0);
  for (int e = 0; e < ground; ++e) {
    for (int f = e + 1; f < ground; ++f) {
      int vx = e / 2, ix = e % 2;
      int vy = f / 2, iy = f % 2;
      Weight w;
      if (vx == vy) {
        w = 1;  // complementary pair
      } else if (has_clause[static_cast<std::size_t>(vx)]
                           [static_cast<std::size_t>(vy)] &&
                 ix != iy) {
        w = Weight(red.W) +
            payload[static_cast<std::size_t>(vx)][static_cast<std::size_t>(vy)] +
            1;
      } else if (scheme == TsScheme::corrected) {
        w = Weight(red.W) + 1;  // any other distinct-variable pair
      } else {
        w = 1;  // literal table: everything else stays at 1
      }
      red.target.pair_w[pair_index(e, f, ground)] = w;
    }
  }
  validate_ts(red.target);
  return red;
}

}  // namespace plslab
