#pragma once

#include <string>
#include <vector>

#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// POSNAE (with full pair closure) -> intersection pattern.  One position per
// variable; donors C[x,0], C[x,1] hold, per clause on x, the clause's own
// indexed element plus the *complemented* partner element, padded up to
// m + position.  Diagonal targets a_vv = m + position reward picking one of
// x's own donors with W; off-diagonal targets 2 reward NAE-satisfied pairs
// with the clause weight (0 on padding pairs).
struct IpReduction {
  McaInstance source;
  IpInstance target;
  Weight W;

  int donor_index(int var, int value) const { return 2 * var + value; }

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<SetVector>(sol, "intersection pattern");
    for (int v = 0; v < target.dim(); ++v) {
      int d = s.donor[static_cast<std::size_t>(v)];
      if (d / 2 != v)
        return ConsistencyVerdict::fail(
            "position " + std::to_string(v + 1) + " holds donor D" +
            std::to_string(d + 1) + ", needs one of its own variable's");
    }
    return ConsistencyVerdict::ok();
  }

  Assignment pull_back(const Solution& sol) const {
    if (!is_consistent(sol).consistent) return initial_assignment(source);
    const auto& s = solution_as<SetVector>(sol, "intersection pattern");
    Assignment a(static_cast<std::size_t>(source.num_vars), 0);
    for (int v = 0; v < source.num_vars; ++v)
      a[static_cast<std::size_t>(v)] = s.donor[static_cast<std::size_t>(v)] % 2;
    return a;
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    SetVector s;
    s.donor.resize(static_cast<std::size_t>(source.num_vars));
    for (int v = 0; v < source.num_vars; ++v)
      s.donor[static_cast<std::size_t>(v)] =
          donor_index(v, a[static_cast<std::size_t>(v)]);
    return s;
  }

  Cost cost_offset() const { return Cost(W) * source.num_vars; }
};

inline IpReduction reduce_posnae_ip(const McaInstance& src) {
  validate_mca(src);
  require(src.semantics == ConstraintSemantics::nae,
          "intersection pattern reduces POSNAE sources");
  int n = src.num_vars;
  int num_pairs = n * (n - 1) / 2;
  require(src.num_constraints() == num_pairs,
          "intersection pattern needs exactly one clause per variable pair "
          "(run the generator with pair closure)");
  std::vector<std::vector<int>> clause_on(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int c = 0; c < src.num_constraints(); ++c) {
    const McaConstraint& cl = src.constraints[static_cast<std::size_t>(c)];
    int x = cl.scope[0], y = cl.scope[1];
    require(clause_on[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                -1,
            "duplicate clause on a variable pair");
    clause_on[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = c;
    clause_on[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = c;
  }

  IpReduction red;
  red.source = src;
  red.W = big_w(src);
  int m = 2 * src.num_constraints();  // = n(n-1)

  // Ground layout: per clause c, four elements (x_0, x_1, y_0, y_1 tagged by
  // the clause; x is the smaller variable), then padding blocks per donor.
  WeightedCollection& donors = red.target.donors;
  auto clause_elem = [&](int c, bool second_var, int index) {
    return 4 * c + 2 * (second_var ? 1 : 0) + index;
  };
  int next_elem = 4 * src.num_constraints();
  std::vector<std::string> labels(static_cast<std::size_t>(next_elem));
  for (int c = 0; c < src.num_constraints(); ++c) {
    const McaConstraint& cl = src.constraints[static_cast<std::size_t>(c)];
    for (int side = 0; side < 2; ++side)
      for (int i = 0; i < 2; ++i)
        labels[static_cast<std::size_t>(clause_elem(c, side == 1, i))] =
            "x" + std::to_string(cl.scope[static_cast<std::size_t>(side)] + 1) +
            "_" + std::to_string(i) + "^C" + std::to_string(c + 1);
  }

  for (int v = 0; v < n; ++v) {
    for (int val = 0; val < 2; ++val) {
      ElemSet elems;
      int gamma = 0;
      for (int u = 0; u < n; ++u) {
        int c = clause_on[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        if (c < 0) continue;
        ++gamma;
        const McaConstraint& cl = src.constraints[static_cast<std::size_t>(c)];
        bool v_is_second = cl.scope[1] == v;
        elems.push_back(clause_elem(c, v_is_second, val));        // own element
        elems.push_back(clause_elem(c, !v_is_second, 1 - val));   // partner
      }
      int padding = m - 2 * gamma + (v + 1);
      for (int t = 0; t < padding; ++t) {
        elems.push_back(next_elem);
        labels.push_back("pad_x" + std::to_string(v + 1) + "_" +
                         std::to_string(val) + "." + std::to_string(t + 1));
        ++next_elem;
      }
      donors.sets.push_back(make_set(std::move(elems)));
      donors.weights.push_back(0);  // donors carry no weight of their own
      donors.set_labels.push_back("C[x" + std::to_string(v + 1) + "," +
                                  std::to_string(val) + "]");
    }
  }
  donors.ground_size = next_elem;
  donors.element_labels = std::move(labels);

  red.target.a.assign(static_cast<std::size_t>(n),
                      std::vector<long long>(static_cast<std::size_t>(n), 2));
  red.target.b.assign(static_cast<std::size_t>(n),
                      std::vector<Weight>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) {
    red.target.a[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] =
        m + v + 1;
    red.target.b[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] =
        red.W;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      int c = clause_on[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      red.target.b[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] =
          src.constraints[static_cast<std::size_t>(c)].clause_weight;
    }
  }
  validate_ip(red.target);
  return red;
}

}  // namespace plslab
