#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "plslab/error.hpp"
#include "plslab/mca.hpp"
#include "plslab/rng.hpp"

namespace plslab {

// Random tri-colored table instance: m constraints (m even), |X| = 3m/2
// variables in three equal color classes, every variable in exactly two
// constraints, every scope rainbow (blue, red, white).  Per color class a
// shuffled permutation of the constraint indices is consumed two slots per
// variable, which guarantees both the occurrence count and scope distinctness.
// Table entries are uniform in [weight_low, weight_high], independently zeroed
// with probability zero_fraction.
inline McaInstance gen_tricolored_mca(int m, int r, long long weight_low,
                                      long long weight_high,
                                      double zero_fraction, std::uint64_t seed,
                                      Sense sense = Sense::maximize) {
  require(m >= 2 && m % 2 == 0, "constraint count must be even and >= 2");
  require(r >= 2, "domain size must be at least 2");
  require(0 <= weight_low && weight_low <= weight_high,
          "weight bounds must satisfy 0 <= low <= high");
  require(zero_fraction >= 0.0 && zero_fraction <= 1.0,
          "zero_fraction must be in [0, 1]");
  Rng rng = make_rng(seed);

  McaInstance inst;
  inst.num_vars = 3 * (m / 2);
  inst.domain_size = r;
  inst.sense = sense;
  inst.semantics = ConstraintSemantics::table;
  inst.constraints.resize(static_cast<std::size_t>(m));
  inst.colors.resize(static_cast<std::size_t>(inst.num_vars));
  for (auto& c : inst.constraints) c.scope.assign(3, -1);

  int per_class = m / 2;
  const VarColor classes[3] = {VarColor::blue, VarColor::red, VarColor::white};
  for (int cls = 0; cls < 3; ++cls) {
    std::vector<int> slots(static_cast<std::size_t>(m));
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int j = 0; j < per_class; ++j) {
      int var = cls * per_class + j;
      inst.colors[static_cast<std::size_t>(var)] = classes[cls];
      inst.constraints[static_cast<std::size_t>(slots[2 * j])]
          .scope[static_cast<std::size_t>(cls)] = var;
      inst.constraints[static_cast<std::size_t>(slots[2 * j + 1])]
          .scope[static_cast<std::size_t>(cls)] = var;
    }
  }

  std::size_t table_size = 1;
  for (int i = 0; i < 3; ++i) table_size *= static_cast<std::size_t>(r);
  for (auto& c : inst.constraints) {
    c.table.resize(table_size);
    for (auto& w : c.table) {
      if (rand_bernoulli(rng, zero_fraction))
        w = 0;
      else
        w = rand_int(rng, weight_low, weight_high);
    }
  }
  validate_tricolored(inst);
  return inst;
}

// Random positive not-all-equal instance: clauses are *distinct* unordered
// variable pairs (the TS pair map and the IP intersection targets both assume
// at most one clause per pair).  With all_pairs set, every remaining pair is
// appended at weight 0, which the IP construction requires.
inline McaInstance gen_posnae(int num_vars, int num_clauses,
                              long long weight_high, bool all_pairs,
                              std::uint64_t seed) {
  require(num_vars >= 2, "POSNAE needs at least two variables");
  require(weight_high >= 1, "weight_high must be at least 1");
  long long max_pairs =
      static_cast<long long>(num_vars) * (num_vars - 1) / 2;
  require(num_clauses >= 1 && num_clauses <= max_pairs,
          "clause count must be between 1 and the number of variable pairs");
  Rng rng = make_rng(seed);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(max_pairs));
  for (int x = 0; x < num_vars; ++x)
    for (int y = x + 1; y < num_vars; ++y) pairs.emplace_back(x, y);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  McaInstance inst;
  inst.num_vars = num_vars;
  inst.domain_size = 2;
  inst.sense = Sense::maximize;
  inst.semantics = ConstraintSemantics::nae;
  for (int i = 0; i < num_clauses; ++i) {
    McaConstraint c;
    c.scope = {pairs[static_cast<std::size_t>(i)].first,
               pairs[static_cast<std::size_t>(i)].second};
    c.clause_weight = rand_int(rng, 1, weight_high);
    inst.constraints.push_back(std::move(c));
  }
  if (all_pairs) {
    for (std::size_t i = static_cast<std::size_t>(num_clauses);
         i < pairs.size(); ++i) {
      McaConstraint c;
      c.scope = {pairs[i].first, pairs[i].second};
      c.clause_weight = 0;
      inst.constraints.push_back(std::move(c));
    }
  }
  validate_mca(inst);
  return inst;
}

// Random weighted CNF: clause lengths uniform in [1, max_len], scopes are
// distinct variables, polarities fair coins, weights uniform in
// [1, weight_high].
inline McaInstance gen_cnf(int num_vars, int num_clauses, int max_len,
                           long long weight_high, std::uint64_t seed) {
  require(num_vars >= 1, "CNF needs at least one variable");
  require(num_clauses >= 1, "CNF needs at least one clause");
  require(max_len >= 1 && max_len <= num_vars,
          "clause length bound must be in [1, num_vars]");
  require(weight_high >= 1, "weight_high must be at least 1");
  Rng rng = make_rng(seed);

  McaInstance inst;
  inst.num_vars = num_vars;
  inst.domain_size = 2;
  inst.sense = Sense::maximize;
  inst.semantics = ConstraintSemantics::cnf;
  std::vector<int> vars(static_cast<std::size_t>(num_vars));
  std::iota(vars.begin(), vars.end(), 0);
  for (int i = 0; i < num_clauses; ++i) {
    int len = static_cast<int>(rand_int(rng, 1, max_len));
    std::shuffle(vars.begin(), vars.end(), rng);
    McaConstraint c;
    c.scope.assign(vars.begin(), vars.begin() + len);
    std::sort(c.scope.begin(), c.scope.end());
    c.negated.resize(static_cast<std::size_t>(len));
    for (std::size_t t = 0; t < c.negated.size(); ++t)
      c.negated[t] = rand_int(rng, 0, 1) == 1;
    c.clause_weight = rand_int(rng, 1, weight_high);
    inst.constraints.push_back(std::move(c));
  }
  validate_mca(inst);
  return inst;
}

}  // namespace plslab
