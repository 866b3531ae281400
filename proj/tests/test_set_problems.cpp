// Cost-oracle and feasibility checks for all ten target problems, pinned to
// hand-computed values on small instances.

#include <catch2/catch_amalgamated.hpp>

#include "plslab/set_problems.hpp"

using namespace plslab;

namespace {

WeightedCollection collection(int ground, std::vector<ElemSet> sets,
                              std::vector<long long> weights) {
  WeightedCollection col;
  col.ground_size = ground;
  col.sets = std::move(sets);
  for (long long w : weights) col.weights.emplace_back(w);
  validate_collection(col);
  return col;
}

}  // namespace

TEST_CASE("set packing pays only all-disjoint members") {
  SpInstance inst;
  inst.col = collection(3, {{0, 1}, {1, 2}, {2}}, {5, 4, 2});
  inst.max_chosen = 3;
  validate_sp(inst);
  CHECK(cost_sp(inst, CollectionSubset{{}}) == 0);
  // A meets B', C meets B': nothing scores.
  CHECK(cost_sp(inst, CollectionSubset{{0, 1, 2}}) == 0);
  // A and C are disjoint.
  CHECK(cost_sp(inst, CollectionSubset{{0, 2}}) == 7);
  CHECK(feasible_sp(inst, CollectionSubset{{0, 1, 2}}));
  inst.max_chosen = 2;
  CHECK(!feasible_sp(inst, CollectionSubset{{0, 1, 2}}));
}

TEST_CASE("set splitting pays split sets") {
  SspInstance inst;
  inst.col = collection(2, {{0, 1}, {0}}, {3, 9});
  validate_ssp(inst);
  CHECK(cost_ssp(inst, Partition{{0, 0}}) == 0);   // all one side
  CHECK(cost_ssp(inst, Partition{{0, 1}}) == 3);   // {x,y} split
  CHECK(cost_ssp(inst, Partition{{1, 0}}) == 3);   // symmetric
  // Singletons can never be split, whatever the sides.
  CHECK(cost_ssp(inst, Partition{{1, 1}}) == 0);
  CHECK(!feasible_ssp(inst, Partition{{0}}));  // wrong length
}

TEST_CASE("set cover sums chosen weights and demands a cover") {
  ScInstance inst;
  inst.col = collection(3, {{0, 1}, {2}, {0, 1, 2}}, {5, 2, 9});
  validate_sc(inst);
  CHECK(cost_sc(inst, CollectionSubset{{0, 1}}) == 7);
  CHECK(cost_sc(inst, CollectionSubset{{0, 1, 2}}) == 16);
  CHECK(!feasible_sc(inst, CollectionSubset{{0}}));  // 2 uncovered
  CHECK_THROWS_AS(cost_sc(inst, CollectionSubset{{0}}), Error);
}

TEST_CASE("test set separation modes") {
  TsInstance inst;
  inst.col = collection(2, {{0}, {1}, {0, 1}}, {1, 1, 1});
  inst.max_chosen = 3;
  inst.pair_w = {Weight(7)};
  validate_ts(inst);
  // Both singletons separate u and v in both modes.
  CHECK(cost_ts(inst, CollectionSubset{{0, 1}}) == 7);
  inst.separation = TsSeparation::one_sided;
  CHECK(cost_ts(inst, CollectionSubset{{0, 1}}) == 7);
  // One singleton: one-sided only.
  inst.separation = TsSeparation::two_sided;
  CHECK(cost_ts(inst, CollectionSubset{{0}}) == 0);
  inst.separation = TsSeparation::one_sided;
  CHECK(cost_ts(inst, CollectionSubset{{0}}) == 7);
  // The doubleton contains both: never "exactly one".
  CHECK(cost_ts(inst, CollectionSubset{{2}}) == 0);
  inst.separation = TsSeparation::two_sided;
  CHECK(cost_ts(inst, CollectionSubset{{2}}) == 0);
  CHECK(!feasible_ts(inst, CollectionSubset{{}}));  // at least one set
}

TEST_CASE("set basis pays union-expressible entries") {
  SbInstance inst;
  inst.col = collection(3, {{0, 1}, {0}, {2}}, {4, 2, 5});
  inst.basis_size = 2;
  validate_sb(inst);
  // F = {{1},{2}} expresses {1,2} (union) and {1}, but not {3}.
  CHECK(cost_sb(inst, BasisFamily{{{0}, {1}}}) == 6);
  // F = {B, {1}} expresses nothing in M except... B={1,2,3} is not an entry;
  // {1} w2 is, via the singleton member.
  CHECK(cost_sb(inst, BasisFamily{{{0}, {0, 1, 2}}}) == 2);
  CHECK(!feasible_sb(inst, BasisFamily{{{0}}}));  // must pick exactly 2
  SbInstance whole;
  whole.col = collection(3, {{0, 1, 2}}, {9});
  whole.basis_size = 1;
  CHECK(cost_sb(whole, BasisFamily{{{0, 1, 2}}}) == 9);
}

TEST_CASE("empty subfamily expresses the empty set") {
  SbInstance inst;
  inst.col = collection(2, {{}, {0}}, {6, 1});
  inst.basis_size = 1;
  // The empty collection entry is a union of zero basis members.
  CHECK(cost_sb(inst, BasisFamily{{{1}}}) == 6);
}

TEST_CASE("hitting set pays intersected entries") {
  HsInstance inst;
  // Ground 0=x, 1=x̄, 2=y, 3=ȳ.
  inst.col = collection(4, {{0, 1}, {0, 3}}, {4, 3});
  inst.max_chosen = 2;
  validate_hs(inst);
  CHECK(cost_hs(inst, ElementSubset{{}}) == 0);
  CHECK(cost_hs(inst, ElementSubset{{0}}) == 7);
  CHECK(cost_hs(inst, ElementSubset{{3}}) == 3);
  inst.max_chosen = 1;
  CHECK(!feasible_hs(inst, ElementSubset{{0, 3}}));
}

TEST_CASE("intersection pattern scores matching pairs, diagonal included") {
  IpInstance inst;
  inst.donors = collection(3, {{0, 1, 2}}, {0});
  inst.a = {{3}};
  inst.b = {{5}};
  validate_ip(inst);
  CHECK(cost_ip(inst, SetVector{{0}}) == 5);  // |C∩C| = 3 = a_11
  inst.a = {{4}};
  CHECK(cost_ip(inst, SetVector{{0}}) == 0);
  CHECK(!feasible_ip(inst, SetVector{{0, 0}}));  // wrong arity
}

TEST_CASE("comparative containment scores superset weights plus shift") {
  CcInstance inst;
  inst.m_side = collection(2, {{0, 1}}, {3});
  inst.n_side = collection(2, {{0}}, {2});
  inst.shift = 2;
  validate_cc(inst);
  // ∅ is contained in everything.
  CHECK(cost_cc(inst, ElementSubset{{}}) == 3 - 2 + 2);
  // {a} ⊆ {a,b} and {a} ⊆ {a}: 3 − 2 + 2.
  CHECK(cost_cc(inst, ElementSubset{{0}}) == 3);
  // {a,b} only fits the M side set.
  CHECK(cost_cc(inst, ElementSubset{{0, 1}}) == 3 + 2);
  // {b} fits the M side, not the N side.
  CHECK(cost_cc(inst, ElementSubset{{1}}) == 3 + 2);
}

TEST_CASE("matching cost sums present triples, absent ones weigh zero") {
  W3dmInstance inst;
  inst.n = 2;
  inst.weights[{0, 0, 0}] = 4;
  validate_w3dm(inst);
  Matching perfect{{{0, 0, 0}, {1, 1, 1}}};
  CHECK(feasible_w3dm(inst, perfect));
  CHECK(cost_w3dm(inst, perfect) == 4);
  Matching clash{{{0, 0, 0}, {1, 0, 1}}};  // girl 0 used twice
  CHECK(!feasible_w3dm(inst, clash));
  CHECK_THROWS_AS(cost_w3dm(inst, clash), Error);
}

TEST_CASE("exact cover demands disjoint triples covering everything") {
  X3cInstance inst;
  inst.ground_size = 6;
  inst.weights[{0, 1, 2}] = 6;
  validate_x3c(inst);
  CHECK(!feasible_x3c(inst, Matching{{{0, 1, 2}, {2, 3, 4}}}));  // 2 reused
  Matching cover{{{0, 1, 2}, {3, 4, 5}}};
  CHECK(feasible_x3c(inst, cover));
  CHECK(cost_x3c(inst, cover) == 6);
  X3cInstance tiny;
  tiny.ground_size = 3;
  tiny.weights[{0, 1, 2}] = 6;
  CHECK(cost_x3c(tiny, Matching{{{0, 1, 2}}}) == 6);
}

TEST_CASE("initial solutions are feasible and canonical") {
  SpInstance sp;
  sp.col = collection(3, {{0}, {1}}, {1, 1});
  sp.max_chosen = 1;
  CHECK(feasible_sp(sp, init_sp(sp)));
  ScInstance sc;
  sc.col = collection(2, {{0}, {1}}, {1, 1});
  CHECK(feasible_sc(sc, init_sc(sc)));  // full collection
  CHECK(cost_sc(sc, init_sc(sc)) == 2);
  SspInstance ssp;
  ssp.col = sc.col;
  CHECK(feasible_ssp(ssp, init_ssp(ssp)));
  HsInstance hs;
  hs.col = sc.col;
  hs.max_chosen = 1;
  CHECK(feasible_hs(hs, init_hs(hs)));
  W3dmInstance w;
  w.n = 3;
  CHECK(feasible_w3dm(w, init_w3dm(w)));  // identity matching
  X3cInstance x;
  x.ground_size = 6;
  CHECK(feasible_x3c(x, init_x3c(x)));
}

TEST_CASE("canonicalize sorts and dedups") {
  CollectionSubset s{{2, 0, 2}};
  canonicalize(s);
  CHECK(s.indices == std::vector<int>{0, 2});
  BasisFamily f{{{1, 0}, {}}};
  canonicalize(f);
  REQUIRE(f.members.size() == 2u);
  CHECK(f.members[0].empty());
  CHECK(f.members[1] == ElemSet{0, 1});
}
