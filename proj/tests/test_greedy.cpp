// Greedy baselines: deterministic scan order, pinned results on hand-sized
// collections, and certified 1-differ optimality on random instances.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "plslab/bindings.hpp"
#include "plslab/engine.hpp"
#include "plslab/greedy.hpp"
#include "plslab/harness.hpp"
#include "plslab/set_problems.hpp"

using namespace plslab;
using Catch::Matchers::ContainsSubstring;

namespace {

SpInstance packing_fixture() {
  SpInstance inst;
  inst.col.ground_size = 4;
  inst.col.sets = {make_set({0, 1}), make_set({1, 2}), make_set({2, 3}),
                   make_set({3})};
  inst.col.weights = {5, 4, 2, 1};
  inst.max_chosen = 3;
  validate_sp(inst);
  return inst;
}

}  // namespace

TEST_CASE("greedy packing keeps heavy disjoint members up to the capacity") {
  SpInstance inst = packing_fixture();

  // scan 5,4,2,1: keep {0,1}, clash {1,2}, keep {2,3}, clash {3}
  auto sol = greedy_packing(inst);
  REQUIRE(std::get<CollectionSubset>(sol).indices == std::vector<int>{0, 2});
  REQUIRE(cost_sp(inst, sol) == 7);

  // the capacity cuts the scan short
  inst.max_chosen = 1;
  auto capped = greedy_packing(inst);
  REQUIRE(std::get<CollectionSubset>(capped).indices == std::vector<int>{0});
}

TEST_CASE("greedy packing breaks weight ties toward the earlier member") {
  SpInstance inst;
  inst.col.ground_size = 2;
  inst.col.sets = {make_set({0}), make_set({0}), make_set({1})};
  inst.col.weights = {3, 3, 2};
  inst.max_chosen = 3;
  auto sol = greedy_packing(inst);
  REQUIRE(std::get<CollectionSubset>(sol).indices == std::vector<int>{0, 2});
}

TEST_CASE("greedy packing is one-swap optimal but not two-swap optimal") {
  // one heavy member blocks two lighter disjoint ones worth more together
  SpInstance inst;
  inst.col.ground_size = 4;
  inst.col.sets = {make_set({0, 1}), make_set({0, 2}), make_set({1, 3})};
  inst.col.weights = {10, 6, 5};
  inst.max_chosen = 3;

  auto sol = greedy_packing(inst);
  REQUIRE(std::get<CollectionSubset>(sol).indices == std::vector<int>{0});

  Certificate one = verify_local_optimum(make_binding(inst, {.k = 1}), sol);
  REQUIRE(one.verdict == Verdict::locally_optimal);

  Certificate two = verify_local_optimum(make_binding(inst, {.k = 2}), sol);
  REQUIRE(two.verdict == Verdict::improvable);
  REQUIRE(two.witness.has_value());
  REQUIRE(two.witness->cost == 11);
}

TEST_CASE("greedy cover drops the heaviest redundant members first") {
  ScInstance inst;
  inst.col.ground_size = 3;
  inst.col.sets = {make_set({0, 1, 2}), make_set({0, 1}), make_set({2}),
                   make_set({1, 2})};
  inst.col.weights = {9, 5, 4, 3};

  // drop {0,1,2}@9, keep {0,1}@5 (privately covers 0), drop {2}@4,
  // keep {1,2}@3 (privately covers 2)
  auto sol = greedy_cover(inst);
  REQUIRE(std::get<CollectionSubset>(sol).indices == std::vector<int>{1, 3});
  REQUIRE(cost_sc(inst, sol) == 8);
  REQUIRE(feasible_sc(inst, sol));
}

TEST_CASE("greedy cover refuses a collection that cannot cover") {
  ScInstance inst;
  inst.col.ground_size = 3;
  inst.col.sets = {make_set({0, 1})};  // element 2 is never covered
  inst.col.weights = {4};
  REQUIRE_THROWS_WITH(greedy_cover(inst), ContainsSubstring("does not cover"));
}

TEST_CASE("greedy packing certifies 1-differ optimal on random instances") {
  Rng rng = make_rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    SpInstance inst = random_sp_instance(rng);
    auto sol = greedy_packing(inst);
    REQUIRE(feasible_sp(inst, sol));
    Certificate cert = verify_local_optimum(make_binding(inst, {.k = 1}), sol);
    INFO("trial " << trial);
    REQUIRE(cert.verdict == Verdict::locally_optimal);
  }
}

TEST_CASE("greedy cover certifies 1-differ optimal on random instances") {
  Rng rng = make_rng(4048);
  for (int trial = 0; trial < 60; ++trial) {
    ScInstance inst = random_sc_instance(rng);
    auto sol = greedy_cover(inst);
    REQUIRE(feasible_sc(inst, sol));
    Certificate cert = verify_local_optimum(make_binding(inst, {.k = 1}), sol);
    INFO("trial " << trial);
    REQUIRE(cert.verdict == Verdict::locally_optimal);
  }
}
