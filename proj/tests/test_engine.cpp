// Search engine invariants: strict improvement, fixpoint idempotence, budget
// accounting, determinism, scan caps, and certificates cross-checked against
// brute-force neighborhood scans.

#include <catch2/catch_amalgamated.hpp>

#include "plslab/bindings.hpp"
#include "plslab/engine.hpp"
#include "plslab/mca_gen.hpp"
#include "plslab/rng.hpp"

using namespace plslab;

namespace {

SpInstance packing_toy() {
  SpInstance inst;
  inst.col.ground_size = 4;
  inst.col.sets = {{0, 1}, {1, 2}, {2, 3}, {3}};
  inst.col.weights = {Weight(5), Weight(4), Weight(2), Weight(1)};
  inst.max_chosen = 3;
  return inst;
}

ProblemBinding packing_binding(const SpInstance& inst, int k) {
  BindingOptions opt;
  opt.k = k;
  return make_binding(AnyInstance(inst), opt);
}

// Every subset of the collection, feasible or not.
std::vector<CollectionSubset> all_subsets(int n) {
  std::vector<CollectionSubset> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    CollectionSubset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.indices.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("accepted moves improve strictly and monotonically") {
  SpInstance inst = packing_toy();
  ProblemBinding b = packing_binding(inst, 2);
  SearchReport rep = local_search(b, b.initial());
  REQUIRE(rep.terminated == Termination::local_opt);
  Cost last = rep.start_cost;
  for (const Step& s : rep.steps) {
    CHECK(s.cost > last);  // maximization: strictly uphill
    last = s.cost;
  }
  CHECK(rep.final_cost == last);
}

TEST_CASE("minimization walks strictly downhill") {
  McaInstance src = gen_tricolored_mca(2, 2, 2, 9, 0.0, 3, Sense::minimize);
  ProblemBinding b = make_binding(AnyInstance(src));
  SearchReport rep = local_search(b, b.initial());
  Cost last = rep.start_cost;
  for (const Step& s : rep.steps) {
    CHECK(s.cost < last);
    last = s.cost;
  }
}

TEST_CASE("a finished search is a fixpoint") {
  SpInstance inst = packing_toy();
  ProblemBinding b = packing_binding(inst, 2);
  SearchReport rep = local_search(b, b.initial());
  SearchReport again = local_search(b, rep.final);
  CHECK(again.steps.empty());
  CHECK(again.terminated == Termination::local_opt);
  CHECK(again.final_cost == rep.final_cost);
}

TEST_CASE("budget zero classifies without moving") {
  SpInstance inst = packing_toy();
  ProblemBinding b = packing_binding(inst, 2);
  SearchReport rep = local_search(b, b.initial(), PivotRule::first(), 0);
  CHECK(rep.steps.empty());
  CHECK(rep.final == rep.start);
  // The empty packing is improvable, so the budget ran out.
  CHECK(rep.terminated == Termination::budget_exhausted);

  SearchReport full = local_search(b, b.initial());
  SearchReport at_opt = local_search(b, full.final, PivotRule::first(), 0);
  CHECK(at_opt.terminated == Termination::local_opt);
}

TEST_CASE("budget counts accepted moves exactly") {
  SpInstance inst = packing_toy();
  ProblemBinding b = packing_binding(inst, 2);
  SearchReport full = local_search(b, b.initial());
  REQUIRE(full.steps.size() >= 2u);
  SearchReport capped =
      local_search(b, b.initial(), PivotRule::first(), full.steps.size() - 1);
  CHECK(capped.steps.size() == full.steps.size() - 1);
  CHECK(capped.terminated == Termination::budget_exhausted);
}

TEST_CASE("searches are deterministic per pivot rule") {
  McaInstance src = gen_tricolored_mca(4, 2, 2, 9, 0.0, 21);
  ProblemBinding b = make_binding(AnyInstance(src));
  for (PivotRule rule :
       {PivotRule::first(), PivotRule::best(), PivotRule::random(5)}) {
    SearchReport r1 = local_search(b, b.initial(), rule);
    SearchReport r2 = local_search(b, b.initial(), rule);
    CHECK(r1.final == r2.final);
    REQUIRE(r1.steps.size() == r2.steps.size());
    for (std::size_t i = 0; i < r1.steps.size(); ++i)
      CHECK(r1.steps[i].move == r2.steps[i].move);
  }
}

TEST_CASE("every pivot rule lands on a local optimum") {
  McaInstance src = gen_tricolored_mca(2, 3, 2, 9, 0.0, 8);
  ProblemBinding b = make_binding(AnyInstance(src));
  for (PivotRule rule :
       {PivotRule::first(), PivotRule::best(), PivotRule::random(1),
        PivotRule::random(2)}) {
    SearchReport rep = local_search(b, b.initial(), rule);
    REQUIRE(rep.terminated == Termination::local_opt);
    Certificate cert = verify_local_optimum(b, rep.final);
    CHECK(cert.verdict == Verdict::locally_optimal);
    CHECK(cert.solution_cost == rep.final_cost);
  }
}

TEST_CASE("best improvement never finishes below first improvement's step") {
  // Both rules make strictly improving moves; best picks the largest gain,
  // so its first step gains at least as much.
  SpInstance inst = packing_toy();
  ProblemBinding b = packing_binding(inst, 2);
  SearchReport first = local_search(b, b.initial(), PivotRule::first(), 1);
  SearchReport best = local_search(b, b.initial(), PivotRule::best(), 1);
  REQUIRE(first.steps.size() == 1u);
  REQUIRE(best.steps.size() == 1u);
  CHECK(best.steps[0].cost >= first.steps[0].cost);
}

TEST_CASE("certificates agree with brute force on every start") {
  SpInstance inst = packing_toy();
  ProblemBinding b = packing_binding(inst, 2);
  for (const CollectionSubset& s : all_subsets(inst.col.num_sets())) {
    if (!b.feasible(s)) continue;
    Cost base = b.cost(s);
    bool improvable_brute = false;
    b.neighbors(Solution(s), [&](Solution next, const std::string&) {
      if (b.cost(next) > base) improvable_brute = true;
      return !improvable_brute;
    });
    Certificate cert = verify_local_optimum(b, s);
    CHECK((cert.verdict == Verdict::improvable) == improvable_brute);
    if (cert.verdict == Verdict::improvable) {
      REQUIRE(cert.witness.has_value());
      CHECK(cert.witness->cost > base);
      CHECK(b.feasible(cert.witness->neighbor));
    }
  }
}

TEST_CASE("scan cap aborts oversized neighborhood scans") {
  McaInstance src = gen_tricolored_mca(4, 3, 2, 9, 0.0, 12);
  ProblemBinding b = make_binding(AnyInstance(src));
  CHECK_THROWS_AS(local_search(b, b.initial(), PivotRule::first(), 100, 3),
                  NeighborhoodTooLarge);
  CHECK_THROWS_AS(verify_local_optimum(b, b.initial(), 3),
                  NeighborhoodTooLarge);
}

TEST_CASE("infeasible starts are rejected") {
  SpInstance inst = packing_toy();
  inst.max_chosen = 1;
  ProblemBinding b = packing_binding(inst, 1);
  CHECK_THROWS_AS(local_search(b, CollectionSubset{{0, 1}}), Error);
}
