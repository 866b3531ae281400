// Neighborhood enumeration: counts pinned by hand, symmetry, monotonicity in
// k, and the matching (p,q) moves.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "plslab/neighborhoods.hpp"
#include "plslab/rng.hpp"

using namespace plslab;

namespace {

template <class Inst>
std::vector<Solution> collect_kdiffer(const Inst& inst, const Solution& sol,
                                      int k) {
  std::vector<Solution> out;
  kdiffer_neighbors(inst, sol, k, [&](Solution next, const std::string&) {
    out.push_back(std::move(next));
    return true;
  });
  return out;
}

std::vector<Solution> collect_pq(const W3dmInstance& inst, const Solution& sol,
                                 int p, int q) {
  std::vector<Solution> out;
  w3dm_pq_neighbors(inst, sol, p, q,
                    [&](Solution next, const std::string&) {
                      out.push_back(std::move(next));
                      return true;
                    });
  return out;
}

HsInstance hs_over(int ground) {
  HsInstance inst;
  inst.col.ground_size = ground;
  inst.col.sets = {{0}};
  inst.col.weights = {Weight(1)};
  inst.max_chosen = ground;
  return inst;
}

}  // namespace

TEST_CASE("element subset distance-1 neighbors include swaps") {
  // Distance counts removals and additions separately and takes the larger
  // side, so a one-out-one-in swap sits at distance 1.  |B| = 4, |S| = 2:
  // 2 removals + 2 additions + 2*2 swaps.
  HsInstance inst = hs_over(4);
  auto nbrs = collect_kdiffer(inst, ElementSubset{{0, 1}}, 1);
  CHECK(nbrs.size() == 8u);
}

TEST_CASE("element subset distance-2 reaches every subset here") {
  HsInstance inst = hs_over(4);
  // From a 2-subset of a 4-ground, at most 2 leave and at most 2 enter in
  // any move, so the whole power set minus the start is within distance 2.
  auto nbrs = collect_kdiffer(inst, ElementSubset{{0, 1}}, 2);
  std::set<ElemSet> seen;
  for (const Solution& s : nbrs)
    seen.insert(std::get<ElementSubset>(s).elements);
  CHECK(seen.size() == nbrs.size());  // no duplicates in the stream
  CHECK(nbrs.size() == 15u);
  CHECK(seen.count(ElemSet{0, 1}) == 0u);  // never the start itself
}

TEST_CASE("partition flip neighborhood has n members at k=1") {
  SspInstance inst;
  inst.col.ground_size = 5;
  inst.col.sets = {{0, 1, 2, 3, 4}};
  inst.col.weights = {Weight(1)};
  auto nbrs = collect_kdiffer(inst, Partition{{0, 0, 1, 1, 0}}, 1);
  CHECK(nbrs.size() == 5u);
}

TEST_CASE("k-differ for collections uses the larger one-sided difference") {
  // Capacity 1 out of two sets: the swap |drop|=1,|add|=1 must be a k=1
  // neighbor (max(1,1) = 1), not distance 2.
  SpInstance inst;
  inst.col.ground_size = 2;
  inst.col.sets = {{0}, {1}};
  inst.col.weights = {Weight(1), Weight(2)};
  inst.max_chosen = 1;
  auto nbrs = collect_kdiffer(inst, CollectionSubset{{0}}, 1);
  bool swap_seen = false;
  for (const Solution& s : nbrs)
    swap_seen |= std::get<CollectionSubset>(s).indices == std::vector<int>{1};
  CHECK(swap_seen);
}

TEST_CASE("set vector neighbors change at most k positions") {
  IpInstance inst;
  inst.donors.ground_size = 2;
  inst.donors.sets = {{0}, {1}, {0, 1}};
  inst.donors.weights = {Weight(0), Weight(0), Weight(0)};
  inst.a = {{1, 0}, {0, 1}};
  inst.b = {{1, 1}, {1, 1}};
  Solution v = SetVector{{0, 0}};
  // k=1: each of 2 positions can move to 2 other donors -> 4.
  CHECK(collect_kdiffer(inst, v, 1).size() == 4u);
  // k=2 adds the 2*2 double moves.
  CHECK(collect_kdiffer(inst, v, 2).size() == 8u);
}

TEST_CASE("basis neighbors swap members for other subsets") {
  SbInstance inst;
  inst.col.ground_size = 2;
  inst.col.sets = {{0, 1}};
  inst.col.weights = {Weight(3)};
  inst.basis_size = 1;
  // 2^2 subsets of B; replacing the single member offers 3 alternatives.
  auto nbrs = collect_kdiffer(inst, BasisFamily{{{0}}}, 1);
  CHECK(nbrs.size() == 3u);
}

TEST_CASE("matching one-triple replacement is impossible") {
  W3dmInstance inst;
  inst.n = 3;
  auto nbrs = collect_pq(inst, init_w3dm(inst), 1, 6);
  CHECK(nbrs.empty());
}

TEST_CASE("two-triple rewirings at n=2") {
  W3dmInstance inst;
  inst.n = 2;
  auto nbrs = collect_pq(inst, init_w3dm(inst), 2, 4);
  std::set<std::vector<Triple>> seen;
  for (const Solution& s : nbrs) seen.insert(std::get<Matching>(s).triples);
  CHECK(seen.size() == 3u);
  CHECK(seen.count({{{0, 0, 1}, {1, 1, 0}}}) == 1u);
  CHECK(seen.count({{{0, 1, 0}, {1, 0, 1}}}) == 1u);
  CHECK(seen.count({{{0, 1, 1}, {1, 0, 0}}}) == 1u);
}

TEST_CASE("zero relocation budget forbids every rewiring") {
  W3dmInstance inst;
  inst.n = 2;
  CHECK(collect_pq(inst, init_w3dm(inst), 2, 0).empty());
}

TEST_CASE("pq scan refuses oversized dimensions") {
  W3dmInstance inst;
  inst.n = 15;
  CHECK_THROWS_AS(collect_pq(inst, init_w3dm(inst), 2, 4),
                  NeighborhoodTooLarge);
}

TEST_CASE("neighborhoods grow monotonically with k") {
  Rng rng = make_rng(31);
  for (int round = 0; round < 20; ++round) {
    HsInstance inst = hs_over(static_cast<int>(rand_int(rng, 2, 6)));
    inst.max_chosen = inst.col.ground_size;
    ElemSet start;
    for (int e = 0; e < inst.col.ground_size; ++e)
      if (rand_int(rng, 0, 1)) start.push_back(e);
    auto small = collect_kdiffer(inst, ElementSubset{start}, 1);
    auto big = collect_kdiffer(inst, ElementSubset{start}, 2);
    std::set<ElemSet> big_set;
    for (const Solution& s : big)
      big_set.insert(std::get<ElementSubset>(s).elements);
    for (const Solution& s : small)
      CHECK(big_set.count(std::get<ElementSubset>(s).elements) == 1u);
  }
}

TEST_CASE("k-differ is symmetric on random element subsets") {
  Rng rng = make_rng(77);
  for (int round = 0; round < 25; ++round) {
    HsInstance inst = hs_over(static_cast<int>(rand_int(rng, 2, 5)));
    inst.max_chosen = inst.col.ground_size;
    ElemSet a, b;
    for (int e = 0; e < inst.col.ground_size; ++e) {
      if (rand_int(rng, 0, 1)) a.push_back(e);
      if (rand_int(rng, 0, 1)) b.push_back(e);
    }
    if (a == b) continue;
    auto has = [&](const ElemSet& from, const ElemSet& to) {
      for (const Solution& s : collect_kdiffer(inst, ElementSubset{from}, 2))
        if (std::get<ElementSubset>(s).elements == to) return true;
      return false;
    };
    CHECK(has(a, b) == has(b, a));
  }
}
