// The matching construction: gadget layout, standard matchings, the (6,12)
// move catalog, the inventory diagnostic, and the exact-cover view.

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "plslab/engine.hpp"
#include "plslab/mca.hpp"
#include "plslab/mca_gen.hpp"
#include "plslab/reductions.hpp"
#include "plslab/set_problems.hpp"

using namespace plslab;
using Catch::Matchers::ContainsSubstring;

namespace {

// Same two-constraint rainbow fixture as the set-construction tests:
// scopes (x1,x2,x3), r = 2, C1 pays 2/5 on its extreme tuples, C2 pays 3,
// W = 11.
McaInstance tri_fixture() {
  McaInstance inst;
  inst.num_vars = 3;
  inst.domain_size = 2;
  inst.sense = Sense::maximize;
  inst.semantics = ConstraintSemantics::table;
  inst.colors = {VarColor::blue, VarColor::red, VarColor::white};
  McaConstraint c1;
  c1.scope = {0, 1, 2};
  c1.table.assign(8, 0);
  c1.table[0] = 2;
  c1.table[7] = 5;
  McaConstraint c2;
  c2.scope = {0, 1, 2};
  c2.table.assign(8, 0);
  c2.table[7] = 3;
  inst.constraints = {c1, c2};
  validate_mca(inst);
  return inst;
}

std::vector<Assignment> all_assignments(int n, int r) {
  std::vector<Assignment> out;
  Assignment a(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(a);
    int v = 0;
    while (v < n && ++a[static_cast<std::size_t>(v)] == r) {
      a[static_cast<std::size_t>(v)] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return out;
}

bool flip_optimal(const McaInstance& src, const Assignment& a) {
  Cost base = source_cost(src, a);
  for (const Assignment& nb : flip_neighbors(src, a))
    if (improves(src.sense, source_cost(src, nb), base)) return false;
  return true;
}

}  // namespace

TEST_CASE("gadget inventory: larges, mediums and smalls at pinned weights") {
  W3dmReduction red = reduce_mca_w3dm(tri_fixture());

  REQUIRE(red.W == 11);
  REQUIRE(red.large_weight() == 77);
  REQUIRE(red.medium_weight() == 33);
  // 2rn regular elements plus two zero elements per variable
  REQUIRE(red.target.n == 2 * 2 * 3 + 2);

  int larges = 0, mediums = 0, smalls = 0;
  Weight small_total = 0;
  for (const auto& [t, w] : red.target.weights) {
    if (w == 77)
      ++larges;
    else if (w == 33)
      ++mediums;
    else {
      ++smalls;
      small_total += w;
    }
  }
  REQUIRE(larges == 12);   // per variable: one per value per copy
  REQUIRE(mediums == 12);
  REQUIRE(smalls == 16);   // one per constraint per scope tuple
  REQUIRE(small_total == 10);

  // anchored dimensions: blue larges hold the zero element in the boys
  // coordinate, red in girls, white in homes
  Triple lb = red.layout.large(0, 0, 0);
  REQUIRE(lb[0] >= 2 * 2 * 3);
  REQUIRE(lb[1] == lb[2]);
  Triple lr = red.layout.large(1, 0, 0);
  REQUIRE(lr[1] >= 2 * 2 * 3);
  Triple lw = red.layout.large(2, 0, 0);
  REQUIRE(lw[2] >= 2 * 2 * 3);

  // medium copy crossing: blue crosses homes, red stays, white crosses girls
  Triple mb = red.layout.medium(0, 1, 0);
  REQUIRE(mb[0] == mb[1]);
  REQUIRE(mb[2] != mb[0]);
  Triple mr = red.layout.medium(1, 1, 0);
  REQUIRE((mr[0] == mr[1] && mr[1] == mr[2]));
  Triple mw = red.layout.medium(2, 1, 0);
  REQUIRE(mw[0] == mw[2]);
  REQUIRE(mw[1] != mw[0]);

  REQUIRE_THROWS_AS(reduce_mca_w3dm(tri_fixture(), 1), Error);
  REQUIRE_THROWS_AS(reduce_mca_w3dm(tri_fixture(), 7), Error);
}

TEST_CASE("standard matchings are perfect, affine and decodable") {
  W3dmReduction red = reduce_mca_w3dm(tri_fixture());
  // per variable: 14W for larges plus 2 * medium_factor * (r-1) W mediums
  REQUIRE(red.cost_offset() == Cost(11) * 3 * (14 + 2 * 3 * 1));

  for (const Assignment& a : all_assignments(3, 2)) {
    Solution enc = red.encode(a);
    const auto& m = std::get<Matching>(enc);
    REQUIRE(m.triples.size() == 14);  // perfect: one triple per element
    REQUIRE(feasible_w3dm(red.target, enc));
    REQUIRE(red.is_consistent(enc).consistent);
    REQUIRE(cost_w3dm(red.target, enc) ==
            source_cost(red.source, a) + red.cost_offset());
    REQUIRE(red.decode(m) == a);
    REQUIRE(red.pull_back(enc) == a);
  }

  // a lower medium factor only rescales the constant
  W3dmReduction lean = reduce_mca_w3dm(tri_fixture(), 2);
  REQUIRE(lean.medium_weight() == 22);
  REQUIRE(lean.cost_offset() == Cost(11) * 3 * (14 + 2 * 2 * 1));
  for (const Assignment& a : all_assignments(3, 2))
    REQUIRE(cost_w3dm(lean.target, lean.encode(a)) ==
            source_cost(lean.source, a) + lean.cost_offset());
}

TEST_CASE("splitting a variable's larges makes the matching undecodable") {
  W3dmReduction red = reduce_mca_w3dm(tri_fixture());
  Assignment a{0, 0, 0};
  Matching m = std::get<Matching>(red.encode(a));

  // consolidate in reverse: move one of x1's larges to the other value
  Matching split = detail::rebuild_matching(
      m, red.target.n, {red.layout.large(0, 0, 0)},
      {red.layout.large(0, 1, 0)});
  REQUIRE(feasible_w3dm(red.target, split));  // still a perfect matching
  REQUIRE_FALSE(red.decode(split).has_value());
  auto v = red.is_consistent(split);
  REQUIRE_FALSE(v.consistent);
  REQUIRE_THAT(v.reason, ContainsSubstring("both large triples"));
  REQUIRE(red.pull_back(split) == initial_assignment(red.source));
}

TEST_CASE("move metrics: a reassignment replaces six triples") {
  W3dmReduction red = reduce_mca_w3dm(tri_fixture());
  Assignment a{0, 0, 0}, b{1, 0, 0};
  Matching from = std::get<Matching>(red.encode(a));
  Matching to = std::get<Matching>(red.encode(b));

  detail::MoveMetrics mm =
      detail::matching_move_metrics(from, to, red.target.n);
  // 2 larges + 2 mediums + 2 smalls change for a single variable flip
  REQUIRE(mm.replaced == 6);
  REQUIRE(mm.relocations <= 12);
  detail::MoveMetrics same =
      detail::matching_move_metrics(from, from, red.target.n);
  REQUIRE(same.replaced == 0);
  REQUIRE(same.relocations == 0);
}

TEST_CASE("every catalog emission stays inside the (6,12) neighborhood") {
  W3dmReduction red = reduce_mca_w3dm(tri_fixture());

  for (const Assignment& a : all_assignments(3, 2)) {
    Matching m = std::get<Matching>(red.encode(a));
    int reassigns = 0, total = 0;
    red.catalog_moves(m, [&](const Solution& next, const std::string& desc) {
      const auto& nm = std::get<Matching>(next);
      REQUIRE(feasible_w3dm(red.target, nm));
      detail::MoveMetrics mm =
          detail::matching_move_metrics(m, nm, red.target.n);
      REQUIRE(mm.replaced <= 6);
      REQUIRE(mm.relocations <= 12);
      if (desc.rfind("reassign", 0) == 0) {
        ++reassigns;
        // a reassignment from a standard matching lands on one
        REQUIRE(red.decode(nm).has_value());
      }
      ++total;
      return true;
    });
    // on a standard matching the catalog offers exactly the source's 1-flips
    REQUIRE(reassigns == 3 * (2 - 1));
    REQUIRE(total > reassigns);  // plus builds of the unused gadgets
  }
}

TEST_CASE("catalog fixpoints from the identity start decode to flip optima") {
  for (int r : {2, 3}) {
    for (std::uint64_t seed : {51u, 52u, 53u}) {
      McaInstance src = gen_tricolored_mca(2, r, 2, 9, 0.0, seed);
      W3dmReduction red = reduce_mca_w3dm(src);
      ProblemBinding b = make_catalog_binding(red);

      SearchReport rep = local_search(b, b.initial(), PivotRule::first(),
                                      /*budget=*/100000);
      REQUIRE(rep.terminated == Termination::local_opt);
      auto verdict = red.is_consistent(rep.final);
      INFO("r=" << r << " seed=" << seed << ": " << verdict.reason);
      REQUIRE(verdict.consistent);

      Assignment a = red.pull_back(rep.final);
      REQUIRE(flip_optimal(src, a));
      REQUIRE(rep.final_cost == source_cost(src, a) + red.cost_offset());
    }
  }
}

TEST_CASE("the inventory diagnostic singles out two zeros per variable") {
  InventoryReport rep = w3dm_inventory_report(tri_fixture());
  REQUIRE(rep.lines.size() == 3);
  REQUIRE(rep.lines[0].zeros == 1);
  REQUIRE(rep.lines[0].gap == 2);    // too many elements, matching can't be
  REQUIRE(rep.lines[1].zeros == 2);  // perfect with standard triples alone
  REQUIRE(rep.lines[1].gap == 0);
  REQUIRE(rep.lines[2].zeros == 3);
  REQUIRE(rep.lines[2].gap == -2);
  REQUIRE(rep.chosen == 2);
  REQUIRE_THAT(rep.to_text(), ContainsSubstring("(balanced)"));
  REQUIRE_THAT(rep.to_text(), ContainsSubstring("zeros/var=2"));
}

TEST_CASE("the exact-cover view is the same search in disguise") {
  McaInstance src = gen_tricolored_mca(2, 2, 2, 9, 0.0, 54);
  W3dmReduction w = reduce_mca_w3dm(src);
  X3cReduction x = reduce_mca_x3c(src);

  // band translation round-trips and preserves weights
  Matching m = std::get<Matching>(w.encode(initial_assignment(src)));
  Matching img = matching_to_x3c(m, w.target.n);
  REQUIRE(band_respecting(img, w.target.n));
  REQUIRE(matching_from_x3c(img, w.target.n) == m);
  REQUIRE(cost_x3c(x.target, img) == cost_w3dm(w.target, m));
  REQUIRE(x.cost_offset() == w.cost_offset());

  for (const Assignment& a : all_assignments(3, 2)) {
    Solution enc = x.encode(a);
    REQUIRE(x.is_consistent(enc).consistent);
    REQUIRE(cost_x3c(x.target, enc) ==
            source_cost(src, a) + x.cost_offset());
    REQUIRE(x.pull_back(enc) == a);
  }

  // identical trajectories under the same pivot rule
  ProblemBinding wb = make_catalog_binding(w);
  ProblemBinding xb = make_catalog_binding(x);
  SearchReport wr = local_search(wb, wb.initial(), PivotRule::first());
  SearchReport xr = local_search(xb, xb.initial(), PivotRule::first());
  REQUIRE(wr.steps.size() == xr.steps.size());
  REQUIRE(wr.final_cost == xr.final_cost);
  REQUIRE(x.pull_back(xr.final) == w.pull_back(wr.final));

  // the cover walk refuses a start that ignores the bands
  Matching raw = std::get<Matching>(wb.initial());
  REQUIRE_THROWS_WITH(xb.neighbors(raw, [](const Solution&,
                                           const std::string&) { return true; }),
                      ContainsSubstring("band"));
}
