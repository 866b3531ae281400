#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plslab/error.hpp"
#include "plslab/ints.hpp"
#include "plslab/mca.hpp"  // Sense, improves()
#include "plslab/rng.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// Type-erased hook-up of one problem instance to the search engine.  The
// neighbor stream must enumerate the instance's declared neighborhood
// exhaustively (enumeration caps raise NeighborhoodTooLarge; they never
// truncate silently).
struct ProblemBinding {
  std::string kind;
  Sense sense = Sense::maximize;
  std::function<bool(const Solution&)> feasible;
  std::function<Cost(const Solution&)> cost;
  std::function<void(const Solution&,
                     const std::function<bool(const Solution&,
                                              const std::string&)>&)>
      neighbors;
  std::function<Solution()> initial;
};

enum class PivotKind { first_improvement, best_improvement, random_improvement };

struct PivotRule {
  PivotKind kind = PivotKind::first_improvement;
  std::uint64_t seed = 0;

  static PivotRule first() { return {PivotKind::first_improvement, 0}; }
  static PivotRule best() { return {PivotKind::best_improvement, 0}; }
  static PivotRule random(std::uint64_t seed) {
    return {PivotKind::random_improvement, seed};
  }
};

struct Step {
  std::string move;
  Cost cost;  // cost after the move
};

enum class Termination { local_opt, budget_exhausted };

struct SearchReport {
  Solution start;
  Solution final;
  Cost start_cost;
  Cost final_cost;
  std::vector<Step> steps;
  Termination terminated = Termination::local_opt;
  std::uint64_t neighbors_scanned = 0;
};

struct Witness {
  Solution neighbor;
  Cost cost;
  std::string move;
};

enum class Verdict { locally_optimal, improvable };

struct Certificate {
  Verdict verdict = Verdict::locally_optimal;
  Cost solution_cost;
  std::uint64_t neighborhood_scanned = 0;
  std::optional<Witness> witness;  // first strictly better neighbor
};

namespace detail {

struct Improvement {
  Solution next;
  Cost cost;
  std::string move;
};

// One pivot: scans the neighbor stream under the rule.  first_improvement
// stops at the first strictly better neighbor; best_improvement scans all and
// keeps the best (ties resolved by enumeration order); random_improvement
// reservoir-samples uniformly among improving neighbors.
inline std::optional<Improvement> pick_improvement(const ProblemBinding& b,
                                                   const Solution& s,
                                                   const Cost& base,
                                                   const PivotRule& rule,
                                                   Rng& rng,
                                                   std::uint64_t scan_cap,
                                                   std::uint64_t* scanned_out) {
  std::optional<Improvement> picked;
  std::uint64_t scanned = 0;
  std::uint64_t improving_seen = 0;
  b.neighbors(s, [&](const Solution& cand, const std::string& move) {
    if (++scanned > scan_cap)
      throw NeighborhoodTooLarge(
          "neighborhood too large: scan cap of " + std::to_string(scan_cap) +
          " neighbors exceeded");
    Cost c = b.cost(cand);
    if (!improves(b.sense, c, base)) return true;
    switch (rule.kind) {
      case PivotKind::first_improvement:
        picked = Improvement{cand, std::move(c), move};
        return false;
      case PivotKind::best_improvement:
        if (!picked || improves(b.sense, c, picked->cost))
          picked = Improvement{cand, std::move(c), move};
        return true;
      case PivotKind::random_improvement:
        ++improving_seen;
        if (rand_int(rng, 1, static_cast<long long>(improving_seen)) == 1)
          picked = Improvement{cand, std::move(c), move};
        return true;
    }
    return true;
  });
  if (scanned_out) *scanned_out += scanned;
  return picked;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultScanCap = 20'000'000;

// One improving move under the pivot rule, or nullopt at a local optimum.
// Deterministic for a fixed rule (random_improvement seeds its own stream).
inline std::optional<std::pair<Solution, Step>> improvement_step(
    const ProblemBinding& b, const Solution& s,
    const PivotRule& rule = PivotRule::first(),
    std::uint64_t scan_cap = kDefaultScanCap) {
  if (!b.feasible(s)) throw Error("infeasible start");
  Rng rng = make_rng(rule.seed);
  Cost base = b.cost(s);
  auto best = detail::pick_improvement(b, s, base, rule, rng, scan_cap, nullptr);
  if (!best) return std::nullopt;
  return std::make_pair(best->next, Step{best->move, best->cost});
}

// Iterated improvement until a local optimum or the accepted-move budget runs
// out.  The trajectory is strictly monotone in the binding's sense by
// construction.  With budget 0 the start is still classified (one scan).
inline SearchReport local_search(const ProblemBinding& b, Solution start,
                                 const PivotRule& rule = PivotRule::first(),
                                 std::uint64_t budget = 100000,
                                 std::uint64_t scan_cap = kDefaultScanCap) {
  if (!b.feasible(start)) throw Error("infeasible start");
  SearchReport rep;
  rep.start = start;
  rep.start_cost = b.cost(start);
  Rng rng = make_rng(rule.seed);
  Solution cur = std::move(start);
  Cost cur_cost = rep.start_cost;
  while (true) {
    auto found = detail::pick_improvement(b, cur, cur_cost, rule, rng, scan_cap,
                                          &rep.neighbors_scanned);
    if (!found) {
      rep.terminated = Termination::local_opt;
      break;
    }
    if (rep.steps.size() >= budget) {
      rep.terminated = Termination::budget_exhausted;
      break;
    }
    cur = std::move(found->next);
    cur_cost = std::move(found->cost);
    rep.steps.push_back(Step{std::move(found->move), cur_cost});
  }
  rep.final = std::move(cur);
  rep.final_cost = std::move(cur_cost);
  return rep;
}

// Exhaustive certificate.  Scans the full neighbor stream unless a strictly
// better neighbor appears first (that neighbor is the witness).  A truncated
// scan is impossible: the cap raises instead of passing.
inline Certificate verify_local_optimum(const ProblemBinding& b,
                                        const Solution& s,
                                        std::uint64_t scan_cap = kDefaultScanCap) {
  if (!b.feasible(s)) throw Error("infeasible start");
  Certificate cert;
  cert.solution_cost = b.cost(s);
  b.neighbors(s, [&](const Solution& cand, const std::string& move) {
    if (++cert.neighborhood_scanned > scan_cap)
      throw NeighborhoodTooLarge(
          "neighborhood too large: scan cap of " + std::to_string(scan_cap) +
          " neighbors exceeded");
    Cost c = b.cost(cand);
    if (improves(b.sense, c, cert.solution_cost)) {
      cert.verdict = Verdict::improvable;
      cert.witness = Witness{cand, std::move(c), move};
      return false;
    }
    return true;
  });
  return cert;
}

}  // namespace plslab
