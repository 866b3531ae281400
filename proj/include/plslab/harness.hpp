#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "plslab/engine.hpp"
#include "plslab/greedy.hpp"
#include "plslab/io.hpp"
#include "plslab/mca_gen.hpp"
#include "plslab/reductions.hpp"
#include "plslab/rng.hpp"

namespace plslab {

// One randomized suite run: which construction, how many trials, the size
// cycles the trials walk through, and every knob that affects determinism.
struct ExperimentConfig {
  ReductionId reduction = ReductionId::sp;
  int trials = 100;
  std::vector<int> mca_m = {2, 4, 6};  // tri-colored constraint counts
  std::vector<int> mca_r = {2, 3};     // domain sizes
  std::vector<int> clause_vars = {4, 5, 6};
  std::vector<int> clause_counts = {4, 6, 8, 10};  // capped at the pair count
  int cnf_len = 3;
  long long weight_low = 2;  // staying above 1 keeps every lemma applicable
  long long weight_high = 10;
  double zero_fraction = 0.0;
  std::uint64_t seed = 1;
  PivotRule pivot = PivotRule::first();
  TsScheme ts_scheme = TsScheme::corrected;
  TsSeparation ts_separation = TsSeparation::two_sided;
  int medium_factor = 3;
  std::uint64_t budget = 1'000'000;
  std::uint64_t scan_cap = kDefaultScanCap;
};

inline void validate_config(const ExperimentConfig& cfg) {
  require(cfg.trials >= 1, "trials must be at least 1");
  require(!cfg.mca_m.empty() && !cfg.mca_r.empty() &&
              !cfg.clause_vars.empty() && !cfg.clause_counts.empty(),
          "size cycles must be non-empty");
  require(cfg.cnf_len >= 1, "clause length bound must be positive");
  require(0 <= cfg.weight_low && cfg.weight_low <= cfg.weight_high,
          "weight bounds must satisfy 0 <= low <= high");
  require(cfg.zero_fraction >= 0.0 && cfg.zero_fraction <= 1.0,
          "zero fraction must be a probability");
  require(cfg.budget >= 1 && cfg.scan_cap >= 1, "caps must be positive");
}

inline std::string pivot_name(const PivotRule& p) {
  switch (p.kind) {
    case PivotKind::first_improvement:
      return "first";
    case PivotKind::best_improvement:
      return "best";
    default:
      return "random:" + std::to_string(p.seed);
  }
}

// Verdict values: "pass", "fail", "observed" (failure in a documented
// observation mode), "-" (not checked by this suite).
struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string sizes;
  std::string source_digest;
  std::string reduced_digest;
  std::size_t steps = 0;
  std::string final_cost;
  std::string consistency = "-";
  std::string pullback = "-";
  std::string offset = "-";
  std::string skip_reason;  // non-empty => trial skipped, never passed
  long long wall_ms = 0;
};

struct Counterexample {
  int trial = 0;
  std::string check;   // which verdict failed
  std::string reason;  // human-readable why
  std::string source_text;
  std::string reduced_text;
  std::string solution_text;
};

struct SuiteReport {
  std::string suite;
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  std::vector<Counterexample> counterexamples;
  int passed = 0, failed = 0, skipped = 0, observed = 0;
  long long wall_ms = 0;

  bool ok() const { return failed == 0; }
};

namespace detail {

inline long long ms_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Deterministic source for one trial.  `tiny` restricts sizes so exhaustive
// assignment enumeration stays trivial (offset suite).
inline McaInstance suite_source(const ExperimentConfig& cfg, int trial,
                                std::uint64_t seed, bool tiny,
                                std::string* sizes) {
  SourceFamily fam = reduction_source_family(cfg.reduction);
  std::size_t t = static_cast<std::size_t>(trial);
  if (fam == SourceFamily::mca_max || fam == SourceFamily::mca_min) {
    int m = tiny ? 2 : cfg.mca_m[t % cfg.mca_m.size()];
    int r = cfg.mca_r[(t / (tiny ? 1 : cfg.mca_m.size())) % cfg.mca_r.size()];
    *sizes = "m=" + std::to_string(m) + ",r=" + std::to_string(r);
    return gen_tricolored_mca(m, r, cfg.weight_low, cfg.weight_high,
                              cfg.zero_fraction, seed,
                              fam == SourceFamily::mca_min ? Sense::minimize
                                                           : Sense::maximize);
  }
  int vars = tiny ? 2 + static_cast<int>(t % 3)
                  : cfg.clause_vars[t % cfg.clause_vars.size()];
  int pairs = vars * (vars - 1) / 2;
  int want =
      cfg.clause_counts[(t / cfg.clause_vars.size()) % cfg.clause_counts.size()];
  int clauses = std::min(tiny ? 3 : want, pairs);
  if (fam == SourceFamily::posnae) {
    bool all_pairs = cfg.reduction == ReductionId::ip;
    *sizes = "vars=" + std::to_string(vars) + ",clauses=" +
             std::to_string(all_pairs ? pairs : clauses);
    return gen_posnae(vars, clauses, cfg.weight_high, all_pairs, seed);
  }
  int len = std::min(cfg.cnf_len, vars);
  int cnf_clauses = tiny ? 2 + static_cast<int>(t % 3) : want;
  *sizes = "vars=" + std::to_string(vars) + ",clauses=" +
           std::to_string(cnf_clauses) + ",h=" + std::to_string(len);
  return gen_cnf(vars, cnf_clauses, len, cfg.weight_high, seed);
}

inline ReductionOptions reduction_options(const ExperimentConfig& cfg) {
  ReductionOptions opt;
  opt.ts_scheme = cfg.ts_scheme;
  opt.ts_separation = cfg.ts_separation;
  opt.w3dm_medium_factor = cfg.medium_factor;
  return opt;
}

// TS falsification modes: failures become observations, not build failures.
inline bool observation_mode(const ExperimentConfig& cfg) {
  return cfg.reduction == ReductionId::ts &&
         (cfg.ts_scheme == TsScheme::paper_literal ||
          cfg.ts_separation == TsSeparation::one_sided);
}

inline void count_verdict(SuiteReport& rep, const TrialRecord& tr) {
  if (!tr.skip_reason.empty()) {
    ++rep.skipped;
    return;
  }
  bool failed = tr.consistency == "fail" || tr.pullback == "fail" ||
                tr.offset == "fail";
  bool observed = tr.consistency == "observed" || tr.pullback == "observed" ||
                  tr.offset == "observed";
  if (failed)
    ++rep.failed;
  else if (observed)
    ++rep.observed;
  else
    ++rep.passed;
}

// Shared consistency/pull-back trial loop.
inline SuiteReport run_search_suite(const ExperimentConfig& cfg,
                                    bool check_pullback) {
  validate_config(cfg);
  SuiteReport rep;
  rep.suite = check_pullback ? "pullback" : "consistency";
  rep.config = cfg;
  auto t0 = std::chrono::steady_clock::now();
  bool observe = observation_mode(cfg);

  for (int t = 0; t < cfg.trials; ++t) {
    auto trial0 = std::chrono::steady_clock::now();
    TrialRecord tr;
    tr.index = t;
    tr.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    McaInstance src = suite_source(cfg, t, tr.seed, false, &tr.sizes);
    tr.source_digest = instance_digest(AnyInstance(src));
    ReductionOutput red =
        run_reduction(cfg.reduction, src, reduction_options(cfg));
    AnyInstance target = reduction_target(red);
    tr.reduced_digest = instance_digest(target);

    PivotRule pivot = cfg.pivot;
    if (pivot.kind == PivotKind::random_improvement)
      pivot.seed = derive_seed(tr.seed, 0x9e);
    ProblemBinding binding = make_reduced_binding(red);
    try {
      SearchReport search = local_search(binding, binding.initial(), pivot,
                                         cfg.budget, cfg.scan_cap);
      tr.steps = search.steps.size();
      tr.final_cost = search.final_cost.str();
      if (search.terminated == Termination::budget_exhausted) {
        tr.skip_reason = "budget_exhausted";
      } else {
        ConsistencyVerdict cv = is_consistent(red, search.final);
        tr.consistency = cv.consistent ? "pass" : observe ? "observed" : "fail";
        std::string reason = cv.reason;
        bool dump = !cv.consistent;
        if (check_pullback) {
          Assignment back = pull_back(red, search.final);
          bool opt = is_local_opt_source(src, back);
          tr.pullback = opt ? "pass" : observe ? "observed" : "fail";
          if (!opt) {
            dump = true;
            if (!reason.empty()) reason += "; ";
            reason += "pulled-back assignment admits an improving flip";
          }
        }
        if (dump) {
          Counterexample ce;
          ce.trial = t;
          ce.check = tr.consistency != "pass" ? "consistency" : "pullback";
          if (observe) ce.check += " (observation mode)";
          ce.reason = reason;
          ce.source_text = serialize_instance(AnyInstance(src));
          ce.reduced_text = serialize_reduction(red);
          ce.solution_text = serialize_solution(search.final);
          rep.counterexamples.push_back(std::move(ce));
        }
      }
    } catch (const NeighborhoodTooLarge& e) {
      tr.skip_reason = std::string("scan_cap: ") + e.what();
    }
    tr.wall_ms = ms_since(trial0);
    count_verdict(rep, tr);
    rep.trials.push_back(std::move(tr));
  }
  rep.wall_ms = ms_since(t0);
  return rep;
}

}  // namespace detail

inline SuiteReport run_consistency_suite(const ExperimentConfig& cfg) {
  return detail::run_search_suite(cfg, false);
}

inline SuiteReport run_pullback_suite(const ExperimentConfig& cfg) {
  return detail::run_search_suite(cfg, true);
}

// Exhaustive affine-offset identity on tiny sources: for every assignment,
// the encoded solution is consistent and costs source + offset, exactly.
inline SuiteReport run_offset_suite(const ExperimentConfig& cfg) {
  validate_config(cfg);
  if (cfg.reduction == ReductionId::ts) {
    require(cfg.ts_scheme == TsScheme::corrected,
            "the literal scheme has no affine correspondence to verify");
    require(cfg.ts_separation == TsSeparation::two_sided,
            "one-sided separation has no affine correspondence to verify");
  }
  SuiteReport rep;
  rep.suite = "offset";
  rep.config = cfg;
  auto t0 = std::chrono::steady_clock::now();

  for (int t = 0; t < cfg.trials; ++t) {
    auto trial0 = std::chrono::steady_clock::now();
    TrialRecord tr;
    tr.index = t;
    tr.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    McaInstance src = detail::suite_source(cfg, t, tr.seed, true, &tr.sizes);
    tr.source_digest = instance_digest(AnyInstance(src));
    ReductionOutput red =
        run_reduction(cfg.reduction, src, detail::reduction_options(cfg));
    AnyInstance target = reduction_target(red);
    tr.reduced_digest = instance_digest(target);
    ProblemBinding binding = make_binding(target);
    Cost off = cost_offset(red);

    long long total = 1;
    for (int v = 0; v < src.num_vars; ++v) total *= src.domain_size;
    tr.offset = "pass";
    for (long long x = 0; x < total && tr.offset == "pass"; ++x) {
      Assignment a(static_cast<std::size_t>(src.num_vars));
      long long rest = x;
      for (int v = 0; v < src.num_vars; ++v) {
        a[static_cast<std::size_t>(v)] =
            static_cast<int>(rest % src.domain_size);
        rest /= src.domain_size;
      }
      Solution enc = encode_assignment(red, a);
      std::string why;
      if (!binding.feasible(enc))
        why = "encoded solution infeasible";
      else if (!is_consistent(red, enc).consistent)
        why = "encoded solution inconsistent";
      else if (binding.cost(enc) != source_cost(src, a) + off)
        why = "cost identity broken: target " + binding.cost(enc).str() +
              " != source " + source_cost(src, a).str() + " + offset " +
              off.str();
      if (!why.empty()) {
        tr.offset = "fail";
        Counterexample ce;
        ce.trial = t;
        ce.check = "offset";
        ce.reason = why + " at assignment index " + std::to_string(x);
        ce.source_text = serialize_instance(AnyInstance(src));
        ce.reduced_text = serialize_reduction(red);
        ce.solution_text = serialize_solution(enc);
        rep.counterexamples.push_back(std::move(ce));
      }
    }
    tr.wall_ms = detail::ms_since(trial0);
    detail::count_verdict(rep, tr);
    rep.trials.push_back(std::move(tr));
  }
  rep.wall_ms = detail::ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Greedy certification suite (packing for SP, cover removal for SC)
// ---------------------------------------------------------------------------

inline SpInstance random_sp_instance(Rng& rng) {
  SpInstance inst;
  inst.col.ground_size = static_cast<int>(rand_int(rng, 4, 12));
  int sets = static_cast<int>(rand_int(rng, 3, 10));
  for (int i = 0; i < sets; ++i) {
    int size = static_cast<int>(rand_int(rng, 1, 4));
    std::vector<int> elems;
    for (int j = 0; j < size; ++j)
      elems.push_back(
          static_cast<int>(rand_int(rng, 0, inst.col.ground_size - 1)));
    inst.col.sets.push_back(make_set(std::move(elems)));
    inst.col.weights.push_back(rand_int(rng, 0, 12));  // ties and zeros occur
  }
  inst.max_chosen = static_cast<int>(rand_int(rng, 1, sets));
  return inst;
}

inline ScInstance random_sc_instance(Rng& rng) {
  ScInstance inst;
  inst.col.ground_size = static_cast<int>(rand_int(rng, 4, 12));
  int sets = static_cast<int>(rand_int(rng, 3, 9));
  std::vector<char> covered(static_cast<std::size_t>(inst.col.ground_size), 0);
  for (int i = 0; i < sets; ++i) {
    int size = static_cast<int>(rand_int(rng, 1, 4));
    std::vector<int> elems;
    for (int j = 0; j < size; ++j)
      elems.push_back(
          static_cast<int>(rand_int(rng, 0, inst.col.ground_size - 1)));
    ElemSet s = make_set(std::move(elems));
    for (int e : s) covered[static_cast<std::size_t>(e)] = 1;
    inst.col.sets.push_back(std::move(s));
    inst.col.weights.push_back(rand_int(rng, 0, 12));
  }
  ElemSet rest;
  for (int e = 0; e < inst.col.ground_size; ++e)
    if (!covered[static_cast<std::size_t>(e)]) rest.push_back(e);
  if (!rest.empty()) {  // keep the full collection a cover
    inst.col.sets.push_back(std::move(rest));
    inst.col.weights.push_back(rand_int(rng, 0, 12));
  }
  return inst;
}

// cfg.reduction picks the algorithm: sp -> greedy packing, sc -> greedy
// cover.  Every output is certified by an exhaustive 1-differ scan.
inline SuiteReport run_greedy_suite(const ExperimentConfig& cfg) {
  validate_config(cfg);
  require(cfg.reduction == ReductionId::sp || cfg.reduction == ReductionId::sc,
          "greedy certification covers set packing and set cover");
  bool packing = cfg.reduction == ReductionId::sp;
  SuiteReport rep;
  rep.suite = packing ? "greedy-packing" : "greedy-cover";
  rep.config = cfg;
  auto t0 = std::chrono::steady_clock::now();

  BindingOptions opt;
  opt.k = 1;
  for (int t = 0; t < cfg.trials; ++t) {
    auto trial0 = std::chrono::steady_clock::now();
    TrialRecord tr;
    tr.index = t;
    tr.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    Rng rng = make_rng(tr.seed);
    AnyInstance inst;
    Solution sol;
    if (packing) {
      SpInstance sp = random_sp_instance(rng);
      sol = greedy_packing(sp);
      inst = std::move(sp);
    } else {
      ScInstance sc = random_sc_instance(rng);
      sol = greedy_cover(sc);
      inst = std::move(sc);
    }
    tr.source_digest = instance_digest(inst);
    tr.sizes = "sets=" +
               std::to_string(std::visit(
                   [](const auto& i) {
                     if constexpr (requires { i.col; })
                       return i.col.num_sets();
                     else
                       return 0;
                   },
                   inst));
    ProblemBinding binding = make_binding(inst, opt);
    Certificate cert = verify_local_optimum(binding, sol, cfg.scan_cap);
    tr.final_cost = cert.solution_cost.str();
    tr.consistency = cert.verdict == Verdict::locally_optimal ? "pass" : "fail";
    if (cert.verdict != Verdict::locally_optimal) {
      Counterexample ce;
      ce.trial = t;
      ce.check = "greedy";
      ce.reason = "greedy output admits improving move " +
                  (cert.witness ? cert.witness->move : std::string("?"));
      ce.source_text = serialize_instance(inst);
      ce.solution_text = serialize_solution(sol);
      rep.counterexamples.push_back(std::move(ce));
    }
    tr.wall_ms = detail::ms_since(trial0);
    detail::count_verdict(rep, tr);
    rep.trials.push_back(std::move(tr));
  }
  rep.wall_ms = detail::ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Report rendering.  Wall-time fields are the only nondeterministic content;
// rendering with include_timing = false is byte-stable for equal configs.
// ---------------------------------------------------------------------------

inline std::string render_config(const ExperimentConfig& cfg) {
  auto cycle = [](const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
      out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
  };
  std::string out;
  out += "reduction " + std::string(reduction_name(cfg.reduction)) + '\n';
  out += "trials " + std::to_string(cfg.trials) + '\n';
  out += "seed " + std::to_string(cfg.seed) + '\n';
  out += "pivot " + pivot_name(cfg.pivot) + '\n';
  out += "sizes-mca m=" + cycle(cfg.mca_m) + " r=" + cycle(cfg.mca_r) + '\n';
  out += "sizes-clauses vars=" + cycle(cfg.clause_vars) +
         " clauses=" + cycle(cfg.clause_counts) +
         " h=" + std::to_string(cfg.cnf_len) + '\n';
  out += "weights [" + std::to_string(cfg.weight_low) + "," +
         std::to_string(cfg.weight_high) +
         "] zero-fraction " + std::to_string(cfg.zero_fraction) + '\n';
  out += std::string("ts-scheme ") +
         (cfg.ts_scheme == TsScheme::corrected ? "corrected" : "paper-literal") +
         '\n';
  out += std::string("ts-separation ") +
         (cfg.ts_separation == TsSeparation::two_sided ? "two-sided"
                                                       : "one-sided") +
         '\n';
  out += "medium-factor " + std::to_string(cfg.medium_factor) + '\n';
  out += "budget " + std::to_string(cfg.budget) + '\n';
  out += "scan-cap " + std::to_string(cfg.scan_cap) + '\n';
  return out;
}

inline std::string report_text(const SuiteReport& rep,
                               bool include_timing = true) {
  std::string out = "suite " + rep.suite + '\n';
  out += render_config(rep.config);
  for (const TrialRecord& tr : rep.trials) {
    out += "trial " + std::to_string(tr.index) + " seed " +
           std::to_string(tr.seed) + ' ' + tr.sizes + " source " +
           tr.source_digest;
    if (!tr.reduced_digest.empty()) out += " reduced " + tr.reduced_digest;
    out += " steps " + std::to_string(tr.steps);
    if (!tr.final_cost.empty()) out += " cost " + tr.final_cost;
    out += " consistency " + tr.consistency + " pullback " + tr.pullback +
           " offset " + tr.offset;
    if (!tr.skip_reason.empty()) out += " skip " + tr.skip_reason;
    if (include_timing) out += " wall-ms " + std::to_string(tr.wall_ms);
    out += '\n';
  }
  for (const Counterexample& ce : rep.counterexamples) {
    out += "counterexample trial " + std::to_string(ce.trial) + " check " +
           ce.check + '\n';
    out += "reason " + ce.reason + '\n';
    out += "begin source\n" + ce.source_text + "end source\n";
    if (!ce.reduced_text.empty())
      out += "begin reduced\n" + ce.reduced_text + "end reduced\n";
    out += "begin solution\n" + ce.solution_text + "end solution\n";
  }
  out += "summary passed " + std::to_string(rep.passed) + " failed " +
         std::to_string(rep.failed) + " skipped " +
         std::to_string(rep.skipped) + " observed " +
         std::to_string(rep.observed) + '\n';
  if (include_timing) out += "wall-ms " + std::to_string(rep.wall_ms) + '\n';
  return out;
}

inline nlohmann::json report_json(const SuiteReport& rep,
                                  bool include_timing = true) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["config"] = {
      {"reduction", reduction_name(rep.config.reduction)},
      {"trials", rep.config.trials},
      {"seed", rep.config.seed},
      {"pivot", pivot_name(rep.config.pivot)},
      {"mca_m", rep.config.mca_m},
      {"mca_r", rep.config.mca_r},
      {"clause_vars", rep.config.clause_vars},
      {"clause_counts", rep.config.clause_counts},
      {"cnf_len", rep.config.cnf_len},
      {"weight_low", rep.config.weight_low},
      {"weight_high", rep.config.weight_high},
      {"zero_fraction", rep.config.zero_fraction},
      {"ts_scheme",
       rep.config.ts_scheme == TsScheme::corrected ? "corrected"
                                                   : "paper-literal"},
      {"ts_separation",
       rep.config.ts_separation == TsSeparation::two_sided ? "two-sided"
                                                           : "one-sided"},
      {"medium_factor", rep.config.medium_factor},
      {"budget", rep.config.budget},
      {"scan_cap", rep.config.scan_cap},
  };
  j["trials"] = nlohmann::json::array();
  for (const TrialRecord& tr : rep.trials) {
    nlohmann::json t = {
        {"index", tr.index},       {"seed", tr.seed},
        {"sizes", tr.sizes},       {"source_digest", tr.source_digest},
        {"steps", tr.steps},       {"final_cost", tr.final_cost},
        {"consistency", tr.consistency},
        {"pullback", tr.pullback}, {"offset", tr.offset},
    };
    if (!tr.reduced_digest.empty()) t["reduced_digest"] = tr.reduced_digest;
    if (!tr.skip_reason.empty()) t["skip_reason"] = tr.skip_reason;
    if (include_timing) t["wall_ms"] = tr.wall_ms;
    j["trials"].push_back(std::move(t));
  }
  j["counterexamples"] = nlohmann::json::array();
  for (const Counterexample& ce : rep.counterexamples)
    j["counterexamples"].push_back({{"trial", ce.trial},
                                    {"check", ce.check},
                                    {"reason", ce.reason},
                                    {"source", ce.source_text},
                                    {"reduced", ce.reduced_text},
                                    {"solution", ce.solution_text}});
  j["summary"] = {{"passed", rep.passed},
                  {"failed", rep.failed},
                  {"skipped", rep.skipped},
                  {"observed", rep.observed}};
  if (include_timing) j["summary"]["wall_ms"] = rep.wall_ms;
  return j;
}

}  // namespace plslab
