// Command-line front end: generate sources, apply constructions, run local
// search, certify optima, and drive the randomized verification suites.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict (improvable
// solution, failing suite), 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plslab/harness.hpp"

namespace {

using namespace plslab;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

ReductionId require_reduction(const std::string& name) {
  std::optional<ReductionId> id = parse_reduction(name);
  if (!id) throw Error("unknown construction: " + name);
  return *id;
}

PivotRule parse_pivot(const std::string& name, std::uint64_t seed) {
  if (name == "first") return PivotRule::first();
  if (name == "best") return PivotRule::best();
  if (name == "random") return PivotRule::random(seed);
  throw Error("unknown pivot rule: " + name);
}

TsScheme parse_scheme(const std::string& name) {
  if (name == "corrected") return TsScheme::corrected;
  if (name == "paper-literal") return TsScheme::paper_literal;
  throw Error("unknown scheme: " + name);
}

TsSeparation parse_separation(const std::string& name) {
  if (name == "two-sided") return TsSeparation::two_sided;
  if (name == "one-sided") return TsSeparation::one_sided;
  throw Error("unknown separation: " + name);
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string problem = "mca";
  int m = 2, r = 2;
  int vars = 4, clauses = 4, len = 3;
  bool all_pairs = false;
  long long weight_low = 2, weight_high = 10;
  double zero_fraction = 0.0;
  std::uint64_t seed = 1;
  std::string output;
};

int run_gen(const GenArgs& a) {
  McaInstance inst;
  if (a.problem == "mca" || a.problem == "minca") {
    inst = gen_tricolored_mca(a.m, a.r, a.weight_low, a.weight_high,
                              a.zero_fraction, a.seed,
                              a.problem == "minca" ? Sense::minimize
                                                   : Sense::maximize);
  } else if (a.problem == "posnae") {
    inst = gen_posnae(a.vars, a.clauses, a.weight_high, a.all_pairs, a.seed);
  } else if (a.problem == "cnf") {
    inst = gen_cnf(a.vars, a.clauses, a.len, a.weight_high, a.seed);
  } else {
    throw Error("unknown problem: " + a.problem);
  }
  spill(a.output, serialize_instance(AnyInstance(inst)));
  return 0;
}

// --- reduce ------------------------------------------------------------------

struct ReduceArgs {
  std::string from, to = "sp", output;
  std::string scheme = "corrected", separation = "two-sided";
  int medium_factor = 3;
};

// cost_offset throws for the literal scheme; the CLI reports "-" instead.
std::string cost_offset_or_dash(const ReductionOutput& red) {
  try {
    return to_string(cost_offset(red));
  } catch (const Error&) {
    return "-";
  }
}

int run_reduce(const ReduceArgs& a) {
  ParsedFile pf = parse_file(slurp(a.from));
  const McaInstance* src = std::get_if<McaInstance>(&pf.instance);
  if (!src) throw Error("reduce expects a constraint/clause source instance");
  ReductionOptions opt;
  opt.ts_scheme = parse_scheme(a.scheme);
  opt.ts_separation = parse_separation(a.separation);
  opt.w3dm_medium_factor = a.medium_factor;
  ReductionOutput red = run_reduction(require_reduction(a.to), *src, opt);
  spill(a.output, serialize_reduction(red));
  std::cerr << "offset " << cost_offset_or_dash(red) << '\n';
  return 0;
}

// --- reconstruction -----------------------------------------------------------

// Re-derives the construction a reduced file came from (named by its meta
// lines) and cross-checks both digests, so every downstream step provably
// talks about the same pair of instances.
ReductionOutput rebuild_reduction(const ParsedFile& sf, const ParsedFile& rf,
                                  ReductionOptions opt) {
  const McaInstance* src = std::get_if<McaInstance>(&sf.instance);
  if (!src) throw Error("the source must be a constraint/clause instance");
  auto it = rf.meta.find("reduction");
  if (it == rf.meta.end())
    throw Error("reduced file carries no reduction meta line");
  if (auto s = rf.meta.find("scheme"); s != rf.meta.end())
    opt.ts_scheme = parse_scheme(s->second);
  if (auto m = rf.meta.find("medium-factor"); m != rf.meta.end())
    opt.w3dm_medium_factor = std::stoi(m->second);
  ReductionOutput red = run_reduction(require_reduction(it->second), *src, opt);
  // The reduced file must be the construction applied to this very source.
  std::string expect = instance_digest(reduction_target(red));
  std::string got = instance_digest(rf.instance);
  if (expect != got)
    throw Error("reduced file does not match the source under " + it->second +
                " (digest " + got + ", expected " + expect + ")");
  if (auto d = rf.meta.find("source-digest"); d != rf.meta.end())
    if (d->second != instance_digest(sf.instance))
      throw Error("source-digest meta does not match the given source");
  return red;
}

// --- solve -------------------------------------------------------------------

struct SolveArgs {
  std::string file, source, algo = "local-search", pivot = "first", output;
  std::uint64_t pivot_seed = 0;
  int k = 1;
  std::uint64_t budget = 1'000'000;
  std::uint64_t scan_cap = kDefaultScanCap;
  bool trace = false;
};

int run_solve(const SolveArgs& a) {
  ParsedFile pf = parse_file(slurp(a.file));
  if (a.algo == "greedy-packing") {
    const SpInstance* sp = std::get_if<SpInstance>(&pf.instance);
    if (!sp) throw Error("greedy-packing needs a packing instance");
    Solution sol = greedy_packing(*sp);
    std::cerr << "cost " << to_string(cost_sp(*sp, std::get<CollectionSubset>(sol)))
              << '\n';
    spill(a.output, serialize_solution(sol));
    return 0;
  }
  if (a.algo == "greedy-cover") {
    const ScInstance* sc = std::get_if<ScInstance>(&pf.instance);
    if (!sc) throw Error("greedy-cover needs a cover instance");
    Solution sol = greedy_cover(*sc);
    std::cerr << "cost " << to_string(cost_sc(*sc, std::get<CollectionSubset>(sol)))
              << '\n';
    spill(a.output, serialize_solution(sol));
    return 0;
  }
  if (a.algo != "local-search") throw Error("unknown algorithm: " + a.algo);
  ProblemBinding binding;
  if (a.source.empty()) {
    BindingOptions bo;
    bo.k = a.k;
    binding = make_binding(pf.instance, bo);
  } else {
    ParsedFile sf = parse_file(slurp(a.source));
    binding = make_reduced_binding(rebuild_reduction(sf, pf, {}));
  }
  SearchReport rep = local_search(binding, binding.initial(),
                                  parse_pivot(a.pivot, a.pivot_seed), a.budget,
                                  a.scan_cap);
  if (a.trace)
    for (const Step& s : rep.steps)
      std::cerr << "step " << s.move << " -> " << to_string(s.cost) << '\n';
  std::cerr << "start " << to_string(rep.start_cost) << " final "
            << to_string(rep.final_cost) << " steps " << rep.steps.size()
            << " scanned " << rep.neighbors_scanned << " termination "
            << (rep.terminated == Termination::local_opt ? "local-opt"
                                                         : "budget")
            << '\n';
  spill(a.output, serialize_solution(rep.final));
  return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string file, solution, source;
  int k = 1;
  std::uint64_t scan_cap = kDefaultScanCap;
};

int run_verify(const VerifyArgs& a) {
  ParsedFile pf = parse_file(slurp(a.file));
  Solution sol = parse_solution(slurp(a.solution));
  ProblemBinding binding;
  if (a.source.empty()) {
    BindingOptions bo;
    bo.k = a.k;
    binding = make_binding(pf.instance, bo);
  } else {
    ParsedFile sf = parse_file(slurp(a.source));
    binding = make_reduced_binding(rebuild_reduction(sf, pf, {}));
  }
  Certificate cert = verify_local_optimum(binding, sol, a.scan_cap);
  std::cout << "cost " << to_string(cert.solution_cost) << " scanned "
            << cert.neighborhood_scanned << '\n';
  if (cert.verdict == Verdict::locally_optimal) {
    std::cout << "locally-optimal\n";
    return 0;
  }
  std::cout << "improvable by " << cert.witness->move << " -> "
            << to_string(cert.witness->cost) << '\n';
  return 1;
}

// --- pullback ----------------------------------------------------------------

struct PullbackArgs {
  std::string source, reduced, solution;
  std::string scheme = "corrected", separation = "two-sided";
  int medium_factor = 3;
};

int run_pullback(const PullbackArgs& a) {
  ParsedFile sf = parse_file(slurp(a.source));
  ParsedFile rf = parse_file(slurp(a.reduced));
  ReductionOptions opt;
  opt.ts_scheme = parse_scheme(a.scheme);
  opt.ts_separation = parse_separation(a.separation);
  opt.w3dm_medium_factor = a.medium_factor;
  ReductionOutput red = rebuild_reduction(sf, rf, opt);
  const McaInstance& src = reduction_source(red);

  Solution sol = parse_solution(slurp(a.solution));
  ConsistencyVerdict cv = is_consistent(red, sol);
  Assignment back = pull_back(red, sol);
  std::cout << "consistent " << (cv.consistent ? "yes" : "no");
  if (!cv.consistent) std::cout << " (" << cv.reason << ")";
  std::cout << '\n';
  std::cout << "assignment";
  for (int v : back) std::cout << ' ' << v;
  std::cout << '\n';
  std::cout << "source-cost " << to_string(source_cost(src, back)) << '\n';
  bool opt1 = is_local_opt_source(src, back);
  std::cout << (opt1 ? "flip-optimal" : "flip-improvable") << '\n';
  return opt1 ? 0 : 1;
}

// --- suite -------------------------------------------------------------------

struct SuiteArgs {
  std::string reduction = "sp", check = "pullback";
  int trials = 100;
  std::uint64_t seed = 1;
  std::string pivot = "first";
  std::uint64_t pivot_seed = 0;
  std::string scheme = "corrected", separation = "two-sided";
  int medium_factor = 3;
  std::uint64_t budget = 1'000'000;
  std::uint64_t scan_cap = kDefaultScanCap;
  std::string report;
  bool json = false;
  bool no_timing = false;
};

int run_suite(const SuiteArgs& a) {
  ExperimentConfig cfg;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.pivot = parse_pivot(a.pivot, a.pivot_seed);
  cfg.ts_scheme = parse_scheme(a.scheme);
  cfg.ts_separation = parse_separation(a.separation);
  cfg.medium_factor = a.medium_factor;
  cfg.budget = a.budget;
  cfg.scan_cap = a.scan_cap;

  SuiteReport rep;
  if (a.reduction == "greedy-packing" || a.reduction == "greedy-cover") {
    cfg.reduction = a.reduction == "greedy-packing" ? ReductionId::sp
                                                    : ReductionId::sc;
    rep = run_greedy_suite(cfg);
  } else {
    cfg.reduction = require_reduction(a.reduction);
    if (a.check == "consistency")
      rep = run_consistency_suite(cfg);
    else if (a.check == "pullback")
      rep = run_pullback_suite(cfg);
    else if (a.check == "offset")
      rep = run_offset_suite(cfg);
    else
      throw Error("unknown check: " + a.check);
  }
  std::string text = a.json ? report_json(rep, !a.no_timing).dump(2) + "\n"
                            : report_text(rep, !a.no_timing);
  spill(a.report, text);
  if (!a.report.empty() && a.report != "-")
    std::cerr << "summary passed " << rep.passed << " failed " << rep.failed
              << " skipped " << rep.skipped << " observed " << rep.observed
              << '\n';
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-search laboratory for weighted set problems"};
  app.require_subcommand(1);

  GenArgs g;
  CLI::App* gen = app.add_subcommand("gen", "generate a source instance");
  gen->add_option("--problem", g.problem, "mca|minca|posnae|cnf");
  gen->add_option("--m", g.m, "constraint count (mca, even)");
  gen->add_option("--r", g.r, "domain size (mca)");
  gen->add_option("--vars", g.vars, "variable count (posnae/cnf)");
  gen->add_option("--clauses", g.clauses, "clause count (posnae/cnf)");
  gen->add_option("--len", g.len, "max clause length (cnf)");
  gen->add_flag("--all-pairs", g.all_pairs, "posnae: one clause per pair");
  gen->add_option("--weight-low", g.weight_low, "minimum table weight (mca)");
  gen->add_option("--weight-high", g.weight_high, "maximum weight");
  gen->add_option("--zero-fraction", g.zero_fraction,
                  "probability of zeroed table entries (mca)");
  gen->add_option("--seed", g.seed, "generator seed");
  gen->add_option("-o,--output", g.output, "output path (default stdout)");

  ReduceArgs r;
  CLI::App* red = app.add_subcommand("reduce", "apply a construction");
  red->add_option("--from", r.from, "source instance file")->required();
  red->add_option("--to", r.to, "sp|ssp|sc|ts|sb|hs|ip|cc|w3dm|x3c");
  red->add_option("--scheme", r.scheme, "ts: corrected|paper-literal");
  red->add_option("--separation", r.separation, "ts: two-sided|one-sided");
  red->add_option("--medium-factor", r.medium_factor,
                  "w3dm/x3c: medium gadget weight multiplier (2..6)");
  red->add_option("-o,--output", r.output, "output path (default stdout)");

  SolveArgs s;
  CLI::App* sol = app.add_subcommand("solve", "run a solver on an instance");
  sol->add_option("--file", s.file, "instance file")->required();
  sol->add_option("--source", s.source,
                  "source of a reduced --file: search the construction's own "
                  "neighborhood (catalog moves for matchings; overrides --k)");
  sol->add_option("--algo", s.algo,
                  "local-search|greedy-packing|greedy-cover");
  sol->add_option("--pivot", s.pivot, "first|best|random");
  sol->add_option("--pivot-seed", s.pivot_seed, "seed for random pivot");
  sol->add_option("--k", s.k, "k-differ radius for set problems");
  sol->add_option("--budget", s.budget, "max accepted moves");
  sol->add_option("--scan-cap", s.scan_cap, "max neighbors per scan");
  sol->add_flag("--trace", s.trace, "print every accepted move");
  sol->add_option("-o,--output", s.output, "solution path (default stdout)");

  VerifyArgs v;
  CLI::App* ver = app.add_subcommand("verify", "certify a local optimum");
  ver->add_option("--file", v.file, "instance file")->required();
  ver->add_option("--solution", v.solution, "solution file")->required();
  ver->add_option("--source", v.source,
                  "source of a reduced --file: certify against the "
                  "construction's own neighborhood (overrides --k)");
  ver->add_option("--k", v.k, "k-differ radius for set problems");
  ver->add_option("--scan-cap", v.scan_cap, "max neighbors scanned");

  PullbackArgs p;
  CLI::App* pb = app.add_subcommand(
      "pullback", "map a reduced solution back to the source");
  pb->add_option("--source", p.source, "source instance file")->required();
  pb->add_option("--reduced", p.reduced, "reduced instance file")->required();
  pb->add_option("--solution", p.solution, "reduced solution file")
      ->required();
  pb->add_option("--scheme", p.scheme, "ts scheme override");
  pb->add_option("--separation", p.separation, "ts separation override");
  pb->add_option("--medium-factor", p.medium_factor, "w3dm override");

  SuiteArgs u;
  CLI::App* su = app.add_subcommand("suite", "run a randomized suite");
  su->add_option("--reduction", u.reduction,
                 "construction tag, greedy-packing, or greedy-cover");
  su->add_option("--check", u.check, "consistency|pullback|offset");
  su->add_option("--trials", u.trials, "trial count");
  su->add_option("--seed", u.seed, "master seed");
  su->add_option("--pivot", u.pivot, "first|best|random");
  su->add_option("--pivot-seed", u.pivot_seed, "seed for random pivot");
  su->add_option("--scheme", u.scheme, "ts: corrected|paper-literal");
  su->add_option("--separation", u.separation, "ts: two-sided|one-sided");
  su->add_option("--medium-factor", u.medium_factor, "w3dm multiplier");
  su->add_option("--budget", u.budget, "max accepted moves per trial");
  su->add_option("--scan-cap", u.scan_cap, "max neighbors per scan");
  su->add_option("--report", u.report, "report path (default stdout)");
  su->add_flag("--json", u.json, "emit the report as JSON");
  su->add_flag("--no-timing", u.no_timing, "omit wall-time fields");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return run_gen(g);
    if (*red) return run_reduce(r);
    if (*sol) return run_solve(s);
    if (*ver) return run_verify(v);
    if (*pb) return run_pullback(p);
    if (*su) return run_suite(u);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
