// Experiment suites: deterministic reports, replayable counterexamples,
// skip semantics, and the documented observation modes.

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "plslab/harness.hpp"
#include "plslab/io.hpp"

using namespace plslab;
using Catch::Matchers::ContainsSubstring;

namespace {

ExperimentConfig small_config(ReductionId id) {
  ExperimentConfig cfg;
  cfg.reduction = id;
  cfg.trials = 6;
  cfg.mca_m = {2};
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST_CASE("suite reruns are byte-identical once timing is masked") {
  ExperimentConfig cfg = small_config(ReductionId::sp);
  SuiteReport a = run_pullback_suite(cfg);
  SuiteReport b = run_pullback_suite(cfg);

  REQUIRE(a.ok());
  REQUIRE(a.passed == cfg.trials);
  REQUIRE(report_text(a, false) == report_text(b, false));
  REQUIRE(report_json(a, false).dump(2) == report_json(b, false).dump(2));

  // timing fields are the only nondeterminism the rendering admits
  REQUIRE_THAT(report_text(a, true), ContainsSubstring("wall-ms"));
  REQUIRE_THAT(report_text(a, false), !ContainsSubstring("wall-ms"));
}

TEST_CASE("consistency and pull-back suites pass across every construction") {
  for (ReductionId id :
       {ReductionId::sc, ReductionId::ssp, ReductionId::ts, ReductionId::sb,
        ReductionId::hs, ReductionId::ip, ReductionId::cc, ReductionId::w3dm,
        ReductionId::x3c}) {
    ExperimentConfig cfg = small_config(id);
    cfg.trials = 4;
    SuiteReport rep = run_pullback_suite(cfg);
    INFO(report_text(rep, false));
    REQUIRE(rep.ok());
    REQUIRE(rep.failed == 0);
    REQUIRE(rep.passed + rep.skipped == cfg.trials);
  }
}

TEST_CASE("the literal test-set scheme is observed, not failed") {
  ExperimentConfig cfg = small_config(ReductionId::ts);
  cfg.ts_scheme = TsScheme::paper_literal;
  SuiteReport rep = run_pullback_suite(cfg);

  REQUIRE(rep.ok());  // observations never fail the build
  REQUIRE(rep.failed == 0);
  REQUIRE(rep.observed >= 1);  // the dominance argument actually breaks
  REQUIRE(rep.observed + rep.passed == cfg.trials);
  REQUIRE_FALSE(rep.counterexamples.empty());
  REQUIRE_THAT(rep.counterexamples.front().check,
               ContainsSubstring("observation mode"));
}

TEST_CASE("recorded counterexamples replay from their embedded text") {
  ExperimentConfig cfg = small_config(ReductionId::ts);
  cfg.ts_scheme = TsScheme::paper_literal;
  SuiteReport rep = run_pullback_suite(cfg);
  REQUIRE_FALSE(rep.counterexamples.empty());

  for (const Counterexample& ce : rep.counterexamples) {
    AnyInstance src = parse_instance(ce.source_text);
    REQUIRE(instance_digest(src) ==
            rep.trials[static_cast<std::size_t>(ce.trial)].source_digest);

    ParsedFile reduced = parse_file(ce.reduced_text);
    REQUIRE(reduced.meta.at("reduction") == "ts");
    REQUIRE(reduced.meta.at("scheme") == "paper-literal");
    REQUIRE(reduced.meta.at("source-digest") == instance_digest(src));
    REQUIRE(instance_digest(reduced.instance) ==
            rep.trials[static_cast<std::size_t>(ce.trial)].reduced_digest);

    Solution sol = parse_solution(ce.solution_text);
    REQUIRE(std::holds_alternative<CollectionSubset>(sol));
  }
}

TEST_CASE("a tight scan cap skips trials rather than failing them") {
  ExperimentConfig cfg = small_config(ReductionId::sp);
  cfg.scan_cap = 40;
  SuiteReport rep = run_consistency_suite(cfg);
  REQUIRE(rep.ok());
  REQUIRE(rep.skipped == cfg.trials);
  REQUIRE(rep.passed == 0);
  for (const TrialRecord& tr : rep.trials)
    REQUIRE_THAT(tr.skip_reason, ContainsSubstring("scan_cap"));
}

TEST_CASE("an exhausted budget skips the trial") {
  ExperimentConfig cfg = small_config(ReductionId::sp);
  cfg.budget = 1;
  SuiteReport rep = run_pullback_suite(cfg);
  REQUIRE(rep.ok());
  REQUIRE(rep.skipped == cfg.trials);
  for (const TrialRecord& tr : rep.trials)
    REQUIRE(tr.skip_reason == "budget_exhausted");
}

TEST_CASE("configs are validated before any work happens") {
  ExperimentConfig cfg;
  cfg.trials = 0;
  REQUIRE_THROWS_WITH(run_consistency_suite(cfg), ContainsSubstring("trials"));

  cfg = ExperimentConfig{};
  cfg.mca_m.clear();
  REQUIRE_THROWS_WITH(run_pullback_suite(cfg), ContainsSubstring("cycles"));

  cfg = ExperimentConfig{};
  cfg.weight_low = 11;  // above weight_high
  REQUIRE_THROWS_AS(run_offset_suite(cfg), Error);

  cfg = ExperimentConfig{};
  cfg.zero_fraction = 1.5;
  REQUIRE_THROWS_WITH(run_offset_suite(cfg), ContainsSubstring("probability"));

  cfg = ExperimentConfig{};
  cfg.budget = 0;
  REQUIRE_THROWS_AS(run_pullback_suite(cfg), Error);
}

TEST_CASE("the offset suite refuses the schemes with no affine claim") {
  ExperimentConfig cfg = small_config(ReductionId::ts);
  cfg.ts_scheme = TsScheme::paper_literal;
  REQUIRE_THROWS_WITH(run_offset_suite(cfg),
                      ContainsSubstring("no affine correspondence"));

  cfg = small_config(ReductionId::ts);
  cfg.ts_separation = TsSeparation::one_sided;
  REQUIRE_THROWS_WITH(run_offset_suite(cfg),
                      ContainsSubstring("no affine correspondence"));

  cfg = small_config(ReductionId::ts);  // corrected two-sided is fine
  SuiteReport rep = run_offset_suite(cfg);
  REQUIRE(rep.ok());
  REQUIRE(rep.passed == cfg.trials);
}

TEST_CASE("offset suites hold exactly on every construction") {
  for (ReductionId id :
       {ReductionId::sp, ReductionId::sc, ReductionId::ssp, ReductionId::sb,
        ReductionId::hs, ReductionId::ip, ReductionId::cc, ReductionId::w3dm,
        ReductionId::x3c}) {
    ExperimentConfig cfg = small_config(id);
    cfg.trials = 3;
    SuiteReport rep = run_offset_suite(cfg);
    INFO(report_text(rep, false));
    REQUIRE(rep.ok());
    REQUIRE(rep.passed == cfg.trials);
    for (const TrialRecord& tr : rep.trials) REQUIRE(tr.offset == "pass");
  }
}

TEST_CASE("greedy suites certify both scan directions") {
  ExperimentConfig cfg = small_config(ReductionId::sp);
  cfg.trials = 25;
  SuiteReport packing = run_greedy_suite(cfg);
  REQUIRE(packing.ok());
  REQUIRE(packing.passed == cfg.trials);

  cfg.reduction = ReductionId::sc;
  SuiteReport cover = run_greedy_suite(cfg);
  REQUIRE(cover.ok());
  REQUIRE(cover.passed == cfg.trials);

  cfg.reduction = ReductionId::ts;  // only the two greedy targets make sense
  REQUIRE_THROWS_AS(run_greedy_suite(cfg), Error);
}

TEST_CASE("clause counts are capped at the available variable pairs") {
  ExperimentConfig cfg = small_config(ReductionId::ssp);
  cfg.clause_vars = {4};
  cfg.clause_counts = {50};  // far beyond C(4,2) = 6
  SuiteReport rep = run_pullback_suite(cfg);
  REQUIRE(rep.ok());
  for (const TrialRecord& tr : rep.trials)
    REQUIRE_THAT(tr.sizes, ContainsSubstring("clauses=6"));
}
