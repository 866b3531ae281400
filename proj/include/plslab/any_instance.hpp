#pragma once

#include <string>
#include <variant>

#include "plslab/error.hpp"
#include "plslab/mca.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {

// Every instance kind the toolkit can parse, solve, or verify.  Source-side
// constraint instances travel in the same variant so the CLI and the text
// format treat them uniformly.
using AnyInstance =
    std::variant<McaInstance, SpInstance, SspInstance, ScInstance, TsInstance,
                 SbInstance, HsInstance, IpInstance, CcInstance, W3dmInstance,
                 X3cInstance>;

inline std::string instance_kind(const AnyInstance& inst) {
  struct V {
    std::string operator()(const McaInstance& m) const {
      switch (m.semantics) {
        case ConstraintSemantics::table:
          return m.sense == Sense::minimize ? "minca" : "mca";
        case ConstraintSemantics::nae:
          return "posnae";
        case ConstraintSemantics::cnf:
          return "cnf";
      }
      return "mca";
    }
    std::string operator()(const SpInstance&) const { return "sp"; }
    std::string operator()(const SspInstance&) const { return "ssp"; }
    std::string operator()(const ScInstance&) const { return "sc"; }
    std::string operator()(const TsInstance&) const { return "ts"; }
    std::string operator()(const SbInstance&) const { return "sb"; }
    std::string operator()(const HsInstance&) const { return "hs"; }
    std::string operator()(const IpInstance&) const { return "ip"; }
    std::string operator()(const CcInstance&) const { return "cc"; }
    std::string operator()(const W3dmInstance&) const { return "w3dm"; }
    std::string operator()(const X3cInstance&) const { return "x3c"; }
  };
  return std::visit(V{}, inst);
}

inline Sense instance_sense(const AnyInstance& inst) {
  if (const auto* m = std::get_if<McaInstance>(&inst)) return m->sense;
  return std::holds_alternative<ScInstance>(inst) ? Sense::minimize
                                                  : Sense::maximize;
}

inline void validate_instance(const AnyInstance& inst) {
  struct V {
    void operator()(const McaInstance& i) const { validate_mca(i); }
    void operator()(const SpInstance& i) const { validate_sp(i); }
    void operator()(const SspInstance& i) const { validate_ssp(i); }
    void operator()(const ScInstance& i) const { validate_sc(i); }
    void operator()(const TsInstance& i) const { validate_ts(i); }
    void operator()(const SbInstance& i) const { validate_sb(i); }
    void operator()(const HsInstance& i) const { validate_hs(i); }
    void operator()(const IpInstance& i) const { validate_ip(i); }
    void operator()(const CcInstance& i) const { validate_cc(i); }
    void operator()(const W3dmInstance& i) const { validate_w3dm(i); }
    void operator()(const X3cInstance& i) const { validate_x3c(i); }
  };
  std::visit(V{}, inst);
}

}  // namespace plslab
