#pragma once

#include <memory>
#include <string>
#include <variant>

#include "plslab/any_instance.hpp"
#include "plslab/engine.hpp"
#include "plslab/neighborhoods.hpp"

namespace plslab {

// Knobs for hooking an instance to the engine.  k drives every k-differ
// problem; (p, q) drives the exhaustive W3DM scan (sanity scale only -- the
// reduction move catalog is the scalable W3DM neighborhood and has its own
// binding in reductions/w3dm.hpp).
struct BindingOptions {
  int k = 1;
  int p = 2;
  int q = 4;
  int sb_ground_cap = 16;
  int pq_n_cap = 14;
};

// Every binding owns its instance (shared with all of its closures), so the
// argument can be a temporary and the binding can outlive the caller's copy.

// Source-side constraint instances ride the SetVector solution shape: one
// value slot per variable.  The 1-flip neighborhood is the |X|*(r-1) flips.
inline ProblemBinding make_binding(McaInstance inst,
                                   const BindingOptions& = {}) {
  validate_mca(inst);
  auto own = std::make_shared<const McaInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "constraint-assignment";
  b.sense = own->sense;
  b.feasible = [own](const Solution& sol) {
    const auto* v = std::get_if<SetVector>(&sol);
    if (!v || static_cast<int>(v->donor.size()) != own->num_vars) return false;
    for (int d : v->donor)
      if (d < 0 || d >= own->domain_size) return false;
    return true;
  };
  b.cost = [own](const Solution& sol) {
    const auto& v = solution_as<SetVector>(sol, "constraint assignment");
    return source_cost(*own, Assignment(v.donor.begin(), v.donor.end()));
  };
  b.neighbors = [own](const Solution& sol, const SolutionVisitor& visit) {
    const auto& v = solution_as<SetVector>(sol, "constraint assignment");
    for (int var = 0; var < own->num_vars; ++var) {
      for (int val = 0; val < own->domain_size; ++val) {
        if (val == v.donor[static_cast<std::size_t>(var)]) continue;
        SetVector next = v;
        next.donor[static_cast<std::size_t>(var)] = val;
        if (!visit(Solution{std::move(next)},
                   "flip x" + std::to_string(var + 1) + " -> " +
                       std::to_string(val + 1)))
          return;
      }
    }
  };
  b.initial = [own]() {
    return Solution{SetVector{
        std::vector<int>(static_cast<std::size_t>(own->num_vars), 0)}};
  };
  return b;
}

inline ProblemBinding make_binding(SpInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_sp(inst);
  auto own = std::make_shared<const SpInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "set-packing";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_sp(*own, s); };
  b.cost = [own](const Solution& s) { return cost_sp(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_sp(*own); };
  return b;
}

inline ProblemBinding make_binding(SspInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_ssp(inst);
  auto own = std::make_shared<const SspInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "set-splitting";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_ssp(*own, s); };
  b.cost = [own](const Solution& s) { return cost_ssp(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_ssp(*own); };
  return b;
}

inline ProblemBinding make_binding(ScInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_sc(inst);
  auto own = std::make_shared<const ScInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "set-cover";
  b.sense = Sense::minimize;
  b.feasible = [own](const Solution& s) { return feasible_sc(*own, s); };
  b.cost = [own](const Solution& s) { return cost_sc(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_sc(*own); };
  return b;
}

inline ProblemBinding make_binding(TsInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_ts(inst);
  auto own = std::make_shared<const TsInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "test-set";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_ts(*own, s); };
  b.cost = [own](const Solution& s) { return cost_ts(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_ts(*own); };
  return b;
}

inline ProblemBinding make_binding(SbInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_sb(inst);
  auto own = std::make_shared<const SbInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "set-basis";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_sb(*own, s); };
  b.cost = [own](const Solution& s) { return cost_sb(*own, s); };
  b.neighbors = [own, k = opt.k, cap = opt.sb_ground_cap](
                    const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v, cap);
  };
  b.initial = [own]() { return init_sb(*own); };
  return b;
}

inline ProblemBinding make_binding(HsInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_hs(inst);
  auto own = std::make_shared<const HsInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "hitting-set";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_hs(*own, s); };
  b.cost = [own](const Solution& s) { return cost_hs(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_hs(*own); };
  return b;
}

inline ProblemBinding make_binding(IpInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_ip(inst);
  auto own = std::make_shared<const IpInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "intersection-pattern";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_ip(*own, s); };
  b.cost = [own](const Solution& s) { return cost_ip(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_ip(*own); };
  return b;
}

inline ProblemBinding make_binding(CcInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_cc(inst);
  auto own = std::make_shared<const CcInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "comparative-containment";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_cc(*own, s); };
  b.cost = [own](const Solution& s) { return cost_cc(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_cc(*own); };
  return b;
}

inline ProblemBinding make_binding(W3dmInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_w3dm(inst);
  auto own = std::make_shared<const W3dmInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "3d-matching";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_w3dm(*own, s); };
  b.cost = [own](const Solution& s) { return cost_w3dm(*own, s); };
  b.neighbors = [own, p = opt.p, q = opt.q, cap = opt.pq_n_cap](
                    const Solution& s, const SolutionVisitor& v) {
    w3dm_pq_neighbors(*own, s, p, q, v, cap);
  };
  b.initial = [own]() { return init_w3dm(*own); };
  return b;
}

inline ProblemBinding make_binding(X3cInstance inst,
                                   const BindingOptions& opt = {}) {
  validate_x3c(inst);
  auto own = std::make_shared<const X3cInstance>(std::move(inst));
  ProblemBinding b;
  b.kind = "exact-cover";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) { return feasible_x3c(*own, s); };
  b.cost = [own](const Solution& s) { return cost_x3c(*own, s); };
  b.neighbors = [own, k = opt.k](const Solution& s, const SolutionVisitor& v) {
    kdiffer_neighbors(*own, s, k, v);
  };
  b.initial = [own]() { return init_x3c(*own); };
  return b;
}

// Variant dispatcher.
inline ProblemBinding make_binding(const AnyInstance& inst,
                                   const BindingOptions& opt = {}) {
  return std::visit(
      [&opt](const auto& concrete) { return make_binding(concrete, opt); },
      inst);
}

}  // namespace plslab
