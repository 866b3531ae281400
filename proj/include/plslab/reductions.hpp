#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "plslab/any_instance.hpp"
#include "plslab/bindings.hpp"
#include "plslab/reductions/cc.hpp"
#include "plslab/reductions/common.hpp"
#include "plslab/reductions/hs.hpp"
#include "plslab/reductions/ip.hpp"
#include "plslab/reductions/sb.hpp"
#include "plslab/reductions/sp_sc.hpp"
#include "plslab/reductions/ssp.hpp"
#include "plslab/reductions/ts.hpp"
#include "plslab/reductions/w3dm.hpp"

namespace plslab {

// The ten construction targets, named by their target problem tag.
enum class ReductionId { sp, sc, ssp, ts, sb, hs, ip, cc, w3dm, x3c };

inline const char* reduction_name(ReductionId id) {
  switch (id) {
    case ReductionId::sp:
      return "sp";
    case ReductionId::sc:
      return "sc";
    case ReductionId::ssp:
      return "ssp";
    case ReductionId::ts:
      return "ts";
    case ReductionId::sb:
      return "sb";
    case ReductionId::hs:
      return "hs";
    case ReductionId::ip:
      return "ip";
    case ReductionId::cc:
      return "cc";
    case ReductionId::w3dm:
      return "w3dm";
    default:
      return "x3c";
  }
}

inline std::optional<ReductionId> parse_reduction(const std::string& name) {
  for (ReductionId id :
       {ReductionId::sp, ReductionId::sc, ReductionId::ssp, ReductionId::ts,
        ReductionId::sb, ReductionId::hs, ReductionId::ip, ReductionId::cc,
        ReductionId::w3dm, ReductionId::x3c})
    if (name == reduction_name(id)) return id;
  return std::nullopt;
}

// Which source family a construction consumes; drives generators and CLI
// validation.
enum class SourceFamily { mca_max, mca_min, posnae, cnf };

inline SourceFamily reduction_source_family(ReductionId id) {
  switch (id) {
    case ReductionId::sp:
    case ReductionId::w3dm:
    case ReductionId::x3c:
      return SourceFamily::mca_max;
    case ReductionId::sc:
      return SourceFamily::mca_min;
    case ReductionId::ssp:
    case ReductionId::ts:
    case ReductionId::ip:
      return SourceFamily::posnae;
    default:
      return SourceFamily::cnf;
  }
}

// ---------------------------------------------------------------------------
// Exact-cover view of the matching construction: same gadgets, 3-sets over
// three disjoint element bands instead of coordinate triples.  Everything is
// delegated through the band translation.
// ---------------------------------------------------------------------------

inline bool band_respecting(const Matching& s, int n) {
  for (const Triple& t : s.triples)
    if (!(t[0] >= 0 && t[0] < n && t[1] >= n && t[1] < 2 * n && t[2] >= 2 * n &&
          t[2] < 3 * n))
      return false;
  return true;
}

struct X3cReduction {
  W3dmReduction inner;
  X3cInstance target;

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<Matching>(sol, "exact cover by 3-sets");
    if (!band_respecting(s, inner.target.n))
      return ConsistencyVerdict::fail(
          "cover uses a 3-set that mixes dimension bands");
    return inner.is_consistent(matching_from_x3c(s, inner.target.n));
  }

  Assignment pull_back(const Solution& sol) const {
    const auto& s = solution_as<Matching>(sol, "exact cover by 3-sets");
    if (!band_respecting(s, inner.target.n))
      return initial_assignment(inner.source);
    return inner.pull_back(matching_from_x3c(s, inner.target.n));
  }

  Solution encode(const Assignment& a) const {
    return matching_to_x3c(solution_as<Matching>(inner.encode(a), "matching"),
                           inner.target.n);
  }

  Cost cost_offset() const { return inner.cost_offset(); }
};

inline X3cReduction reduce_mca_x3c(const McaInstance& src,
                                   int medium_factor = 3) {
  X3cReduction red;
  red.inner = reduce_mca_w3dm(src, medium_factor);
  red.target = to_x3c(red.inner.target);
  validate_x3c(red.target);
  return red;
}

// Catalog search binding for the exact-cover view.  The walk starts on a
// translated matching and every emission is a translated matching, so the
// band structure is preserved throughout.
inline ProblemBinding make_catalog_binding(X3cReduction red) {
  auto own = std::make_shared<const X3cReduction>(std::move(red));
  ProblemBinding b;
  b.kind = "exact-cover/catalog";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) {
    return feasible_x3c(own->target, s);
  };
  b.cost = [own](const Solution& s) { return cost_x3c(own->target, s); };
  b.neighbors = [own](const Solution& sol, const SolutionVisitor& visit) {
    const auto& s = solution_as<Matching>(sol, "exact cover by 3-sets");
    int n = own->inner.target.n;
    require(band_respecting(s, n),
            "catalog walks only band-respecting covers (start from the "
            "binding's initial solution)");
    own->inner.catalog_moves(
        matching_from_x3c(s, n),
        [&](const Solution& next, const std::string& desc) {
          return visit(
              matching_to_x3c(solution_as<Matching>(next, "matching"), n),
              desc);
        });
  };
  b.initial = [own]() {
    return matching_to_x3c(
        solution_as<Matching>(init_w3dm(own->inner.target), "matching"),
        own->inner.target.n);
  };
  return b;
}

// ---------------------------------------------------------------------------
// Uniform access to a constructed instance regardless of its target problem.
// ---------------------------------------------------------------------------

using ReductionOutput =
    std::variant<SpReduction, ScReduction, SspReduction, TsReduction,
                 SbReduction, HsReduction, IpReduction, CcReduction,
                 W3dmReduction, X3cReduction>;

struct ReductionOptions {
  TsScheme ts_scheme = TsScheme::corrected;
  TsSeparation ts_separation = TsSeparation::two_sided;
  int w3dm_medium_factor = 3;
};

inline ReductionOutput run_reduction(ReductionId id, const McaInstance& src,
                                     const ReductionOptions& opt = {}) {
  switch (id) {
    case ReductionId::sp:
      return reduce_mca_sp(src);
    case ReductionId::sc:
      return reduce_minca_sc(src);
    case ReductionId::ssp:
      return reduce_posnae_ssp(src);
    case ReductionId::ts:
      return reduce_posnae_ts(src, opt.ts_scheme, opt.ts_separation);
    case ReductionId::sb:
      return reduce_cnf_sb(src);
    case ReductionId::hs:
      return reduce_cnf_hs(src);
    case ReductionId::ip:
      return reduce_posnae_ip(src);
    case ReductionId::cc:
      return reduce_cnf_cc(src);
    case ReductionId::w3dm:
      return reduce_mca_w3dm(src, opt.w3dm_medium_factor);
    default:
      return reduce_mca_x3c(src, opt.w3dm_medium_factor);
  }
}

inline ConsistencyVerdict is_consistent(const ReductionOutput& red,
                                        const Solution& sol) {
  return std::visit([&sol](const auto& r) { return r.is_consistent(sol); },
                    red);
}

inline Assignment pull_back(const ReductionOutput& red, const Solution& sol) {
  return std::visit([&sol](const auto& r) { return r.pull_back(sol); }, red);
}

inline Solution encode_assignment(const ReductionOutput& red,
                                  const Assignment& a) {
  return std::visit([&a](const auto& r) { return r.encode(a); }, red);
}

inline Cost cost_offset(const ReductionOutput& red) {
  return std::visit([](const auto& r) { return r.cost_offset(); }, red);
}

inline const McaInstance& reduction_source(const ReductionOutput& red) {
  return std::visit(
      [](const auto& r) -> const McaInstance& {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, X3cReduction>)
          return r.inner.source;
        else
          return r.source;
      },
      red);
}

inline AnyInstance reduction_target(const ReductionOutput& red) {
  return std::visit([](const auto& r) { return AnyInstance(r.target); }, red);
}

inline std::string reduction_kind(const ReductionOutput& red) {
  return instance_kind(reduction_target(red));
}

// Search binding on the constructed instance, with the neighborhood the
// construction's locality argument uses: 2-differ for packing and covering,
// 1-differ for the other set systems, the move catalog for matchings.
inline ProblemBinding make_reduced_binding(const ReductionOutput& red) {
  return std::visit(
      [](const auto& r) -> ProblemBinding {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, W3dmReduction> ||
                      std::is_same_v<T, X3cReduction>) {
          return make_catalog_binding(r);
        } else {
          BindingOptions opt;
          opt.k = std::is_same_v<T, SpReduction> ||
                          std::is_same_v<T, ScReduction>
                      ? 2
                      : 1;
          return make_binding(r.target, opt);
        }
      },
      red);
}

}  // namespace plslab
