#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plslab/engine.hpp"
#include "plslab/neighborhoods.hpp"
#include "plslab/reductions/common.hpp"
#include "plslab/set_problems.hpp"

namespace plslab {
namespace detail {

// Element numbering for the matching construction.  All three dimensions use
// the same index space: regular elements (variable, value, copy) occupy
// [0, 2rn); each variable additionally anchors the dimension matching its
// color (blue -> boys, red -> girls, white -> homes) with two zero elements
// in [2rn, 2rn + 2n/3).  Two zero elements per variable balance the three
// dimensions exactly (see w3dm_inventory_report).
struct GadgetLayout {
  int n = 0;  // variables
  int r = 0;  // domain size
  int m = 0;  // constraints
  int total = 0;  // elements per dimension
  std::vector<VarColor> color;
  std::vector<int> color_rank;  // rank of a variable inside its color class
  std::vector<std::array<int, 2>> var_constraints;  // both occurrences

  void init(const McaInstance& src) {
    validate_tricolored(src);
    n = src.num_vars;
    r = src.domain_size;
    m = src.num_constraints();
    total = 2 * r * n + 2 * (n / 3);
    color = src.colors;
    color_rank.assign(static_cast<std::size_t>(n), 0);
    std::array<int, 3> next{0, 0, 0};
    for (int v = 0; v < n; ++v) {
      int c = color[static_cast<std::size_t>(v)] == VarColor::blue   ? 0
              : color[static_cast<std::size_t>(v)] == VarColor::red  ? 1
                                                                     : 2;
      color_rank[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(c)]++;
    }
    var_constraints.assign(static_cast<std::size_t>(n), {-1, -1});
    for (int c = 0; c < m; ++c)
      for (int v : src.constraints[static_cast<std::size_t>(c)].scope) {
        auto& occ = var_constraints[static_cast<std::size_t>(v)];
        (occ[0] < 0 ? occ[0] : occ[1]) = c;
      }
  }

  // Regular element of a variable: value t in [0, r), occurrence copy s.
  int elem(int var, int t, int s) const { return var * 2 * r + t * 2 + s; }

  // Zero element; meaningful only in the dimension the variable anchors.
  int zero_elem(int var, int s) const {
    return 2 * r * n + 2 * color_rank[static_cast<std::size_t>(var)] + s;
  }

  // Occurrence copy a constraint uses for a variable: 0 at the first of the
  // variable's two constraints, 1 at the second.
  int copy_of(int var, int constraint) const {
    return var_constraints[static_cast<std::size_t>(var)][0] == constraint ? 0
                                                                           : 1;
  }

  // Large gadget triple: the anchored dimension holds the zero element, the
  // other two hold the value element.  Both copies of a variable's larges
  // sitting at one value marks that value as chosen.
  Triple large(int var, int t, int s) const {
    int e = elem(var, t, s), z = zero_elem(var, s);
    switch (color[static_cast<std::size_t>(var)]) {
      case VarColor::blue:
        return {z, e, e};
      case VarColor::red:
        return {e, z, e};
      default:
        return {e, e, z};
    }
  }

  // Medium gadget triple at a value: occupies the value's elements so only
  // the chosen value's regular elements stay free for small triples.  The
  // copy crossing (homes for blue, girls for white) is what lets a single
  // replaced medium free both copies during consolidation.
  Triple medium(int var, int t, int s) const {
    int e0 = elem(var, t, s), e1 = elem(var, t, 1 - s);
    switch (color[static_cast<std::size_t>(var)]) {
      case VarColor::blue:
        return {e0, e0, e1};
      case VarColor::red:
        return {e0, e0, e0};
      default:
        return {e0, e1, e0};
    }
  }

  // Small triple of a constraint under one scope tuple: the blue variable's
  // boy, the red variable's girl and the white variable's home, each at the
  // tuple's value and at the occurrence copy this constraint owns.
  Triple small(const McaInstance& src, int constraint,
               std::size_t tuple) const {
    const McaConstraint& c = src.constraints[static_cast<std::size_t>(constraint)];
    Triple out{-1, -1, -1};
    std::size_t rest = tuple;
    for (int v : c.scope) {
      int val = static_cast<int>(rest % static_cast<std::size_t>(r));
      rest /= static_cast<std::size_t>(r);
      int e = elem(v, val, copy_of(v, constraint));
      switch (color[static_cast<std::size_t>(v)]) {
        case VarColor::blue:
          out[0] = e;
          break;
        case VarColor::red:
          out[1] = e;
          break;
        default:
          out[2] = e;
      }
    }
    return out;
  }

  // "b2[x3](1)" = boys dimension, copy 2, variable x3, value 1; value 0 is
  // the zero element.
  std::string elem_label(int dim, int e) const {
    const char* letter = dim == 0 ? "b" : dim == 1 ? "g" : "h";
    if (e < 2 * r * n) {
      int var = e / (2 * r), rest = e % (2 * r);
      return std::string(letter) + std::to_string(rest % 2 + 1) + "[x" +
             std::to_string(var + 1) + "](" + std::to_string(rest / 2 + 1) +
             ")";
    }
    int rest = e - 2 * r * n;
    int rank = rest / 2;
    for (int v = 0; v < n; ++v)
      if (color_rank[static_cast<std::size_t>(v)] == rank &&
          anchored_dim(color[static_cast<std::size_t>(v)]) == dim)
        return std::string(letter) + std::to_string(rest % 2 + 1) + "[x" +
               std::to_string(v + 1) + "](0)";
    return std::string(letter) + "?" + std::to_string(e);
  }

  static int anchored_dim(VarColor c) {
    return c == VarColor::blue ? 0 : c == VarColor::red ? 1 : 2;
  }
};

// Replaces triples in a perfect matching: remove `forced` plus every triple
// that holds an element some addition needs, insert the additions, then pair
// the leftover freed elements coordinate-wise into filler triples so the
// result is again a perfect matching.
inline Matching rebuild_matching(const Matching& s, int n,
                                 const std::vector<Triple>& forced,
                                 const std::vector<Triple>& additions) {
  std::vector<int> owner_b(static_cast<std::size_t>(n), -1);
  std::vector<int> owner_g(static_cast<std::size_t>(n), -1);
  std::vector<int> owner_h(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < s.triples.size(); ++i) {
    owner_b[static_cast<std::size_t>(s.triples[i][0])] = static_cast<int>(i);
    owner_g[static_cast<std::size_t>(s.triples[i][1])] = static_cast<int>(i);
    owner_h[static_cast<std::size_t>(s.triples[i][2])] = static_cast<int>(i);
  }
  std::set<int> removed;
  for (const Triple& f : forced) {
    int idx = owner_b[static_cast<std::size_t>(f[0])];
    require(idx >= 0 && s.triples[static_cast<std::size_t>(idx)] == f,
            "catalog tried to remove a triple that is not in the matching");
    removed.insert(idx);
  }
  for (const Triple& a : additions) {
    removed.insert(owner_b[static_cast<std::size_t>(a[0])]);
    removed.insert(owner_g[static_cast<std::size_t>(a[1])]);
    removed.insert(owner_h[static_cast<std::size_t>(a[2])]);
  }
  std::vector<int> freed_b, freed_g, freed_h, used_b, used_g, used_h;
  for (int i : removed) {
    const Triple& t = s.triples[static_cast<std::size_t>(i)];
    freed_b.push_back(t[0]);
    freed_g.push_back(t[1]);
    freed_h.push_back(t[2]);
  }
  for (const Triple& a : additions) {
    used_b.push_back(a[0]);
    used_g.push_back(a[1]);
    used_h.push_back(a[2]);
  }
  auto leftover = [](std::vector<int> freed, std::vector<int> used) {
    std::sort(freed.begin(), freed.end());
    std::sort(used.begin(), used.end());
    require(std::adjacent_find(used.begin(), used.end()) == used.end(),
            "catalog additions collide on an element");
    std::vector<int> out;
    std::set_difference(freed.begin(), freed.end(), used.begin(), used.end(),
                        std::back_inserter(out));
    require(out.size() == freed.size() - used.size(),
            "catalog addition uses an element that was not freed");
    return out;
  };
  std::vector<int> left_b = leftover(freed_b, used_b);
  std::vector<int> left_g = leftover(freed_g, used_g);
  std::vector<int> left_h = leftover(freed_h, used_h);

  Matching next;
  for (std::size_t i = 0; i < s.triples.size(); ++i)
    if (!removed.count(static_cast<int>(i))) next.triples.push_back(s.triples[i]);
  for (const Triple& a : additions) next.triples.push_back(a);
  for (std::size_t i = 0; i < left_b.size(); ++i)
    next.triples.push_back({left_b[i], left_g[i], left_h[i]});
  std::sort(next.triples.begin(), next.triples.end());
  return next;
}

struct MoveMetrics {
  int replaced = 0;     // |S \ S'|
  int relocations = 0;  // boys plus girls whose home changed
};

inline MoveMetrics matching_move_metrics(const Matching& from,
                                         const Matching& to, int n) {
  MoveMetrics mm;
  std::set<Triple> after(to.triples.begin(), to.triples.end());
  for (const Triple& t : from.triples)
    if (!after.count(t)) ++mm.replaced;
  std::vector<int> bh_from(static_cast<std::size_t>(n)),
      bh_to(static_cast<std::size_t>(n)), gh_from(static_cast<std::size_t>(n)),
      gh_to(static_cast<std::size_t>(n));
  for (const Triple& t : from.triples) {
    bh_from[static_cast<std::size_t>(t[0])] = t[2];
    gh_from[static_cast<std::size_t>(t[1])] = t[2];
  }
  for (const Triple& t : to.triples) {
    bh_to[static_cast<std::size_t>(t[0])] = t[2];
    gh_to[static_cast<std::size_t>(t[1])] = t[2];
  }
  for (int e = 0; e < n; ++e) {
    if (bh_from[static_cast<std::size_t>(e)] != bh_to[static_cast<std::size_t>(e)])
      ++mm.relocations;
    if (gh_from[static_cast<std::size_t>(e)] != gh_to[static_cast<std::size_t>(e)])
      ++mm.relocations;
  }
  return mm;
}

}  // namespace detail

// (2,3,r)-MCA (tri-colored, maximizing) -> weighted 3-dimensional matching
// with the (6,12) move catalog.  Per variable: two large triples (7W) force a
// chosen value, mediums (medium_factor * W) blanket the other values, and per
// constraint one small triple per scope tuple carries the table entry.  The
// standard matching of an assignment is a perfect matching whose cost is the
// source cost plus a fixed offset.
struct W3dmReduction {
  McaInstance source;
  W3dmInstance target;
  Weight W;
  int medium_factor = 3;
  detail::GadgetLayout layout;

  Weight large_weight() const { return Weight(7) * W; }
  Weight medium_weight() const { return Weight(medium_factor) * W; }

  // The standard matching of an assignment: larges at the assigned value,
  // mediums everywhere else, one small per constraint at the induced tuple.
  Matching standard_matching(const Assignment& a) const {
    Matching out;
    for (int v = 0; v < layout.n; ++v) {
      int chosen = a[static_cast<std::size_t>(v)];
      for (int s = 0; s < 2; ++s) {
        out.triples.push_back(layout.large(v, chosen, s));
        for (int t = 0; t < layout.r; ++t)
          if (t != chosen) out.triples.push_back(layout.medium(v, t, s));
      }
    }
    for (int c = 0; c < layout.m; ++c)
      out.triples.push_back(layout.small(
          source, c,
          table_index(source.constraints[static_cast<std::size_t>(c)],
                      layout.r, a)));
    std::sort(out.triples.begin(), out.triples.end());
    return out;
  }

  // Reads the assignment off a standard matching; nullopt when the matching
  // is not standard.
  std::optional<Assignment> decode(const Matching& s) const {
    std::set<Triple> present(s.triples.begin(), s.triples.end());
    Assignment a(static_cast<std::size_t>(layout.n), 0);
    for (int v = 0; v < layout.n; ++v) {
      int chosen = -1;
      for (int t = 0; t < layout.r; ++t)
        if (present.count(layout.large(v, t, 0)) &&
            present.count(layout.large(v, t, 1)))
          chosen = t;
      if (chosen < 0) return std::nullopt;
      a[static_cast<std::size_t>(v)] = chosen;
      for (int t = 0; t < layout.r; ++t) {
        if (t == chosen) continue;
        for (int sc = 0; sc < 2; ++sc)
          if (!present.count(layout.medium(v, t, sc))) return std::nullopt;
      }
    }
    for (int c = 0; c < layout.m; ++c) {
      std::size_t tuple = table_index(
          source.constraints[static_cast<std::size_t>(c)], layout.r, a);
      if (!present.count(layout.small(source, c, tuple))) return std::nullopt;
    }
    return a;
  }

  ConsistencyVerdict is_consistent(const Solution& sol) const {
    const auto& s = solution_as<Matching>(sol, "3-dimensional matching");
    if (!feasible_w3dm(target, sol))
      return ConsistencyVerdict::fail("not a perfect matching");
    std::set<Triple> present(s.triples.begin(), s.triples.end());
    Assignment a(static_cast<std::size_t>(layout.n), 0);
    for (int v = 0; v < layout.n; ++v) {
      int chosen = -1;
      for (int t = 0; t < layout.r; ++t)
        if (present.count(layout.large(v, t, 0)) &&
            present.count(layout.large(v, t, 1)))
          chosen = t;
      if (chosen < 0)
        return ConsistencyVerdict::fail(
            "variable x" + std::to_string(v + 1) +
            " has no value with both large triples in place");
      a[static_cast<std::size_t>(v)] = chosen;
      for (int t = 0; t < layout.r; ++t) {
        if (t == chosen) continue;
        for (int sc = 0; sc < 2; ++sc)
          if (!present.count(layout.medium(v, t, sc)))
            return ConsistencyVerdict::fail(
                "variable x" + std::to_string(v + 1) +
                " is missing a medium triple at value " + std::to_string(t + 1));
      }
    }
    for (int c = 0; c < layout.m; ++c) {
      std::size_t tuple = table_index(
          source.constraints[static_cast<std::size_t>(c)], layout.r, a);
      if (!present.count(layout.small(source, c, tuple)))
        return ConsistencyVerdict::fail(
            "constraint C" + std::to_string(c + 1) +
            "'s small triple disagrees with the decoded assignment");
    }
    return ConsistencyVerdict::ok();
  }

  Assignment pull_back(const Solution& sol) const {
    const auto& s = solution_as<Matching>(sol, "3-dimensional matching");
    if (auto a = decode(s)) return *a;
    return initial_assignment(source);
  }

  Solution encode(const Assignment& a) const {
    validate_assignment(source, a);
    Matching s = standard_matching(a);
    require(feasible_w3dm(target, s),
            "standard matching construction broke the perfect-matching "
            "invariant");
    return s;
  }

  Cost cost_offset() const {
    // Per variable: two larges plus 2(r-1) mediums.
    return Cost(W) * layout.n * (14 + 2 * medium_factor * (layout.r - 1));
  }

  // ---------------------------------------------------------------------
  // Move catalog: the polynomially many (6,12)-moves the construction's
  // improvement argument uses.  Every emission replaces at most 6 triples
  // and relocates at most 12 boys/girls (asserted).
  // ---------------------------------------------------------------------
  void catalog_moves(const Solution& sol, const SolutionVisitor& visit) const {
    const auto& s = solution_as<Matching>(sol, "3-dimensional matching");
    std::set<Triple> present(s.triples.begin(), s.triples.end());
    std::set<std::vector<Triple>> seen;

    auto emit = [&](const std::vector<Triple>& forced,
                    const std::vector<Triple>& additions,
                    const std::string& desc) {
      Matching next = detail::rebuild_matching(s, target.n, forced, additions);
      if (next.triples == s.triples) return true;
      if (!seen.insert(next.triples).second) return true;
      detail::MoveMetrics mm =
          detail::matching_move_metrics(s, next, target.n);
      require(mm.replaced <= 6 && mm.relocations <= 12,
              "catalog emitted a move outside the (6,12) neighborhood");
      return visit(next, desc);
    };

    // Build moves: put a missing construction triple in place.
    for (int v = 0; v < layout.n; ++v)
      for (int t = 0; t < layout.r; ++t)
        for (int sc = 0; sc < 2; ++sc) {
          Triple l = layout.large(v, t, sc);
          if (!present.count(l) &&
              !emit({}, {l},
                    "build large(x" + std::to_string(v + 1) + "," +
                        std::to_string(t + 1) + ",#" + std::to_string(sc + 1) +
                        ")"))
            return;
          Triple md = layout.medium(v, t, sc);
          if (!present.count(md) &&
              !emit({}, {md},
                    "build medium(x" + std::to_string(v + 1) + "," +
                        std::to_string(t + 1) + ",#" + std::to_string(sc + 1) +
                        ")"))
            return;
        }
    for (int c = 0; c < layout.m; ++c) {
      std::size_t tuples = 1;
      for (std::size_t i = 0;
           i < source.constraints[static_cast<std::size_t>(c)].scope.size(); ++i)
        tuples *= static_cast<std::size_t>(layout.r);
      for (std::size_t tu = 0; tu < tuples; ++tu) {
        Triple sm = layout.small(source, c, tu);
        if (!present.count(sm) &&
            !emit({}, {sm},
                  "build small(C" + std::to_string(c + 1) + ",t" +
                      std::to_string(tu) + ")"))
          return;
      }
    }

    // Consolidate: a variable whose larges sit at two values moves one copy
    // next to the other and backfills the vacated value with a medium.
    for (int v = 0; v < layout.n; ++v) {
      std::vector<std::pair<int, int>> larges;  // (value, copy)
      for (int t = 0; t < layout.r; ++t)
        for (int sc = 0; sc < 2; ++sc)
          if (present.count(layout.large(v, t, sc))) larges.push_back({t, sc});
      for (const auto& [ta, sa] : larges)
        for (const auto& [tb, sb] : larges) {
          if (ta == tb) continue;
          for (int w = 0; w < 2; ++w) {
            if (!emit({layout.large(v, ta, sa)},
                      {layout.large(v, tb, sa), layout.medium(v, ta, w)},
                      "consolidate x" + std::to_string(v + 1) + ": " +
                          std::to_string(ta + 1) + "->" + std::to_string(tb + 1) +
                          " copy#" + std::to_string(sa + 1) + " med#" +
                          std::to_string(w + 1)))
              return;
          }
        }
    }

    // Reassign: on a standard matching, move one variable to a new value
    // (exactly the 6-for-6 swap; mirrors a source 1-flip).
    if (auto a = decode(s)) {
      for (int v = 0; v < layout.n; ++v) {
        int t_old = (*a)[static_cast<std::size_t>(v)];
        for (int t_new = 0; t_new < layout.r; ++t_new) {
          if (t_new == t_old) continue;
          Assignment b = *a;
          b[static_cast<std::size_t>(v)] = t_new;
          std::vector<Triple> forced, additions;
          for (int sc = 0; sc < 2; ++sc) {
            forced.push_back(layout.large(v, t_old, sc));
            forced.push_back(layout.medium(v, t_new, sc));
            additions.push_back(layout.large(v, t_new, sc));
            additions.push_back(layout.medium(v, t_old, sc));
          }
          for (int c :
               layout.var_constraints[static_cast<std::size_t>(v)]) {
            const McaConstraint& ct =
                source.constraints[static_cast<std::size_t>(c)];
            forced.push_back(
                layout.small(source, c, table_index(ct, layout.r, *a)));
            additions.push_back(
                layout.small(source, c, table_index(ct, layout.r, b)));
          }
          if (!emit(forced, additions,
                    "reassign x" + std::to_string(v + 1) + ": " +
                        std::to_string(t_old + 1) + "->" +
                        std::to_string(t_new + 1)))
            return;
        }
      }
    }
  }
};

inline W3dmReduction reduce_mca_w3dm(const McaInstance& src,
                                     int medium_factor = 3) {
  require(src.sense == Sense::maximize,
          "the matching construction reduces maximization sources");
  require(medium_factor >= 2 && medium_factor <= 6,
          "medium factor must stay between 2 (above payloads) and 6 (below "
          "larges)");
  W3dmReduction red;
  red.source = src;
  red.medium_factor = medium_factor;
  red.layout.init(src);
  red.W = big_w(src);
  red.target.n = red.layout.total;

  auto put = [&red](const Triple& t, const Weight& w) {
    require(red.target.weights.emplace(t, w).second,
            "construction triples collided");
  };
  for (int v = 0; v < red.layout.n; ++v)
    for (int t = 0; t < red.layout.r; ++t)
      for (int s = 0; s < 2; ++s) {
        put(red.layout.large(v, t, s), red.large_weight());
        put(red.layout.medium(v, t, s), red.medium_weight());
      }
  for (int c = 0; c < red.layout.m; ++c) {
    const McaConstraint& ct = red.source.constraints[static_cast<std::size_t>(c)];
    for (std::size_t tu = 0; tu < ct.table.size(); ++tu)
      put(red.layout.small(red.source, c, tu), ct.table[tu]);
  }
  validate_w3dm(red.target);
  return red;
}

// Search binding whose neighborhood is the move catalog rather than the raw
// (p,q) scan; this is the neighborhood the construction's improvement
// argument walks, and it stays polynomial at any instance size.
inline ProblemBinding make_catalog_binding(W3dmReduction red) {
  auto own = std::make_shared<const W3dmReduction>(std::move(red));
  ProblemBinding b;
  b.kind = "3d-matching/catalog";
  b.sense = Sense::maximize;
  b.feasible = [own](const Solution& s) {
    return feasible_w3dm(own->target, s);
  };
  b.cost = [own](const Solution& s) { return cost_w3dm(own->target, s); };
  b.neighbors = [own](const Solution& s, const SolutionVisitor& v) {
    own->catalog_moves(s, v);
  };
  b.initial = [own]() { return init_w3dm(own->target); };
  return b;
}

// ---------------------------------------------------------------------------
// Inventory diagnostic: how many zero elements per variable balance the
// three dimensions against the standard assignment's triple count.
// ---------------------------------------------------------------------------

struct InventoryLine {
  int zeros = 0;            // zero elements per variable
  long long dim_size = 0;   // elements per dimension
  long long triples = 0;    // triples a standard assignment needs
  long long gap = 0;        // dim_size - triples (0 = balanced)
};

struct InventoryReport {
  int n = 0, r = 0, m = 0;
  std::vector<InventoryLine> lines;
  int chosen = 2;

  std::string to_text() const {
    std::string out = "matching inventory for |X|=" + std::to_string(n) +
                      ", r=" + std::to_string(r) + ", m=" + std::to_string(m) +
                      "\n";
    for (const InventoryLine& l : lines) {
      out += "  zeros/var=" + std::to_string(l.zeros) +
             ": elements/dim=" + std::to_string(l.dim_size) +
             ", standard triples=" + std::to_string(l.triples) +
             (l.gap == 0 ? "  (balanced)"
                         : "  (gap " + std::to_string(l.gap) + ")") +
             "\n";
    }
    out += "  construction uses zeros/var=" + std::to_string(chosen) + "\n";
    return out;
  }
};

inline InventoryReport w3dm_inventory_report(const McaInstance& src) {
  validate_tricolored(src);
  InventoryReport rep;
  rep.n = src.num_vars;
  rep.r = src.domain_size;
  rep.m = src.num_constraints();
  for (int z = 1; z <= 3; ++z) {
    InventoryLine l;
    l.zeros = z;
    // Each color class anchors one dimension with z zero elements per
    // variable; regular elements contribute 2r per variable per dimension.
    l.dim_size = 2LL * rep.r * rep.n + 1LL * z * (rep.n / 3);
    // A standard assignment spends z larges and 2(r-1) mediums per variable
    // plus one small per constraint.
    l.triples = 1LL * z * rep.n + 2LL * (rep.r - 1) * rep.n + rep.m;
    l.gap = l.dim_size - l.triples;
    rep.lines.push_back(l);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact-cover view: a matching triple (b, g, h) over [0, N) becomes the 3-set
// {b, N+g, 2N+h}; bands keep the translation order-preserving and invertible.
// ---------------------------------------------------------------------------

inline Triple x3c_triple(const Triple& t, int n) {
  return {t[0], n + t[1], 2 * n + t[2]};
}

inline Triple w3dm_triple(const Triple& t, int n) {
  require(t[0] >= 0 && t[0] < n && t[1] >= n && t[1] < 2 * n && t[2] >= 2 * n &&
              t[2] < 3 * n,
          "3-set does not take one element per dimension band");
  return {t[0], t[1] - n, t[2] - 2 * n};
}

inline X3cInstance to_x3c(const W3dmInstance& w) {
  X3cInstance x;
  x.ground_size = 3 * w.n;
  for (const auto& [t, wt] : w.weights) x.weights[x3c_triple(t, w.n)] = wt;
  return x;
}

inline Matching matching_to_x3c(const Matching& s, int n) {
  Matching out;
  for (const Triple& t : s.triples) out.triples.push_back(x3c_triple(t, n));
  std::sort(out.triples.begin(), out.triples.end());
  return out;
}

inline Matching matching_from_x3c(const Matching& s, int n) {
  Matching out;
  for (const Triple& t : s.triples) out.triples.push_back(w3dm_triple(t, n));
  std::sort(out.triples.begin(), out.triples.end());
  return out;
}

}  // namespace plslab
