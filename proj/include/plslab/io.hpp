#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plslab/any_instance.hpp"
#include "plslab/error.hpp"
#include "plslab/ints.hpp"
#include "plslab/reductions.hpp"

// Line-oriented text format, diff-friendly and fully round-tripping.  All
// ids (elements, sets, variables, matching coordinates) are 1-based in text
// and 0-based in memory.  `#` starts a comment line; `meta <key> <value...>`
// lines carry free-form annotations that parsing preserves separately.

namespace plslab {
namespace detail {

inline std::string color_name(VarColor c) {
  switch (c) {
    case VarColor::blue:
      return "blue";
    case VarColor::red:
      return "red";
    case VarColor::white:
      return "white";
    default:
      return "none";
  }
}

inline std::optional<VarColor> color_of_name(const std::string& s) {
  if (s == "blue") return VarColor::blue;
  if (s == "red") return VarColor::red;
  if (s == "white") return VarColor::white;
  return std::nullopt;
}

inline void write_sets(std::string& out, const WeightedCollection& col,
                       const char* set_kw, const char* label_kw) {
  for (int i = 0; i < col.num_sets(); ++i) {
    out += set_kw;
    out += ' ' + std::to_string(i + 1) + ' ' +
           col.weights[static_cast<std::size_t>(i)].str() + " :";
    for (int e : col.sets[static_cast<std::size_t>(i)])
      out += ' ' + std::to_string(e + 1);
    out += '\n';
  }
  if (!col.set_labels.empty())
    for (int i = 0; i < col.num_sets(); ++i) {
      out += label_kw;
      out += ' ' + std::to_string(i + 1) + ' ' +
             col.set_labels[static_cast<std::size_t>(i)] + '\n';
    }
}

inline void write_ground(std::string& out, const WeightedCollection& col) {
  out += "ground " + std::to_string(col.ground_size) + '\n';
  if (!col.element_labels.empty())
    for (int e = 0; e < col.ground_size; ++e)
      out += "label " + std::to_string(e + 1) + ' ' +
             col.element_labels[static_cast<std::size_t>(e)] + '\n';
}

}  // namespace detail

inline std::string serialize_instance(const AnyInstance& any) {
  std::string out = "problem " + instance_kind(any) + '\n';
  struct V {
    std::string& out;

    void operator()(const McaInstance& m) const {
      out += "vars " + std::to_string(m.num_vars) + '\n';
      out += "domain " + std::to_string(m.domain_size) + '\n';
      for (std::size_t v = 0; v < m.colors.size(); ++v)
        out += "color " + std::to_string(v + 1) + ' ' +
               detail::color_name(m.colors[v]) + '\n';
      if (m.semantics == ConstraintSemantics::table) {
        for (int c = 0; c < m.num_constraints(); ++c) {
          const McaConstraint& ct = m.constraints[static_cast<std::size_t>(c)];
          out += "constraint " + std::to_string(c + 1) + " :";
          for (int v : ct.scope) out += ' ' + std::to_string(v + 1);
          out += '\n';
          for (std::size_t idx = 0; idx < ct.table.size(); ++idx) {
            out += "entry " + std::to_string(c + 1);
            std::size_t rest = idx;
            for (std::size_t t = 0; t < ct.scope.size(); ++t) {
              out += ' ' + std::to_string(rest % static_cast<std::size_t>(
                                                     m.domain_size) +
                                          1);
              rest /= static_cast<std::size_t>(m.domain_size);
            }
            out += ' ' + ct.table[idx].str() + '\n';
          }
        }
      } else {
        for (const McaConstraint& ct : m.constraints) {
          out += "clause " + ct.clause_weight.str() + " :";
          for (std::size_t t = 0; t < ct.scope.size(); ++t) {
            int ext = ct.scope[t] + 1;
            bool neg = m.semantics == ConstraintSemantics::cnf && ct.negated[t];
            out += ' ' + std::to_string(neg ? -ext : ext);
          }
          out += '\n';
        }
      }
    }

    void operator()(const SpInstance& i) const {
      detail::write_ground(out, i.col);
      out += "bound mB " + std::to_string(i.max_chosen) + '\n';
      detail::write_sets(out, i.col, "set", "setlabel");
    }

    void operator()(const SspInstance& i) const {
      detail::write_ground(out, i.col);
      detail::write_sets(out, i.col, "set", "setlabel");
    }

    void operator()(const ScInstance& i) const {
      detail::write_ground(out, i.col);
      detail::write_sets(out, i.col, "set", "setlabel");
    }

    void operator()(const TsInstance& i) const {
      detail::write_ground(out, i.col);
      out += "bound mB " + std::to_string(i.max_chosen) + '\n';
      out += std::string("separation ") +
             (i.separation == TsSeparation::two_sided ? "two-sided"
                                                      : "one-sided") +
             '\n';
      detail::write_sets(out, i.col, "set", "setlabel");
      int n = i.col.ground_size;
      for (int e = 0; e < n; ++e)
        for (int f = e + 1; f < n; ++f)
          out += "pairweight " + std::to_string(e + 1) + ' ' +
                 std::to_string(f + 1) + ' ' +
                 i.pair_w[pair_index(e, f, n)].str() + '\n';
    }

    void operator()(const SbInstance& i) const {
      detail::write_ground(out, i.col);
      out += "bound mC " + std::to_string(i.basis_size) + '\n';
      detail::write_sets(out, i.col, "set", "setlabel");
    }

    void operator()(const HsInstance& i) const {
      detail::write_ground(out, i.col);
      out += "bound mB " + std::to_string(i.max_chosen) + '\n';
      detail::write_sets(out, i.col, "set", "setlabel");
    }

    void operator()(const IpInstance& i) const {
      detail::write_ground(out, i.donors);
      detail::write_sets(out, i.donors, "set", "setlabel");
      for (int r = 0; r < i.dim(); ++r) {
        out += "matrixA " + std::to_string(r + 1) + " :";
        for (long long v : i.a[static_cast<std::size_t>(r)])
          out += ' ' + std::to_string(v);
        out += '\n';
      }
      for (int r = 0; r < i.dim(); ++r) {
        out += "matrixB " + std::to_string(r + 1) + " :";
        for (const Weight& v : i.b[static_cast<std::size_t>(r)])
          out += ' ' + v.str();
        out += '\n';
      }
    }

    void operator()(const CcInstance& i) const {
      detail::write_ground(out, i.m_side);
      out += "offset " + i.shift.str() + '\n';
      detail::write_sets(out, i.m_side, "set", "setlabel");
      detail::write_sets(out, i.n_side, "nset", "nsetlabel");
    }

    void operator()(const W3dmInstance& i) const {
      out += "dim " + std::to_string(i.n) + '\n';
      for (const auto& [t, w] : i.weights)
        out += "triple " + std::to_string(t[0] + 1) + ' ' +
               std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) +
               ' ' + w.str() + '\n';
    }

    void operator()(const X3cInstance& i) const {
      out += "ground " + std::to_string(i.ground_size) + '\n';
      for (const auto& [t, w] : i.weights)
        out += "triple " + std::to_string(t[0] + 1) + ' ' +
               std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) +
               ' ' + w.str() + '\n';
    }
  };
  std::visit(V{out}, any);
  return out;
}

inline std::string instance_digest(const AnyInstance& any) {
  return digest_hex(serialize_instance(any));
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

struct TokLine {
  int no = 0;
  std::vector<std::string> t;
};

inline std::vector<TokLine> tokenize(const std::string& text) {
  std::vector<TokLine> lines;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    TokLine tl;
    tl.no = no;
    std::string tok;
    while (ls >> tok) tl.t.push_back(tok);
    if (!tl.t.empty()) lines.push_back(std::move(tl));
  }
  return lines;
}

inline long long parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

inline Weight parse_weight(const std::string& tok, int line) {
  std::size_t start = tok.size() > 1 && tok[0] == '-' ? 1 : 0;
  if (tok.size() == start)
    throw ParseError(line, "expected a number, got '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError(line, "expected a number, got '" + tok + "'");
  return Weight(tok);
}

// 1-based id in [1, n] -> 0-based index.
inline int parse_id(const std::string& tok, int line, int n, const char* what) {
  long long v = parse_int(tok, line);
  if (v < 1 || v > n)
    throw ParseError(line, std::string(what) + " id " + tok + " out of range");
  return static_cast<int>(v - 1);
}

// Everything a keyword line can contribute, assembled per problem tag at the
// end so the grammar stays uniform and errors cite the offending line.
struct FileBuilder {
  int problem_line = 1;
  std::string tag;
  std::optional<int> vars, domain, ground, dim, bound_mb, bound_mc;
  std::optional<Weight> offset;
  std::optional<std::string> separation;
  std::vector<std::pair<int, VarColor>> colors;
  std::vector<std::pair<int, std::vector<int>>> constraints;  // (line, scope)
  struct Entry {
    int line, cid;
    std::vector<int> vals;
    Weight w;
  };
  std::vector<Entry> entries;
  struct Clause {
    int line;
    Weight w;
    std::vector<long long> lits;  // signed external ids
  };
  std::vector<Clause> clauses;
  struct SetLine {
    int line, id;
    Weight w;
    std::vector<long long> elems;  // external ids, range-checked at assembly
  };
  std::vector<SetLine> sets, nsets;
  std::vector<std::pair<int, std::string>> set_labels, nset_labels;
  std::vector<std::tuple<int, int, std::string>> elem_labels;  // line, id, name
  struct PairW {
    int line;
    long long e, f;
    Weight w;
  };
  std::vector<PairW> pair_weights;
  struct Row {
    int line, id;
    std::vector<std::string> vals;
  };
  std::vector<Row> rows_a, rows_b;
  struct TripleLine {
    int line;
    long long a, b, c;
    Weight w;
  };
  std::vector<TripleLine> triples;
  std::map<std::string, std::string> meta;
};

inline std::size_t expect_colon(const TokLine& l, std::size_t at) {
  if (at >= l.t.size() || l.t[at] != ":")
    throw ParseError(l.no, "expected ':' in '" + l.t[0] + "' line");
  return at + 1;
}

inline FileBuilder scan_file(const std::string& text) {
  FileBuilder fb;
  std::vector<TokLine> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty file");
  for (const TokLine& l : lines) {
    const std::string& kw = l.t[0];
    auto need = [&l](std::size_t n) {
      if (l.t.size() < n + 1)
        throw ParseError(l.no, "'" + l.t[0] + "' line is too short");
    };
    if (kw == "meta") {
      need(2);
      std::string val = l.t[2];
      for (std::size_t i = 3; i < l.t.size(); ++i) val += ' ' + l.t[i];
      fb.meta[l.t[1]] = val;
    } else if (kw == "problem") {
      need(1);
      if (!fb.tag.empty()) throw ParseError(l.no, "second 'problem' line");
      fb.tag = l.t[1];
      fb.problem_line = l.no;
    } else if (kw == "vars" || kw == "domain" || kw == "ground" ||
               kw == "dim") {
      need(1);
      long long v = parse_int(l.t[1], l.no);
      if (v < 0) throw ParseError(l.no, "'" + kw + "' must be non-negative");
      (kw == "vars"     ? fb.vars
       : kw == "domain" ? fb.domain
       : kw == "ground" ? fb.ground
                        : fb.dim) = static_cast<int>(v);
    } else if (kw == "bound") {
      need(2);
      long long v = parse_int(l.t[2], l.no);
      if (l.t[1] == "mB")
        fb.bound_mb = static_cast<int>(v);
      else if (l.t[1] == "mC")
        fb.bound_mc = static_cast<int>(v);
      else
        throw ParseError(l.no, "bound kind must be mB or mC");
    } else if (kw == "offset") {
      need(1);
      fb.offset = parse_weight(l.t[1], l.no);
    } else if (kw == "separation") {
      need(1);
      fb.separation = l.t[1];
    } else if (kw == "color") {
      need(2);
      auto c = color_of_name(l.t[2]);
      if (!c) throw ParseError(l.no, "unknown color '" + l.t[2] + "'");
      fb.colors.push_back({static_cast<int>(parse_int(l.t[1], l.no)), *c});
    } else if (kw == "constraint") {
      need(2);
      std::size_t at = expect_colon(l, 2);
      std::vector<int> scope;
      for (; at < l.t.size(); ++at)
        scope.push_back(static_cast<int>(parse_int(l.t[at], l.no)));
      if (static_cast<std::size_t>(parse_int(l.t[1], l.no)) !=
          fb.constraints.size() + 1)
        throw ParseError(l.no, "constraint ids must be sequential from 1");
      fb.constraints.push_back({l.no, std::move(scope)});
    } else if (kw == "entry") {
      need(3);
      FileBuilder::Entry e;
      e.line = l.no;
      e.cid = static_cast<int>(parse_int(l.t[1], l.no));
      for (std::size_t i = 2; i + 1 < l.t.size(); ++i)
        e.vals.push_back(static_cast<int>(parse_int(l.t[i], l.no)));
      e.w = parse_weight(l.t.back(), l.no);
      fb.entries.push_back(std::move(e));
    } else if (kw == "clause") {
      need(2);
      FileBuilder::Clause c;
      c.line = l.no;
      c.w = parse_weight(l.t[1], l.no);
      std::size_t at = expect_colon(l, 2);
      for (; at < l.t.size(); ++at) c.lits.push_back(parse_int(l.t[at], l.no));
      fb.clauses.push_back(std::move(c));
    } else if (kw == "set" || kw == "nset") {
      need(3);
      FileBuilder::SetLine s;
      s.line = l.no;
      s.id = static_cast<int>(parse_int(l.t[1], l.no));
      s.w = parse_weight(l.t[2], l.no);
      std::size_t at = expect_colon(l, 3);
      for (; at < l.t.size(); ++at) s.elems.push_back(parse_int(l.t[at], l.no));
      auto& dst = kw == "set" ? fb.sets : fb.nsets;
      if (static_cast<std::size_t>(s.id) != dst.size() + 1)
        throw ParseError(l.no, "set ids must be sequential from 1");
      dst.push_back(std::move(s));
    } else if (kw == "setlabel" || kw == "nsetlabel") {
      need(2);
      std::string name = l.t[2];
      for (std::size_t i = 3; i < l.t.size(); ++i) name += ' ' + l.t[i];
      (kw == "setlabel" ? fb.set_labels : fb.nset_labels)
          .push_back({static_cast<int>(parse_int(l.t[1], l.no)), name});
    } else if (kw == "label") {
      need(2);
      std::string name = l.t[2];
      for (std::size_t i = 3; i < l.t.size(); ++i) name += ' ' + l.t[i];
      fb.elem_labels.push_back(
          {l.no, static_cast<int>(parse_int(l.t[1], l.no)), name});
    } else if (kw == "pairweight") {
      need(3);
      fb.pair_weights.push_back({l.no, parse_int(l.t[1], l.no),
                                 parse_int(l.t[2], l.no),
                                 parse_weight(l.t[3], l.no)});
    } else if (kw == "matrixA" || kw == "matrixB") {
      need(2);
      FileBuilder::Row r;
      r.line = l.no;
      r.id = static_cast<int>(parse_int(l.t[1], l.no));
      std::size_t at = expect_colon(l, 2);
      for (; at < l.t.size(); ++at) r.vals.push_back(l.t[at]);
      (kw == "matrixA" ? fb.rows_a : fb.rows_b).push_back(std::move(r));
    } else if (kw == "triple") {
      need(4);
      fb.triples.push_back({l.no, parse_int(l.t[1], l.no),
                            parse_int(l.t[2], l.no), parse_int(l.t[3], l.no),
                            parse_weight(l.t[4], l.no)});
    } else {
      throw ParseError(l.no, "unknown keyword '" + kw + "'");
    }
  }
  if (fb.tag.empty()) throw ParseError(1, "missing 'problem' line");
  return fb;
}

inline WeightedCollection assemble_collection(
    const FileBuilder& fb, const std::vector<FileBuilder::SetLine>& set_lines,
    const std::vector<std::pair<int, std::string>>& labels) {
  if (!fb.ground)
    throw ParseError(fb.problem_line, "missing 'ground' line");
  WeightedCollection col;
  col.ground_size = *fb.ground;
  for (const auto& s : set_lines) {
    if (s.w < 0) throw ParseError(s.line, "negative set weight");
    ElemSet elems;
    for (long long e : s.elems) {
      if (e < 1 || e > col.ground_size)
        throw ParseError(s.line, "element out of ground range");
      elems.push_back(static_cast<int>(e - 1));
    }
    col.sets.push_back(make_set(std::move(elems)));
    col.weights.push_back(s.w);
  }
  if (!labels.empty()) {
    col.set_labels.assign(set_lines.size(), "");
    for (const auto& [id, name] : labels) {
      if (id < 1 || id > col.num_sets())
        throw ParseError(fb.problem_line, "set label id out of range");
      col.set_labels[static_cast<std::size_t>(id - 1)] = name;
    }
  }
  if (!fb.elem_labels.empty()) {
    col.element_labels.assign(static_cast<std::size_t>(col.ground_size), "");
    for (const auto& [line, id, name] : fb.elem_labels) {
      if (id < 1 || id > col.ground_size)
        throw ParseError(line, "element label id out of range");
      col.element_labels[static_cast<std::size_t>(id - 1)] = name;
    }
  }
  return col;
}

inline McaInstance assemble_mca(const FileBuilder& fb) {
  McaInstance m;
  if (!fb.vars) throw ParseError(fb.problem_line, "missing 'vars' line");
  m.num_vars = *fb.vars;
  m.domain_size = fb.domain.value_or(2);
  if (fb.tag == "mca" || fb.tag == "minca") {
    m.semantics = ConstraintSemantics::table;
    m.sense = fb.tag == "minca" ? Sense::minimize : Sense::maximize;
  } else if (fb.tag == "posnae") {
    m.semantics = ConstraintSemantics::nae;
    if (m.domain_size != 2)
      throw ParseError(fb.problem_line, "nae instances are binary");
  } else {
    m.semantics = ConstraintSemantics::cnf;
    if (m.domain_size != 2)
      throw ParseError(fb.problem_line, "cnf instances are binary");
  }
  if (!fb.colors.empty()) {
    m.colors.assign(static_cast<std::size_t>(m.num_vars), VarColor::none);
    for (const auto& [id, c] : fb.colors) {
      if (id < 1 || id > m.num_vars)
        throw ParseError(fb.problem_line, "color line variable out of range");
      m.colors[static_cast<std::size_t>(id - 1)] = c;
    }
  }
  if (m.semantics == ConstraintSemantics::table) {
    if (!fb.clauses.empty())
      throw ParseError(fb.clauses[0].line,
                       "table instances use constraint/entry lines");
    for (const auto& [line, ext_scope] : fb.constraints) {
      McaConstraint c;
      for (int v : ext_scope) {
        if (v < 1 || v > m.num_vars)
          throw ParseError(line, "scope variable out of range");
        c.scope.push_back(v - 1);
      }
      std::size_t cells = 1;
      for (std::size_t i = 0; i < c.scope.size(); ++i)
        cells *= static_cast<std::size_t>(m.domain_size);
      c.table.assign(cells, Weight(0));
      m.constraints.push_back(std::move(c));
    }
    for (const auto& e : fb.entries) {
      if (e.cid < 1 || e.cid > m.num_constraints())
        throw ParseError(e.line, "entry constraint id out of range");
      McaConstraint& c = m.constraints[static_cast<std::size_t>(e.cid - 1)];
      if (e.vals.size() != c.scope.size())
        throw ParseError(e.line, "entry arity mismatch");
      std::size_t idx = 0, stride = 1;
      for (int v : e.vals) {
        if (v < 1 || v > m.domain_size)
          throw ParseError(e.line, "entry value out of domain");
        idx += static_cast<std::size_t>(v - 1) * stride;
        stride *= static_cast<std::size_t>(m.domain_size);
      }
      if (e.w < 0) throw ParseError(e.line, "negative table entry");
      c.table[idx] = e.w;
    }
  } else {
    if (!fb.constraints.empty() || !fb.entries.empty())
      throw ParseError(fb.problem_line,
                       "clause instances use 'clause' lines only");
    for (const auto& cl : fb.clauses) {
      McaConstraint c;
      c.clause_weight = cl.w;
      if (cl.w < 0) throw ParseError(cl.line, "negative clause weight");
      for (long long lit : cl.lits) {
        long long var = lit < 0 ? -lit : lit;
        if (m.semantics == ConstraintSemantics::nae && lit < 0)
          throw ParseError(cl.line, "nae clauses have no polarity");
        if (var < 1 || var > m.num_vars)
          throw ParseError(cl.line, "clause variable out of range");
        c.scope.push_back(static_cast<int>(var - 1));
        c.negated.push_back(lit < 0);
      }
      if (m.semantics == ConstraintSemantics::nae && c.scope.size() != 2)
        throw ParseError(cl.line, "nae clauses pair exactly two variables");
      m.constraints.push_back(std::move(c));
    }
  }
  validate_mca(m);
  return m;
}

}  // namespace detail

struct ParsedFile {
  AnyInstance instance;
  std::map<std::string, std::string> meta;
};

inline ParsedFile parse_file(const std::string& text) {
  detail::FileBuilder fb = detail::scan_file(text);
  auto collection = [&fb]() {
    return detail::assemble_collection(fb, fb.sets, fb.set_labels);
  };
  auto require_bound_mb = [&fb]() {
    if (!fb.bound_mb)
      throw ParseError(fb.problem_line, "missing 'bound mB' line");
    return *fb.bound_mb;
  };

  ParsedFile out;
  out.meta = fb.meta;
  const std::string& tag = fb.tag;
  if (tag == "mca" || tag == "minca" || tag == "posnae" || tag == "cnf") {
    out.instance = detail::assemble_mca(fb);
  } else if (tag == "sp") {
    SpInstance i;
    i.col = collection();
    i.max_chosen = require_bound_mb();
    validate_sp(i);
    out.instance = std::move(i);
  } else if (tag == "ssp") {
    SspInstance i;
    i.col = collection();
    validate_ssp(i);
    out.instance = std::move(i);
  } else if (tag == "sc") {
    ScInstance i;
    i.col = collection();
    validate_sc(i);
    out.instance = std::move(i);
  } else if (tag == "ts") {
    TsInstance i;
    i.col = collection();
    i.max_chosen = require_bound_mb();
    if (fb.separation) {
      if (*fb.separation == "two-sided")
        i.separation = TsSeparation::two_sided;
      else if (*fb.separation == "one-sided")
        i.separation = TsSeparation::one_sided;
      else
        throw ParseError(fb.problem_line, "separation must be two-sided or "
                                          "one-sided");
    }
    int n = i.col.ground_size;
    i.pair_w.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Weight(0));
    for (const auto& pw : fb.pair_weights) {
      if (pw.e < 1 || pw.e > n || pw.f < 1 || pw.f > n || pw.e == pw.f)
        throw ParseError(pw.line, "pairweight elements out of range");
      int e = static_cast<int>(pw.e - 1), f = static_cast<int>(pw.f - 1);
      if (e > f) std::swap(e, f);
      i.pair_w[pair_index(e, f, n)] = pw.w;
    }
    validate_ts(i);
    out.instance = std::move(i);
  } else if (tag == "sb") {
    SbInstance i;
    i.col = collection();
    if (!fb.bound_mc)
      throw ParseError(fb.problem_line, "missing 'bound mC' line");
    i.basis_size = *fb.bound_mc;
    validate_sb(i);
    out.instance = std::move(i);
  } else if (tag == "hs") {
    HsInstance i;
    i.col = collection();
    i.max_chosen = require_bound_mb();
    validate_hs(i);
    out.instance = std::move(i);
  } else if (tag == "ip") {
    IpInstance i;
    i.donors = collection();
    int n = static_cast<int>(fb.rows_a.size());
    if (fb.rows_b.size() != fb.rows_a.size())
      throw ParseError(fb.problem_line, "matrixA/matrixB row count mismatch");
    i.a.assign(static_cast<std::size_t>(n),
               std::vector<long long>(static_cast<std::size_t>(n), 0));
    i.b.assign(static_cast<std::size_t>(n),
               std::vector<Weight>(static_cast<std::size_t>(n), 0));
    for (const auto& row : fb.rows_a) {
      if (row.id < 1 || row.id > n)
        throw ParseError(row.line, "matrix row id out of range");
      if (static_cast<int>(row.vals.size()) != n)
        throw ParseError(row.line, "matrix row width mismatch");
      for (int j = 0; j < n; ++j)
        i.a[static_cast<std::size_t>(row.id - 1)][static_cast<std::size_t>(j)] =
            detail::parse_int(row.vals[static_cast<std::size_t>(j)], row.line);
    }
    for (const auto& row : fb.rows_b) {
      if (row.id < 1 || row.id > n)
        throw ParseError(row.line, "matrix row id out of range");
      if (static_cast<int>(row.vals.size()) != n)
        throw ParseError(row.line, "matrix row width mismatch");
      for (int j = 0; j < n; ++j)
        i.b[static_cast<std::size_t>(row.id - 1)][static_cast<std::size_t>(j)] =
            detail::parse_weight(row.vals[static_cast<std::size_t>(j)],
                                 row.line);
    }
    validate_ip(i);
    out.instance = std::move(i);
  } else if (tag == "cc") {
    CcInstance i;
    i.m_side = detail::assemble_collection(fb, fb.sets, fb.set_labels);
    i.n_side = detail::assemble_collection(fb, fb.nsets, fb.nset_labels);
    i.shift = fb.offset.value_or(Weight(0));
    validate_cc(i);
    out.instance = std::move(i);
  } else if (tag == "w3dm") {
    W3dmInstance i;
    if (!fb.dim) throw ParseError(fb.problem_line, "missing 'dim' line");
    i.n = *fb.dim;
    for (const auto& t : fb.triples) {
      if (t.a < 1 || t.a > i.n || t.b < 1 || t.b > i.n || t.c < 1 || t.c > i.n)
        throw ParseError(t.line, "triple coordinate out of range");
      i.weights[{static_cast<int>(t.a - 1), static_cast<int>(t.b - 1),
                 static_cast<int>(t.c - 1)}] = t.w;
    }
    validate_w3dm(i);
    out.instance = std::move(i);
  } else if (tag == "x3c") {
    X3cInstance i;
    if (!fb.ground) throw ParseError(fb.problem_line, "missing 'ground' line");
    i.ground_size = *fb.ground;
    for (const auto& t : fb.triples) {
      if (t.a < 1 || t.a > i.ground_size || t.b < 1 || t.b > i.ground_size ||
          t.c < 1 || t.c > i.ground_size)
        throw ParseError(t.line, "triple element out of range");
      i.weights[{static_cast<int>(t.a - 1), static_cast<int>(t.b - 1),
                 static_cast<int>(t.c - 1)}] = t.w;
    }
    validate_x3c(i);
    out.instance = std::move(i);
  } else {
    throw ParseError(fb.problem_line, "unknown problem tag '" + tag + "'");
  }
  return out;
}

inline AnyInstance parse_instance(const std::string& text) {
  return parse_file(text).instance;
}

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

inline std::string serialize_solution(const Solution& sol) {
  struct V {
    std::string operator()(const CollectionSubset& s) const {
      std::string out = "solution collection :";
      for (int i : s.indices) out += ' ' + std::to_string(i + 1);
      return out + '\n';
    }
    std::string operator()(const ElementSubset& s) const {
      std::string out = "solution elements :";
      for (int e : s.elements) out += ' ' + std::to_string(e + 1);
      return out + '\n';
    }
    std::string operator()(const Partition& s) const {
      // Elements in the second class; everything else is in the first.
      std::string out =
          "solution partition " + std::to_string(s.side.size()) + " :";
      for (std::size_t e = 0; e < s.side.size(); ++e)
        if (s.side[e]) out += ' ' + std::to_string(e + 1);
      return out + '\n';
    }
    std::string operator()(const SetVector& s) const {
      std::string out = "solution vector :";
      for (int d : s.donor) out += ' ' + std::to_string(d + 1);
      return out + '\n';
    }
    std::string operator()(const BasisFamily& s) const {
      std::string out = "solution basis\n";
      for (const ElemSet& m : s.members) {
        out += "member :";
        for (int e : m) out += ' ' + std::to_string(e + 1);
        out += '\n';
      }
      return out;
    }
    std::string operator()(const Matching& s) const {
      std::string out = "solution matching\n";
      for (const Triple& t : s.triples)
        out += "triple " + std::to_string(t[0] + 1) + ' ' +
               std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) + '\n';
      return out;
    }
  };
  return std::visit(V{}, sol);
}

inline Solution parse_solution(const std::string& text) {
  std::vector<detail::TokLine> lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty solution");
  const detail::TokLine& head = lines[0];
  if (head.t[0] != "solution" || head.t.size() < 2)
    throw ParseError(head.no, "expected 'solution <form> ...'");
  const std::string& form = head.t[1];

  auto ids_after_colon = [](const detail::TokLine& l, std::size_t at) {
    at = detail::expect_colon(l, at);
    std::vector<long long> ids;
    for (; at < l.t.size(); ++at)
      ids.push_back(detail::parse_int(l.t[at], l.no));
    return ids;
  };

  if (form == "collection" || form == "elements" || form == "vector") {
    if (lines.size() != 1)
      throw ParseError(lines[1].no, "unexpected extra line");
    std::vector<long long> ids = ids_after_colon(head, 2);
    std::vector<int> zero_based;
    for (long long v : ids) {
      if (v < 1) throw ParseError(head.no, "ids are 1-based");
      zero_based.push_back(static_cast<int>(v - 1));
    }
    if (form == "collection") {
      CollectionSubset s;
      s.indices = zero_based;
      canonicalize(s);
      return s;
    }
    if (form == "elements") {
      ElementSubset s;
      s.elements = make_set(std::move(zero_based));
      return s;
    }
    SetVector s;
    s.donor = zero_based;
    return s;
  }
  if (form == "partition") {
    if (head.t.size() < 3)
      throw ParseError(head.no, "partition needs its ground size");
    long long n = detail::parse_int(head.t[2], head.no);
    if (n < 0) throw ParseError(head.no, "negative ground size");
    if (lines.size() != 1)
      throw ParseError(lines[1].no, "unexpected extra line");
    Partition s;
    s.side.assign(static_cast<std::size_t>(n), 0);
    for (long long e : ids_after_colon(head, 3)) {
      if (e < 1 || e > n)
        throw ParseError(head.no, "partition element out of range");
      s.side[static_cast<std::size_t>(e - 1)] = 1;
    }
    return s;
  }
  if (form == "basis") {
    BasisFamily s;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const detail::TokLine& l = lines[i];
      if (l.t[0] != "member")
        throw ParseError(l.no, "expected 'member : ...' lines");
      std::vector<int> elems;
      for (long long e : ids_after_colon(l, 1)) {
        if (e < 1) throw ParseError(l.no, "ids are 1-based");
        elems.push_back(static_cast<int>(e - 1));
      }
      s.members.push_back(make_set(std::move(elems)));
    }
    canonicalize(s);
    return s;
  }
  if (form == "matching") {
    Matching s;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const detail::TokLine& l = lines[i];
      if (l.t[0] != "triple" || l.t.size() < 4)
        throw ParseError(l.no, "expected 'triple a b c' lines");
      Triple t;
      for (int j = 0; j < 3; ++j) {
        long long v =
            detail::parse_int(l.t[static_cast<std::size_t>(j + 1)], l.no);
        if (v < 1) throw ParseError(l.no, "ids are 1-based");
        t[static_cast<std::size_t>(j)] = static_cast<int>(v - 1);
      }
      s.triples.push_back(t);
    }
    std::sort(s.triples.begin(), s.triples.end());
    return s;
  }
  throw ParseError(head.no, "unknown solution form '" + form + "'");
}

// ---------------------------------------------------------------------------
// Constructed instances travel as the target instance plus meta lines that
// let the construction be re-derived and cross-checked.
// ---------------------------------------------------------------------------

inline std::string serialize_reduction(const ReductionOutput& red) {
  std::string out = serialize_instance(reduction_target(red));
  out += "meta reduction " + reduction_kind(red) + '\n';
  out += "meta source-digest " +
         instance_digest(AnyInstance(reduction_source(red))) + '\n';
  if (const auto* ts = std::get_if<TsReduction>(&red)) {
    out += std::string("meta scheme ") +
           (ts->scheme == TsScheme::corrected ? "corrected" : "paper-literal") +
           '\n';
  }
  if (const auto* w = std::get_if<W3dmReduction>(&red))
    out += "meta medium-factor " + std::to_string(w->medium_factor) + '\n';
  if (const auto* x = std::get_if<X3cReduction>(&red))
    out += "meta medium-factor " + std::to_string(x->inner.medium_factor) +
           '\n';
  return out;
}

}  // namespace plslab
