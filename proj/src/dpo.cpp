#include "dpo.hpp"

#include <algorithm>
#include <cassert>

#include "unionfind.hpp"

namespace aegg {

// ---------------------------------------------------------------------------
// Rule compilation
// ---------------------------------------------------------------------------

namespace {

enum class BuildMode { Lhs, Rhs, Nac };

struct PatternBuilder {
  const Signature& sig;
  std::vector<std::string> labels;
  std::vector<Word> srcs, tgts;
  std::size_t node_count = 0;
  std::vector<std::pair<ElemId, ElemId>> links;  // nodes forced into one class
  std::map<std::string, ElemId> var_first;

  explicit PatternBuilder(const Signature& s) : sig(s) {}

  ElemId fresh_node() { return static_cast<ElemId>(node_count++); }

  ElemId build(const Term& t, BuildMode mode) {
    if (!sig.contains(t.symbol)) {
      if (!t.children.empty())
        throw Error("rule pattern: unknown operator " + t.symbol);
      auto it = var_first.find(t.symbol);
      switch (mode) {
        case BuildMode::Lhs: {
          ElemId v = fresh_node();
          if (it == var_first.end())
            var_first.emplace(t.symbol, v);
          else
            links.emplace_back(it->second, v);
          return v;
        }
        case BuildMode::Rhs:
          if (it == var_first.end())
            throw Error("rule pattern: unbound right-hand variable " + t.symbol);
          return it->second;
        case BuildMode::Nac: {
          if (it != var_first.end()) return it->second;
          ElemId v = fresh_node();
          var_first.emplace(t.symbol, v);
          return v;
        }
      }
    }
    auto ar = sig.arity(t.symbol);
    if (*ar != t.children.size())
      throw Error("rule pattern: arity mismatch for " + t.symbol);
    ElemId out = fresh_node();
    std::size_t eidx = labels.size();
    labels.push_back(t.symbol);
    srcs.emplace_back();
    tgts.push_back(Word{out});
    for (const Term& child : t.children) {
      ElemId r = build(child, mode);
      ElemId attach = r;
      if (mode == BuildMode::Lhs && sig.contains(child.symbol)) {
        // Read operator arguments through a port node equivalent to the
        // argument's root, so matches only need equality of classes.
        attach = fresh_node();
        links.emplace_back(attach, r);
      }
      srcs[eidx].push_back(attach);
    }
    return out;
  }

  LabelledEqHypergraph materialize() const {
    FinSet edges = FinSet::range(labels.size());
    FinSet nodes = FinSet::range(node_count);
    Hypergraph h(edges, nodes, srcs, tgts);
    UnionFind uf(node_count);
    for (auto [a, b] : links) uf.unite(a, b);
    std::map<std::size_t, ElemId> rep_to_cls;
    std::vector<ElemId> q(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
      auto [it, _] = rep_to_cls.emplace(uf.find(i), static_cast<ElemId>(rep_to_cls.size()));
      q[i] = it->second;
    }
    FinSet classes = FinSet::range(rep_to_cls.size());
    EqHypergraph eq(std::move(h), classes, FinFn(nodes, classes, std::move(q)));
    return rebuild(LabelledEqHypergraph(std::move(eq), labels, sig));
  }
};

// Inclusion of an earlier pattern stage into a later one built on top of it.
EqMorphism stage_embedding(const LabelledEqHypergraph& small,
                           const LabelledEqHypergraph& big) {
  FinFn edge = FinFn::inclusion(small.eq.graph.edges, big.eq.graph.edges);
  FinFn node = FinFn::inclusion(small.eq.graph.nodes, big.eq.graph.nodes);
  auto cls = induced_class_map(node, small.eq, big.eq);
  if (!cls) throw Error("rule compilation: stage classes are inconsistent");
  return EqMorphism{std::move(edge), std::move(node), std::move(*cls)};
}

void check_rule_embedding(const Rule& rule) {
  const auto& l = rule.lhs.base;
  const auto& r = rule.rhs.base;
  if (!validate_eq_morphism(rule.embed, l.eq, r.eq) ||
      !labels_compatible(rule.embed, l, r))
    throw Error("rule " + rule.name + ": right leg is not a morphism");
  if (!rule.embed.edge_map.is_injective() || !rule.embed.node_map.is_injective())
    throw Error("rule " + rule.name + ": right leg must embed the left-hand side");
  FinSet lin = input_nodes(l.labelling());
  FinSet rin = input_nodes(r.labelling());
  for (ElemId v : lin)
    if (!rin.contains(rule.embed.node_map(v)))
      throw Error("rule " + rule.name + ": right leg must preserve input nodes");
}

}  // namespace

Rule compile_rule(const RuleSpec& spec, const Signature& sig) {
  PatternBuilder builder(sig);
  ElemId lroot = builder.build(spec.lhs, BuildMode::Lhs);
  PatternBuilder lhs_stage = builder;  // snapshot before the right-hand side

  Rule rule;
  rule.name = spec.name;
  rule.lhs = EGraph(lhs_stage.materialize());

  ElemId rroot = builder.build(spec.rhs, BuildMode::Rhs);
  builder.links.emplace_back(lroot, rroot);
  LabelledEqHypergraph rhs = builder.materialize();
  rule.rhs = EGraph(rhs);
  rule.embed = stage_embedding(rule.lhs.base, rhs);

  if (spec.nacs.empty()) {
    rule.nacs.push_back(Rule::Nac{rule.rhs, rule.embed});
    rule.nacs_declared = false;
  } else {
    rule.nacs_declared = true;
    for (const Term& pattern : spec.nacs) {
      PatternBuilder nb = lhs_stage;
      ElemId nroot = nb.build(pattern, BuildMode::Nac);
      nb.links.emplace_back(lroot, nroot);
      LabelledEqHypergraph n = nb.materialize();
      EqMorphism embed = stage_embedding(rule.lhs.base, n);
      rule.nacs.push_back(Rule::Nac{EGraph(n), std::move(embed)});
    }
  }
  check_rule_embedding(rule);
  return rule;
}

std::vector<Rule> compile_rules(const std::string& rules_text, const Signature& sig) {
  std::vector<Rule> out;
  for (const RuleSpec& spec : parse_rules(rules_text)) {
    for (const Rule& r : out)
      if (r.name == spec.name)
        throw Error("duplicate rule name " + spec.name);
    out.push_back(compile_rule(spec, sig));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

MatchClass match_class_from_string(const std::string& s) {
  if (s == "any") return MatchClass::Any;
  if (s == "mono") return MatchClass::Mono;
  if (s == "pb") return MatchClass::Pb;
  throw Error("unknown match class " + s + " (expected any, mono or pb)");
}

std::string to_string(MatchClass c) {
  switch (c) {
    case MatchClass::Any: return "any";
    case MatchClass::Mono: return "mono";
    case MatchClass::Pb: return "pb";
  }
  return "?";
}

namespace {

struct MatchSearch {
  const LabelledEqHypergraph& p;
  const LabelledEqHypergraph& t;
  bool first_only;
  std::vector<int> edge_img;  // -1 unassigned, else target edge index
  std::vector<int> node_img;
  std::vector<EqMorphism> found;

  MatchSearch(const LabelledEqHypergraph& p_in, const LabelledEqHypergraph& t_in,
              bool first)
      : p(p_in),
        t(t_in),
        first_only(first),
        edge_img(p.eq.graph.edges.size(), -1),
        node_img(p.eq.graph.nodes.size(), -1) {}

  bool done() const { return first_only && !found.empty(); }

  bool assign_nodes(const Word& pw, const Word& tw,
                    std::vector<std::size_t>& trail) {
    if (pw.size() != tw.size()) return false;
    for (std::size_t i = 0; i < pw.size(); ++i) {
      std::size_t pi = p.eq.graph.nodes.index_of(pw[i]);
      int ti = static_cast<int>(t.eq.graph.nodes.index_of(tw[i]));
      if (node_img[pi] == ti) continue;
      if (node_img[pi] != -1) return false;
      node_img[pi] = ti;
      trail.push_back(pi);
    }
    return true;
  }

  void undo(const std::vector<std::size_t>& trail) {
    for (std::size_t pi : trail) node_img[pi] = -1;
  }

  void match_edges(std::size_t e) {
    if (done()) return;
    if (e == p.eq.graph.edges.size()) {
      match_free_nodes(0);
      return;
    }
    if (edge_img[e] != -1) {  // pinned
      std::size_t ti = static_cast<std::size_t>(edge_img[e]);
      if (p.labels[e] != t.labels[ti]) return;
      std::vector<std::size_t> trail;
      if (assign_nodes(p.eq.graph.srcs[e], t.eq.graph.srcs[ti], trail) &&
          assign_nodes(p.eq.graph.tgts[e], t.eq.graph.tgts[ti], trail))
        match_edges(e + 1);
      undo(trail);
      return;
    }
    for (std::size_t ti = 0; ti < t.eq.graph.edges.size(); ++ti) {
      if (done()) return;
      if (p.labels[e] != t.labels[ti]) continue;
      std::vector<std::size_t> trail;
      edge_img[e] = static_cast<int>(ti);
      if (assign_nodes(p.eq.graph.srcs[e], t.eq.graph.srcs[ti], trail) &&
          assign_nodes(p.eq.graph.tgts[e], t.eq.graph.tgts[ti], trail))
        match_edges(e + 1);
      undo(trail);
      edge_img[e] = -1;
    }
  }

  void match_free_nodes(std::size_t from) {
    if (done()) return;
    std::size_t i = from;
    while (i < node_img.size() && node_img[i] != -1) ++i;
    if (i == node_img.size()) {
      emit();
      return;
    }
    for (std::size_t ti = 0; ti < t.eq.graph.nodes.size(); ++ti) {
      if (done()) return;
      node_img[i] = static_cast<int>(ti);
      match_free_nodes(i + 1);
      node_img[i] = -1;
    }
  }

  void emit() {
    // class consistency: all nodes of one pattern class must land in one
    // target class
    std::vector<ElemId> node_images(node_img.size());
    for (std::size_t i = 0; i < node_img.size(); ++i)
      node_images[i] = t.eq.graph.nodes.at(static_cast<std::size_t>(node_img[i]));
    FinFn node_map(p.eq.graph.nodes, t.eq.graph.nodes, node_images);
    auto cls = induced_class_map(node_map, p.eq, t.eq);
    if (!cls) return;
    std::vector<ElemId> edge_images(edge_img.size());
    for (std::size_t i = 0; i < edge_img.size(); ++i)
      edge_images[i] = t.eq.graph.edges.at(static_cast<std::size_t>(edge_img[i]));
    FinFn edge_map(p.eq.graph.edges, t.eq.graph.edges, edge_images);
    found.push_back(EqMorphism{std::move(edge_map), std::move(node_map),
                               std::move(*cls)});
  }
};

}  // namespace

std::vector<EqMorphism> enumerate_morphisms(
    const LabelledEqHypergraph& pattern, const LabelledEqHypergraph& target,
    const std::map<ElemId, ElemId>& edge_pins,
    const std::map<ElemId, ElemId>& node_pins, bool first_only) {
  if (pattern.eq.graph.nodes.size() > 0 && target.eq.graph.nodes.empty() &&
      !pattern.eq.graph.nodes.empty())
    return {};
  MatchSearch search(pattern, target, first_only);
  for (auto [pe, te] : edge_pins)
    search.edge_img[pattern.eq.graph.edges.index_of(pe)] =
        static_cast<int>(target.eq.graph.edges.index_of(te));
  for (auto [pv, tv] : node_pins)
    search.node_img[pattern.eq.graph.nodes.index_of(pv)] =
        static_cast<int>(target.eq.graph.nodes.index_of(tv));
  search.match_edges(0);
  std::sort(search.found.begin(), search.found.end(),
            [](const EqMorphism& a, const EqMorphism& b) {
              if (a.edge_map.images() != b.edge_map.images())
                return a.edge_map.images() < b.edge_map.images();
              return a.node_map.images() < b.node_map.images();
            });
  return std::move(search.found);
}

namespace {

bool class_saturated(const EqMorphism& m, const EqHypergraph& g,
                     const EqHypergraph& h) {
  // every node of an image class is hit by the node component
  for (ElemId v : h.graph.nodes) {
    ElemId cls = h.quotient(v);
    bool in_image_class = false;
    for (ElemId c : g.classes)
      if (m.class_map(c) == cls) {
        in_image_class = true;
        break;
      }
    if (!in_image_class) continue;
    bool hit = false;
    for (ElemId w : g.graph.nodes)
      if (m.node_map(w) == v) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool match_in_class(const EqMorphism& m, const EGraph& lhs, const EGraph& g,
                    MatchClass cls) {
  switch (cls) {
    case MatchClass::Any:
      return true;
    case MatchClass::Mono:
      return m.class_map.is_injective();
    case MatchClass::Pb:
      return m.class_map.is_injective() &&
             class_saturated(m, lhs.base.eq, g.base.eq);
  }
  return false;
}

bool nac_blocks(const Rule::Nac& nac, const EGraph& lhs, const EqMorphism& m,
                const EGraph& g) {
  std::map<ElemId, ElemId> edge_pins, node_pins;
  for (ElemId e : lhs.base.eq.graph.edges)
    edge_pins[nac.embed.edge_map(e)] = m.edge_map(e);
  for (ElemId v : lhs.base.eq.graph.nodes)
    node_pins[nac.embed.node_map(v)] = m.node_map(v);
  return !enumerate_morphisms(nac.graph.base, g.base, edge_pins, node_pins,
                              /*first_only=*/true)
              .empty();
}

}  // namespace

std::vector<DpoMatch> find_matches(const Rule& rule, const EGraph& g,
                                   MatchClass cls) {
  if (rule.lhs.sig() != g.sig())
    throw Error("find_matches: signature mismatch");
  std::vector<DpoMatch> out;
  for (EqMorphism& m : enumerate_morphisms(rule.lhs.base, g.base)) {
    if (!match_in_class(m, rule.lhs, g, cls)) continue;
    bool blocked = false;
    for (const Rule::Nac& nac : rule.nacs)
      if (nac_blocks(nac, rule.lhs, m, g)) {
        blocked = true;
        break;
      }
    if (!blocked) out.push_back(DpoMatch{std::move(m)});
  }
  return out;
}

bool effect_present(const Rule& rule, const DpoMatch& match, const EGraph& g) {
  Rule::Nac as_nac{rule.rhs, rule.embed};
  return nac_blocks(as_nac, rule.lhs, match.map, g);
}

// ---------------------------------------------------------------------------
// Pushout complement and rule application
// ---------------------------------------------------------------------------

ComplementResult pushout_complement(const LabelledEqHypergraph& k,
                                    const LabelledEqHypergraph& l,
                                    const LabelledEqHypergraph& g,
                                    const EqMorphism& leg, const EqMorphism& m) {
  if (!validate_eq_morphism(leg, k.eq, l.eq) || !labels_compatible(leg, k, l))
    throw Error("pushout_complement: left leg is not a morphism");
  if (!validate_eq_morphism(m, l.eq, g.eq) || !labels_compatible(m, l, g))
    throw Error("pushout_complement: match is not a morphism");
  if (!is_pb_mono(leg, k.eq, l.eq))
    throw Error("pushout_complement: left leg must be a mono in Pb");

  // Items of L outside the image of K.
  auto outside = [](const FinFn& f, const FinSet& cod) {
    std::vector<ElemId> out;
    for (ElemId y : cod) {
      bool hit = false;
      for (ElemId x : f.dom())
        if (f(x) == y) {
          hit = true;
          break;
        }
      if (!hit) out.push_back(y);
    }
    return out;
  };
  std::vector<ElemId> del_edges_l = outside(leg.edge_map, l.eq.graph.edges);
  std::vector<ElemId> del_nodes_l = outside(leg.node_map, l.eq.graph.nodes);

  // Identification condition: a deleted item may not share its image with
  // any other item of L.
  for (ElemId x : del_edges_l)
    for (ElemId y : l.eq.graph.edges)
      if (y != x && m.edge_map(y) == m.edge_map(x))
        throw IdentificationCondition("deleted edge identified with another edge");
  for (ElemId x : del_nodes_l)
    for (ElemId y : l.eq.graph.nodes)
      if (y != x && m.node_map(y) == m.node_map(x))
        throw IdentificationCondition("deleted node identified with another node");

  std::vector<ElemId> del_edges, del_nodes;
  for (ElemId x : del_edges_l) del_edges.push_back(m.edge_map(x));
  for (ElemId x : del_nodes_l) del_nodes.push_back(m.node_map(x));
  auto deleted = [](const std::vector<ElemId>& v, ElemId x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  // Dangling condition: kept edges may not mention deleted nodes.
  std::vector<ElemId> kept_edges, kept_nodes;
  for (ElemId e : g.eq.graph.edges) {
    if (deleted(del_edges, e)) continue;
    for (const Word* w : {&g.eq.graph.src(e), &g.eq.graph.tgt(e)})
      for (ElemId v : *w)
        if (deleted(del_nodes, v))
          throw DanglingCondition("kept edge " + std::to_string(e) +
                                  " references a deleted node");
    kept_edges.push_back(e);
  }
  for (ElemId v : g.eq.graph.nodes)
    if (!deleted(del_nodes, v)) kept_nodes.push_back(v);

  FinSet edges(kept_edges), nodes(kept_nodes);
  std::vector<Word> srcs, tgts;
  std::vector<std::string> labels;
  for (ElemId e : edges) {
    srcs.push_back(g.eq.graph.src(e));
    tgts.push_back(g.eq.graph.tgt(e));
    labels.push_back(g.label(e));
  }
  Hypergraph ch(edges, nodes, std::move(srcs), std::move(tgts));
  std::vector<ElemId> cls_ids;
  for (ElemId v : nodes) {
    ElemId c = g.eq.quotient(v);
    if (std::find(cls_ids.begin(), cls_ids.end(), c) == cls_ids.end())
      cls_ids.push_back(c);
  }
  std::sort(cls_ids.begin(), cls_ids.end());
  FinSet classes(cls_ids);
  std::vector<ElemId> q_img;
  for (ElemId v : nodes) q_img.push_back(g.eq.quotient(v));
  EqHypergraph ceq(std::move(ch), classes, FinFn(nodes, classes, std::move(q_img)));
  LabelledEqHypergraph context(ceq, std::move(labels), g.sig);

  EqMorphism embed{FinFn::inclusion(edges, g.eq.graph.edges),
                   FinFn::inclusion(nodes, g.eq.graph.nodes),
                   FinFn::inclusion(classes, g.eq.classes)};
  EqMorphism into_c;
  {
    std::vector<ElemId> ei, ni;
    for (ElemId e : k.eq.graph.edges) ei.push_back(m.edge_map(leg.edge_map(e)));
    for (ElemId v : k.eq.graph.nodes) ni.push_back(m.node_map(leg.node_map(v)));
    FinFn em(k.eq.graph.edges, edges, std::move(ei));
    FinFn nm(k.eq.graph.nodes, nodes, std::move(ni));
    auto cm = induced_class_map(nm, k.eq, context.eq);
    if (!cm) throw Error("pushout_complement: no class map into the context");
    into_c = EqMorphism{std::move(em), std::move(nm), std::move(*cm)};
  }

  // The completed square must be a pushout.
  EqSquare square{k.eq, l.eq, context.eq, g.eq, leg, into_c, m, embed};
  if (!certify_pushout(square))
    throw Error("pushout_complement: completed square failed certification");
  return ComplementResult{std::move(context), std::move(embed), std::move(into_c)};
}

RewriteResult apply_rule(const Rule& rule, const DpoMatch& match, const EGraph& g) {
  if (!validate_eq_morphism(match.map, rule.lhs.base.eq, g.base.eq) ||
      !labels_compatible(match.map, rule.lhs.base, g.base))
    throw Error("apply_rule: match is not a morphism");
  LabelledEqPushout po = pushout_labelled_eq(rule.lhs.base, rule.rhs.base,
                                             g.base, rule.embed, match.map);
  EqMorphism tracking = po.right;  // G -> H
  LabelledEqHypergraph h = po.apex;
  bool repaired = false;
  if (!is_e_hypergraph(h)) {
    LabelledEqHypergraph closed = rebuild(h);
    // compose the class coarsening onto the tracking morphism
    std::vector<ElemId> cls_img;
    for (ElemId c : h.eq.classes) {
      ElemId repr = 0;
      bool found = false;
      for (ElemId v : h.eq.graph.nodes)
        if (h.eq.quotient(v) == c) {
          repr = v;
          found = true;
          break;
        }
      if (!found) throw Error("apply_rule: empty class while repairing closure");
      cls_img.push_back(closed.eq.quotient(repr));
    }
    FinFn coarsen(h.eq.classes, closed.eq.classes, std::move(cls_img));
    tracking.class_map = compose(coarsen, tracking.class_map);
    h = std::move(closed);
    repaired = true;
  }
  return RewriteResult{EGraph(std::move(h)), std::move(tracking), repaired};
}

// ---------------------------------------------------------------------------
// Saturation
// ---------------------------------------------------------------------------

SaturationOutcome saturate(const EGraph& g, const std::vector<Rule>& rules,
                           const SaturationLimits& limits, MatchClass cls) {
  SaturationReport report;
  EGraph current = g;
  EqMorphism total_track = identity_eq(current.base.eq);
  for (const Rule& r : rules) report.per_rule.emplace(r.name, 0);

  while (true) {
    // Collect admissible matches against the current graph, rules first,
    // matches in canonical order within each rule.
    std::vector<std::pair<std::size_t, DpoMatch>> pending;
    for (std::size_t ri = 0; ri < rules.size(); ++ri)
      for (DpoMatch& m : find_matches(rules[ri], current, cls))
        if (!effect_present(rules[ri], m, current))
          pending.emplace_back(ri, std::move(m));
    if (pending.empty()) {
      report.fixpoint = true;
      break;
    }
    if (report.iterations >= limits.max_iters) {
      report.limit = "max-iters";
      break;
    }
    ++report.iterations;

    // Matches were found against a snapshot; transport each along the
    // tracking morphisms accumulated inside this iteration and re-validate
    // before applying.
    EqMorphism track = identity_eq(current.base.eq);
    bool limit_tripped = false;
    for (auto& [ri, match] : pending) {
      const Rule& rule = rules[ri];
      EqMorphism moved = compose(track, match.map);
      if (!match_in_class(moved, rule.lhs, current, cls)) continue;
      bool blocked = false;
      for (const Rule::Nac& nac : rule.nacs)
        if (nac_blocks(nac, rule.lhs, moved, current)) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      DpoMatch mv{moved};
      if (effect_present(rule, mv, current)) continue;
      RewriteResult res = apply_rule(rule, mv, current);
      current = std::move(res.result);
      track = compose(res.tracking, track);
      total_track = compose(res.tracking, total_track);
      ++report.applications;
      ++report.per_rule[rule.name];
      if (res.closure_repaired) ++report.rebuilds;
      if (current.base.eq.classes.size() > limits.max_classes) {
        report.limit = "max-classes";
        limit_tripped = true;
        break;
      }
      if (current.base.eq.graph.edges.size() > limits.max_edges) {
        report.limit = "max-edges";
        limit_tripped = true;
        break;
      }
    }
    if (limit_tripped) break;
  }
  return SaturationOutcome{std::move(current), std::move(total_track),
                           std::move(report)};
}

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

ElemId default_root_class(const EGraph& g) {
  const Hypergraph& h = g.base.eq.graph;
  std::vector<ElemId> candidates;
  for (ElemId c : g.base.eq.classes) {
    bool used = false;
    for (const Word& s : h.srcs) {
      for (ElemId v : s)
        if (g.base.eq.quotient(v) == c) {
          used = true;
          break;
        }
      if (used) break;
    }
    if (!used) candidates.push_back(c);
  }
  if (candidates.size() != 1)
    throw Error(candidates.empty()
                    ? "no root class: every class feeds some edge"
                    : "ambiguous root class: pass an explicit root");
  return candidates[0];
}

Term extract(const EGraph& g, ElemId root_class, const CostTable& cost) {
  if (!g.acyclic) throw Error("extract: cyclic e-graph");
  if (!g.base.eq.classes.contains(root_class))
    throw Error("unknown class " + std::to_string(root_class));
  for (const auto& [sym, c] : cost.costs)
    if (c < 1) throw Error("extract: cost of " + sym + " must be positive");

  const Hypergraph& h = g.base.eq.graph;
  const std::size_t ncls = g.base.eq.classes.size();
  std::vector<long long> best(ncls, -1);

  auto class_idx = [&](ElemId node) {
    return g.base.eq.classes.index_of(g.base.eq.quotient(node));
  };
  auto edge_cost = [&](std::size_t ei) -> long long {
    long long total = cost.of(g.base.labels[ei]);
    for (ElemId v : h.srcs[ei]) {
      long long c = best[class_idx(v)];
      if (c < 0) return -1;
      total += c;
    }
    return total;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
      long long cand = edge_cost(ei);
      if (cand < 0) continue;
      std::size_t ci = class_idx(h.tgts[ei][0]);
      if (best[ci] < 0 || cand < best[ci]) {
        best[ci] = cand;
        changed = true;
      }
    }
  }

  std::size_t root_idx = g.base.eq.classes.index_of(root_class);
  if (best[root_idx] < 0)
    throw Error("class " + std::to_string(root_class) +
                " has no finite-cost derivation");

  std::vector<std::optional<Term>> memo(ncls);
  auto term_of = [&](auto&& self, std::size_t ci) -> const Term& {
    if (memo[ci]) return *memo[ci];
    std::optional<Term> chosen;
    for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
      if (class_idx(h.tgts[ei][0]) != ci) continue;
      if (edge_cost(ei) != best[ci]) continue;
      Term t{g.base.labels[ei], {}};
      for (ElemId v : h.srcs[ei]) t.children.push_back(self(self, class_idx(v)));
      if (!chosen || t < *chosen) chosen = std::move(t);
    }
    if (!chosen) throw Error("extract: no deriving edge for a finite-cost class");
    memo[ci] = std::move(*chosen);
    return *memo[ci];
  };
  return term_of(term_of, root_idx);
}

}  // namespace aegg
