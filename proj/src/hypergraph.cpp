#include "hypergraph.hpp"

#include <cassert>

namespace aegg {

Hypergraph::Hypergraph(FinSet edges_in, FinSet nodes_in, std::vector<Word> srcs_in,
                       std::vector<Word> tgts_in)
    : edges(std::move(edges_in)),
      nodes(std::move(nodes_in)),
      srcs(std::move(srcs_in)),
      tgts(std::move(tgts_in)) {
  if (srcs.size() != edges.size() || tgts.size() != edges.size())
    throw Error("Hypergraph: incidence tables must cover exactly the edge set");
  auto check_table = [this](const std::vector<Word>& table) {
    for (const Word& w : table)
      for (ElemId v : w)
        if (!nodes.contains(v))
          throw Error("Hypergraph: incidence letter " + std::to_string(v) +
                      " is not a node");
  };
  check_table(srcs);
  check_table(tgts);
}

Hypergraph Hypergraph::discrete(FinSet nodes_in) {
  return Hypergraph(FinSet{}, std::move(nodes_in), {}, {});
}

HypMorphism identity_morphism(const Hypergraph& g) {
  return HypMorphism{FinFn::identity(g.edges), FinFn::identity(g.nodes)};
}

HypMorphism compose(const HypMorphism& g, const HypMorphism& f) {
  return HypMorphism{compose(g.edge_map, f.edge_map),
                     compose(g.node_map, f.node_map)};
}

bool validate_morphism(const HypMorphism& m, const Hypergraph& g,
                       const Hypergraph& h) {
  if (m.edge_map.dom() != g.edges || m.node_map.dom() != g.nodes ||
      m.edge_map.cod() != h.edges || m.node_map.cod() != h.nodes)
    throw Error("validate_morphism: carrier mismatch");
  for (ElemId e : g.edges) {
    ElemId he = m.edge_map(e);
    if (m.node_map.map_word(g.src(e)) != h.src(he)) return false;
    if (m.node_map.map_word(g.tgt(e)) != h.tgt(he)) return false;
  }
  return true;
}

bool is_mono_hyp(const HypMorphism& m) {
  return m.edge_map.is_injective() && m.node_map.is_injective();
}

HypPushout pushout_hyp(const Hypergraph& g0, const Hypergraph& g1,
                       const Hypergraph& g2, const HypMorphism& f,
                       const HypMorphism& g) {
  if (!validate_morphism(f, g0, g1) || !validate_morphism(g, g0, g2))
    throw Error("pushout_hyp: legs are not hypergraph morphisms");
  CospanResult e = pushout(f.edge_map, g.edge_map);
  CospanResult v = pushout(f.node_map, g.node_map);

  std::vector<Word> srcs(e.apex.size()), tgts(e.apex.size());
  std::vector<bool> filled(e.apex.size(), false);
  auto fill_from = [&](const Hypergraph& gi, const FinFn& edge_leg,
                       const FinFn& node_leg) {
    for (ElemId ei : gi.edges) {
      std::size_t idx = e.apex.index_of(edge_leg(ei));
      Word s = node_leg.map_word(gi.src(ei));
      Word t = node_leg.map_word(gi.tgt(ei));
      if (filled[idx]) {
        assert(srcs[idx] == s && tgts[idx] == t);
      } else {
        srcs[idx] = std::move(s);
        tgts[idx] = std::move(t);
        filled[idx] = true;
      }
    }
  };
  fill_from(g1, e.left, v.left);
  fill_from(g2, e.right, v.right);

  Hypergraph apex(e.apex, v.apex, std::move(srcs), std::move(tgts));
  return HypPushout{std::move(apex), HypMorphism{e.left, v.left},
                    HypMorphism{e.right, v.right}};
}

HypPullback pullback_hyp(const Hypergraph& g1, const Hypergraph& g2,
                         const Hypergraph& g3, const HypMorphism& f,
                         const HypMorphism& g) {
  if (!validate_morphism(f, g1, g3) || !validate_morphism(g, g2, g3))
    throw Error("pullback_hyp: legs are not hypergraph morphisms");
  SpanResult e = pullback(f.edge_map, g.edge_map);
  SpanResult v = pullback(f.node_map, g.node_map);

  // Pair-of-letters lookup into the node apex.
  auto pair_node = [&](ElemId a, ElemId b) {
    for (ElemId p : v.apex)
      if (v.left(p) == a && v.right(p) == b) return p;
    throw Error("pullback_hyp: incidence pair missing from node pullback");
  };

  std::vector<Word> srcs, tgts;
  srcs.reserve(e.apex.size());
  tgts.reserve(e.apex.size());
  for (ElemId ep : e.apex) {
    ElemId e1 = e.left(ep), e2 = e.right(ep);
    const Word &s1 = g1.src(e1), &s2 = g2.src(e2);
    const Word &t1 = g1.tgt(e1), &t2 = g2.tgt(e2);
    assert(s1.size() == s2.size() && t1.size() == t2.size());
    Word s, t;
    for (std::size_t i = 0; i < s1.size(); ++i) s.push_back(pair_node(s1[i], s2[i]));
    for (std::size_t i = 0; i < t1.size(); ++i) t.push_back(pair_node(t1[i], t2[i]));
    srcs.push_back(std::move(s));
    tgts.push_back(std::move(t));
  }

  Hypergraph apex(e.apex, v.apex, std::move(srcs), std::move(tgts));
  return HypPullback{std::move(apex), HypMorphism{e.left, v.left},
                     HypMorphism{e.right, v.right}};
}

}  // namespace aegg
