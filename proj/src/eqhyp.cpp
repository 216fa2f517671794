#include "eqhyp.hpp"

#include <cassert>

namespace aegg {

EqHypergraph::EqHypergraph(Hypergraph graph_in, FinSet classes_in, FinFn quotient_in)
    : graph(std::move(graph_in)),
      classes(std::move(classes_in)),
      quotient(std::move(quotient_in)) {
  if (quotient.dom() != graph.nodes || quotient.cod() != classes)
    throw Error("EqHypergraph: quotient carriers do not match");
  if (!quotient.is_surjective())
    throw Error("EqHypergraph: quotient map must be surjective");
}

EqHypergraph free_eq(Hypergraph h) {
  FinSet classes = h.nodes;
  FinFn q = FinFn::identity(h.nodes);
  return EqHypergraph(std::move(h), std::move(classes), std::move(q));
}

EqHypergraph indiscrete_eq(Hypergraph h) {
  if (h.nodes.empty())
    return EqHypergraph(std::move(h), FinSet{}, FinFn(FinSet{}, FinSet{}, {}));
  FinSet one = FinSet::range(1);
  FinFn q = FinFn::constant(h.nodes, one, 0);
  return EqHypergraph(std::move(h), std::move(one), std::move(q));
}

EqMorphism identity_eq(const EqHypergraph& g) {
  return EqMorphism{FinFn::identity(g.graph.edges), FinFn::identity(g.graph.nodes),
                    FinFn::identity(g.classes)};
}

EqMorphism compose(const EqMorphism& g, const EqMorphism& f) {
  return EqMorphism{compose(g.edge_map, f.edge_map),
                    compose(g.node_map, f.node_map),
                    compose(g.class_map, f.class_map)};
}

bool validate_eq_morphism(const EqMorphism& m, const EqHypergraph& g,
                          const EqHypergraph& h) {
  if (m.class_map.dom() != g.classes || m.class_map.cod() != h.classes)
    throw Error("validate_eq_morphism: class carrier mismatch");
  if (!validate_morphism(HypMorphism{m.edge_map, m.node_map}, g.graph, h.graph))
    return false;
  for (ElemId v : g.graph.nodes)
    if (m.class_map(g.quotient(v)) != h.quotient(m.node_map(v))) return false;
  return true;
}

std::optional<FinFn> induced_class_map(const FinFn& node_map,
                                       const EqHypergraph& g,
                                       const EqHypergraph& h) {
  std::vector<ElemId> images(g.classes.size());
  std::vector<bool> seen(g.classes.size(), false);
  for (ElemId v : g.graph.nodes) {
    std::size_t c = g.classes.index_of(g.quotient(v));
    ElemId target = h.quotient(node_map(v));
    if (seen[c]) {
      if (images[c] != target) return std::nullopt;
    } else {
      images[c] = target;
      seen[c] = true;
    }
  }
  // Quotients are surjective, so every class has been seen.
  return FinFn(g.classes, h.classes, std::move(images));
}

EqPushout pushout_eqhyp(const EqHypergraph& g0, const EqHypergraph& g1,
                        const EqHypergraph& g2, const EqMorphism& f,
                        const EqMorphism& g) {
  if (!validate_eq_morphism(f, g0, g1) || !validate_eq_morphism(g, g0, g2))
    throw Error("pushout_eqhyp: legs are not morphisms");
  HypMorphism fh{f.edge_map, f.node_map}, gh{g.edge_map, g.node_map};
  HypPushout base = pushout_hyp(g0.graph, g1.graph, g2.graph, fh, gh);
  CospanResult qpo = pushout(f.class_map, g.class_map);

  // Quotient induced between the two colimits.
  std::vector<ElemId> q_images(base.apex.nodes.size());
  std::vector<bool> filled(q_images.size(), false);
  auto fill = [&](const EqHypergraph& gi, const FinFn& node_leg,
                  const FinFn& class_leg) {
    for (ElemId v : gi.graph.nodes) {
      std::size_t idx = base.apex.nodes.index_of(node_leg(v));
      ElemId cls = class_leg(gi.quotient(v));
      if (filled[idx]) {
        assert(q_images[idx] == cls);
      } else {
        q_images[idx] = cls;
        filled[idx] = true;
      }
    }
  };
  fill(g1, base.left.node_map, qpo.left);
  fill(g2, base.right.node_map, qpo.right);
  FinFn q(base.apex.nodes, qpo.apex, std::move(q_images));
  assert(q.is_surjective());

  EqHypergraph apex(base.apex, qpo.apex, std::move(q));
  return EqPushout{std::move(apex),
                   EqMorphism{base.left.edge_map, base.left.node_map, qpo.left},
                   EqMorphism{base.right.edge_map, base.right.node_map, qpo.right}};
}

EqPullback pullback_eqhyp(const EqHypergraph& g1, const EqHypergraph& g2,
                          const EqHypergraph& g3, const EqMorphism& f,
                          const EqMorphism& g) {
  if (!validate_eq_morphism(f, g1, g3) || !validate_eq_morphism(g, g2, g3))
    throw Error("pullback_eqhyp: legs are not morphisms");
  HypMorphism fh{f.edge_map, f.node_map}, gh{g.edge_map, g.node_map};
  HypPullback base = pullback_hyp(g1.graph, g2.graph, g3.graph, fh, gh);
  SpanResult l = pullback(f.class_map, g.class_map);

  // Route the class component through the image factorization of the
  // canonical map into the class pullback; taking the pullback of the class
  // sets directly would break surjectivity of the quotient.
  std::vector<ElemId> into_l;
  into_l.reserve(base.apex.nodes.size());
  for (ElemId v : base.apex.nodes) {
    ElemId c1 = g1.quotient(base.left.node_map(v));
    ElemId c2 = g2.quotient(base.right.node_map(v));
    bool found = false;
    for (ElemId p : l.apex)
      if (l.left(p) == c1 && l.right(p) == c2) {
        into_l.push_back(p);
        found = true;
        break;
      }
    if (!found) throw Error("pullback_eqhyp: class pair missing from pullback");
  }
  FinFn v_to_l(base.apex.nodes, l.apex, std::move(into_l));
  EpiMonoFactorization fac = image_factorize(v_to_l);

  EqHypergraph apex(base.apex, fac.epi.cod(), fac.epi);
  FinFn left_class = compose(l.left, fac.mono);
  FinFn right_class = compose(l.right, fac.mono);
  return EqPullback{std::move(apex),
                    EqMorphism{base.left.edge_map, base.left.node_map, left_class},
                    EqMorphism{base.right.edge_map, base.right.node_map, right_class}};
}

bool is_mono_eq(const EqMorphism& m) {
  return m.edge_map.is_injective() && m.node_map.is_injective();
}

bool is_regular_mono_eq(const EqMorphism& m) {
  return is_mono_eq(m) && m.class_map.is_injective();
}

bool is_pb_mono(const EqMorphism& m, const EqHypergraph& g,
                const EqHypergraph& h) {
  if (!validate_eq_morphism(m, g, h)) throw Error("is_pb_mono: invalid morphism");
  if (!is_regular_mono_eq(m)) return false;
  // The square (q_G, h_V, h_Q, q_H) is a pullback iff V_G maps bijectively
  // onto the pairs (v, c) with q_H(v) = h_Q(c). Injectivity holds, so it
  // remains to check that every node of H lying in an image class is hit.
  for (ElemId v : h.graph.nodes) {
    ElemId cls = h.quotient(v);
    bool cls_in_image = false;
    for (ElemId c : g.classes)
      if (m.class_map(c) == cls) {
        cls_in_image = true;
        break;
      }
    if (!cls_in_image) continue;
    bool node_hit = false;
    for (ElemId w : g.graph.nodes)
      if (m.node_map(w) == v) {
        node_hit = true;
        break;
      }
    if (!node_hit) return false;
  }
  return true;
}

LabelledEqHypergraph::LabelledEqHypergraph(EqHypergraph eq_in,
                                           std::vector<std::string> labels_in,
                                           Signature sig_in)
    : eq(std::move(eq_in)), labels(std::move(labels_in)), sig(std::move(sig_in)) {
  // Reuse the labelling validation.
  Labelling check(eq.graph, labels, sig);
  (void)check;
}

bool labels_compatible(const EqMorphism& m, const LabelledEqHypergraph& g,
                       const LabelledEqHypergraph& h) {
  for (ElemId e : g.eq.graph.edges)
    if (g.label(e) != h.label(m.edge_map(e))) return false;
  return true;
}

bool is_T_morphism(const EqMorphism& m, const LabelledEqHypergraph& g,
                   const LabelledEqHypergraph& h) {
  Labelling lg = g.labelling(), lh = h.labelling();
  if (!is_term_graph(lg) || !is_term_graph(lh))
    throw Error("is_T_morphism: endpoints must be term graphs");
  if (!validate_eq_morphism(m, g.eq, h.eq))
    throw Error("is_T_morphism: invalid morphism");
  if (!labels_compatible(m, g, h)) throw Error("is_T_morphism: labels not preserved");
  if (!is_pb_mono(m, g.eq, h.eq)) return false;
  return is_regular_mono_tg(HypMorphism{m.edge_map, m.node_map}, lg, lh);
}

LabelledEqPushout pushout_labelled_eq(const LabelledEqHypergraph& g0,
                                      const LabelledEqHypergraph& g1,
                                      const LabelledEqHypergraph& g2,
                                      const EqMorphism& f, const EqMorphism& g) {
  if (g0.sig != g1.sig || g0.sig != g2.sig)
    throw Error("pushout_labelled_eq: mixed signatures");
  if (!labels_compatible(f, g0, g1) || !labels_compatible(g, g0, g2))
    throw Error("pushout_labelled_eq: legs do not preserve labels");
  EqPushout base = pushout_eqhyp(g0.eq, g1.eq, g2.eq, f, g);

  std::vector<std::string> labels(base.apex.graph.edges.size());
  std::vector<bool> filled(labels.size(), false);
  auto fill = [&](const LabelledEqHypergraph& gi, const FinFn& leg) {
    for (ElemId e : gi.eq.graph.edges) {
      std::size_t idx = base.apex.graph.edges.index_of(leg(e));
      if (filled[idx]) {
        if (labels[idx] != gi.label(e))
          throw Error("pushout_labelled_eq: label clash in apex");
      } else {
        labels[idx] = gi.label(e);
        filled[idx] = true;
      }
    }
  };
  fill(g1, base.left.edge_map);
  fill(g2, base.right.edge_map);

  return LabelledEqPushout{
      LabelledEqHypergraph(base.apex, std::move(labels), g0.sig), base.left,
      base.right};
}

}  // namespace aegg
