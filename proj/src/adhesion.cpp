#include "adhesion.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "unionfind.hpp"

namespace aegg {
namespace {

// Mediating map out of a cospan onto a cocone; nullopt if the legs force
// conflicting images (impossible for honest pushouts of commuting squares).
std::optional<FinFn> cospan_mediator(const FinFn& leg1, const FinFn& leg2,
                                     const FinFn& u1, const FinFn& u2) {
  const FinSet& apex = leg1.cod();
  std::vector<ElemId> images(apex.size());
  std::vector<bool> filled(apex.size(), false);
  auto fill = [&](const FinFn& leg, const FinFn& u) -> bool {
    for (ElemId x : leg.dom()) {
      std::size_t idx = apex.index_of(leg(x));
      if (filled[idx]) {
        if (images[idx] != u(x)) return false;
      } else {
        images[idx] = u(x);
        filled[idx] = true;
      }
    }
    return true;
  };
  if (!fill(leg1, u1) || !fill(leg2, u2)) return std::nullopt;
  for (bool f : filled)
    if (!f) return std::nullopt;  // legs of a pushout are jointly surjective
  return FinFn(apex, u1.cod(), std::move(images));
}

// Mediating map of a cone into a span apex.
FinFn span_mediator(const FinFn& leg1, const FinFn& leg2, const FinFn& u1,
                    const FinFn& u2) {
  const FinSet& apex = leg1.dom();
  std::vector<ElemId> images;
  images.reserve(u1.dom().size());
  for (ElemId x : u1.dom()) {
    ElemId want1 = u1(x), want2 = u2(x);
    bool found = false;
    for (ElemId p : apex)
      if (leg1(p) == want1 && leg2(p) == want2) {
        images.push_back(p);
        found = true;
        break;
      }
    if (!found) throw Error("span_mediator: cone pair missing from pullback");
  }
  return FinFn(u1.dom(), apex, std::move(images));
}

bool is_bijective(const FinFn& f) {
  return f.is_injective() && f.dom().size() == f.cod().size();
}

}  // namespace

bool square_commutes(const FinSquare& s) {
  return compose(s.h, s.f) == compose(s.k, s.g);
}

bool square_commutes(const EqSquare& s) {
  return compose(s.h, s.f) == compose(s.k, s.g);
}

bool certify_pushout(const FinSquare& s) {
  if (!square_commutes(s)) throw Error("certify_pushout: square does not commute");
  CospanResult po = pushout(s.f, s.g);
  auto u = cospan_mediator(po.left, po.right, s.h, s.k);
  return u && is_bijective(*u);
}

bool certify_pullback(const FinSquare& s) {
  if (!square_commutes(s)) throw Error("certify_pullback: square does not commute");
  SpanResult pb = pullback(s.h, s.k);
  FinFn u = span_mediator(pb.left, pb.right, s.f, s.g);
  return is_bijective(u);
}

bool certify_pushout(const HypSquare& s) {
  HypPushout po = pushout_hyp(s.a, s.b, s.c, s.f, s.g);
  auto ue = cospan_mediator(po.left.edge_map, po.right.edge_map, s.h.edge_map,
                            s.k.edge_map);
  auto uv = cospan_mediator(po.left.node_map, po.right.node_map, s.h.node_map,
                            s.k.node_map);
  if (!ue || !uv) return false;
  HypMorphism u{*ue, *uv};
  return is_bijective(*ue) && is_bijective(*uv) &&
         validate_morphism(u, po.apex, s.d);
}

bool certify_pullback(const HypSquare& s) {
  HypPullback pb = pullback_hyp(s.b, s.c, s.d, s.h, s.k);
  FinFn ue = span_mediator(pb.left.edge_map, pb.right.edge_map, s.f.edge_map,
                           s.g.edge_map);
  FinFn uv = span_mediator(pb.left.node_map, pb.right.node_map, s.f.node_map,
                           s.g.node_map);
  HypMorphism u{ue, uv};
  return is_bijective(ue) && is_bijective(uv) && validate_morphism(u, s.a, pb.apex);
}

bool certify_pushout(const EqSquare& s) {
  if (!square_commutes(s)) throw Error("certify_pushout: square does not commute");
  EqPushout po = pushout_eqhyp(s.a, s.b, s.c, s.f, s.g);
  auto ue = cospan_mediator(po.left.edge_map, po.right.edge_map, s.h.edge_map,
                            s.k.edge_map);
  auto uv = cospan_mediator(po.left.node_map, po.right.node_map, s.h.node_map,
                            s.k.node_map);
  auto uq = cospan_mediator(po.left.class_map, po.right.class_map, s.h.class_map,
                            s.k.class_map);
  if (!ue || !uv || !uq) return false;
  EqMorphism u{*ue, *uv, *uq};
  return is_bijective(*ue) && is_bijective(*uv) && is_bijective(*uq) &&
         validate_eq_morphism(u, po.apex, s.d);
}

bool certify_pullback(const EqSquare& s) {
  if (!square_commutes(s)) throw Error("certify_pullback: square does not commute");
  EqPullback pb = pullback_eqhyp(s.b, s.c, s.d, s.h, s.k);
  FinFn ue = span_mediator(pb.left.edge_map, pb.right.edge_map, s.f.edge_map,
                           s.g.edge_map);
  FinFn uv = span_mediator(pb.left.node_map, pb.right.node_map, s.f.node_map,
                           s.g.node_map);
  auto uq = induced_class_map(uv, s.a, pb.apex);
  if (!uq) return false;
  EqMorphism u{ue, uv, *uq};
  return is_bijective(ue) && is_bijective(uv) && is_bijective(*uq) &&
         validate_eq_morphism(u, s.a, pb.apex);
}

EqSquare EqCube::back() const {
  return EqSquare{top.a, top.b, bottom.a, bottom.b, top.f, va, vb, bottom.f};
}
EqSquare EqCube::left() const {
  return EqSquare{top.a, top.c, bottom.a, bottom.c, top.g, va, vc, bottom.g};
}
EqSquare EqCube::front() const {
  return EqSquare{top.c, top.d, bottom.c, bottom.d, top.k, vc, vd, bottom.k};
}
EqSquare EqCube::right() const {
  return EqSquare{top.b, top.d, bottom.b, bottom.d, top.h, vb, vd, bottom.h};
}

bool morphism_in_class(const EqMorphism& m, const EqHypergraph& dom,
                       const EqHypergraph& cod, MonoClass cls) {
  switch (cls) {
    case MonoClass::Mono:
      return is_mono_eq(m);
    case MonoClass::Regular:
      return is_regular_mono_eq(m);
    case MonoClass::Pb:
      return is_pb_mono(m, dom, cod);
  }
  return false;
}

VkVerdict check_vk_cube(const EqCube& cube, MonoClass cls) {
  VkVerdict v;
  auto fail = [&](const std::string& why) {
    v.preconditions_ok = false;
    v.precondition_failure = why;
    return v;
  };
  for (const auto& [sq, name] :
       {std::make_pair(cube.bottom, "bottom"), std::make_pair(cube.top, "top"),
        std::make_pair(cube.back(), "back"), std::make_pair(cube.left(), "left"),
        std::make_pair(cube.front(), "front"), std::make_pair(cube.right(), "right")})
    if (!square_commutes(sq)) return fail(std::string(name) + " face does not commute");
  if (!certify_pushout(cube.bottom)) return fail("bottom face is not a pushout");
  if (!morphism_in_class(cube.bottom.g, cube.bottom.a, cube.bottom.c, cls))
    return fail("bottom gluing leg is not in the requested class");
  if (!certify_pullback(cube.back())) return fail("back face is not a pullback");
  if (!certify_pullback(cube.left())) return fail("left face is not a pullback");
  for (const auto& [m, d, c, name] :
       {std::tuple(cube.va, cube.top.a, cube.bottom.a, "a"),
        std::tuple(cube.vb, cube.top.b, cube.bottom.b, "b"),
        std::tuple(cube.vc, cube.top.c, cube.bottom.c, "c"),
        std::tuple(cube.vd, cube.top.d, cube.bottom.d, "d")})
    if (!morphism_in_class(m, d, c, MonoClass::Regular))
      return fail(std::string("vertical ") + name + " is not a regular mono");

  v.preconditions_ok = true;
  v.top_pushout = certify_pushout(cube.top);
  v.front_pullback = certify_pullback(cube.front());
  v.right_pullback = certify_pullback(cube.right());
  v.biconditional_holds =
      (v.top_pushout == (v.front_pullback && v.right_pullback));
  return v;
}

// ---------------------------------------------------------------------------
// Random generation
// ---------------------------------------------------------------------------

namespace {

std::size_t pick(Rng& rng, std::size_t n) {  // uniform 0..n-1
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace

FinSet random_finset(Rng& rng, std::size_t max_size) {
  return FinSet::range(pick(rng, max_size + 1));
}

FinFn random_fn(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (cod.empty() && !dom.empty())
    throw Error("random_fn: no function into the empty set");
  std::vector<ElemId> images;
  images.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) images.push_back(cod.at(pick(rng, cod.size())));
  return FinFn(dom, cod, std::move(images));
}

EqHypergraph random_eqhyp(Rng& rng, const GenBounds& b) {
  std::size_t n = pick(rng, b.max_nodes + 1);
  FinSet nodes = FinSet::range(n);
  std::size_t ecount = pick(rng, b.max_edges + 1);
  std::vector<Word> srcs, tgts;
  for (std::size_t i = 0; i < ecount; ++i) {
    auto random_word = [&](std::size_t max_len) {
      Word w;
      if (n == 0) return w;
      std::size_t len = pick(rng, max_len + 1);
      for (std::size_t j = 0; j < len; ++j) w.push_back(nodes.at(pick(rng, n)));
      return w;
    };
    srcs.push_back(random_word(b.max_arity));
    // Mostly single targets; that keeps closure coarsenings possible.
    if (n > 0 && pick(rng, 5) != 0) {
      tgts.push_back(Word{nodes.at(pick(rng, n))});
    } else {
      tgts.push_back(random_word(1));
    }
  }
  Hypergraph h(FinSet::range(ecount), nodes, std::move(srcs), std::move(tgts));

  if (n == 0) return EqHypergraph(std::move(h), FinSet{}, FinFn(FinSet{}, FinSet{}, {}));
  // biased towards coarse quotients; shared classes are where the
  // interesting behaviour lives
  std::size_t k = pick(rng, 3) == 0 ? 1 : 1 + pick(rng, n);
  std::vector<ElemId> q(n);
  for (std::size_t i = 0; i < n; ++i)
    q[i] = static_cast<ElemId>(i < k ? i : pick(rng, k));
  FinSet classes = FinSet::range(k);
  return EqHypergraph(std::move(h), classes,
                      FinFn(nodes, classes, std::move(q)));
}

namespace {

SubObject subobject_from_nodes(const EqHypergraph& g, std::vector<ElemId> kept_nodes,
                               bool all_induced_edges, Rng* rng) {
  FinSet nodes(std::move(kept_nodes));
  std::vector<ElemId> kept_edges;
  for (ElemId e : g.graph.edges) {
    bool ok = true;
    for (const Word* w : {&g.graph.src(e), &g.graph.tgt(e)})
      for (ElemId v : *w)
        if (!nodes.contains(v)) ok = false;
    if (ok && (all_induced_edges || pick(*rng, 4) != 0)) kept_edges.push_back(e);
  }
  FinSet edges(kept_edges);
  std::vector<Word> srcs, tgts;
  for (ElemId e : edges) {
    srcs.push_back(g.graph.src(e));
    tgts.push_back(g.graph.tgt(e));
  }
  Hypergraph h(edges, nodes, std::move(srcs), std::move(tgts));

  std::vector<ElemId> cls_ids;
  std::vector<ElemId> q_images;
  for (ElemId v : nodes) {
    ElemId c = g.quotient(v);
    if (std::find(cls_ids.begin(), cls_ids.end(), c) == cls_ids.end())
      cls_ids.push_back(c);
  }
  std::sort(cls_ids.begin(), cls_ids.end());
  FinSet classes(cls_ids);
  for (ElemId v : nodes) q_images.push_back(g.quotient(v));
  EqHypergraph sub(std::move(h), classes, FinFn(nodes, classes, std::move(q_images)));
  EqMorphism incl{FinFn::inclusion(sub.graph.edges, g.graph.edges),
                  FinFn::inclusion(sub.graph.nodes, g.graph.nodes),
                  FinFn::inclusion(sub.classes, g.classes)};
  return SubObject{std::move(sub), std::move(incl)};
}

}  // namespace

SubObject random_subobject(Rng& rng, const EqHypergraph& g) {
  std::vector<ElemId> kept;
  for (ElemId v : g.graph.nodes)
    if (pick(rng, 2) == 0) kept.push_back(v);
  return subobject_from_nodes(g, std::move(kept), false, &rng);
}

SubObject random_pb_subobject(Rng& rng, const EqHypergraph& g) {
  std::vector<ElemId> kept_classes;
  for (ElemId c : g.classes)
    if (pick(rng, 2) == 0) kept_classes.push_back(c);
  std::vector<ElemId> kept;
  for (ElemId v : g.graph.nodes)
    if (std::find(kept_classes.begin(), kept_classes.end(), g.quotient(v)) !=
        kept_classes.end())
      kept.push_back(v);
  return subobject_from_nodes(g, std::move(kept), false, &rng);
}

SubObject random_closed_pb_subobject(Rng& rng, const EqHypergraph& g) {
  std::vector<bool> in(g.classes.size(), false);
  for (std::size_t i = 0; i < g.classes.size(); ++i) in[i] = pick(rng, 2) == 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElemId e : g.graph.edges) {
      bool src_in = true;
      for (ElemId v : g.graph.src(e))
        if (!in[g.classes.index_of(g.quotient(v))]) src_in = false;
      if (!src_in) continue;
      for (ElemId v : g.graph.tgt(e)) {
        std::size_t ci = g.classes.index_of(g.quotient(v));
        if (!in[ci]) {
          in[ci] = true;
          changed = true;
        }
      }
    }
  }
  std::vector<ElemId> kept;
  for (ElemId v : g.graph.nodes)
    if (in[g.classes.index_of(g.quotient(v))]) kept.push_back(v);
  return subobject_from_nodes(g, std::move(kept), true, nullptr);
}

OutMorphism random_out_morphism(Rng& rng, const EqHypergraph& g, const GenBounds& b) {
  const std::size_t n = g.graph.nodes.size();
  // Merge some nodes.
  UnionFind merge(n);
  for (std::size_t i = 1; i < n; ++i)
    if (pick(rng, 4) == 0) merge.unite(pick(rng, i), i);
  std::map<std::size_t, ElemId> rep_to_new;
  std::vector<ElemId> node_images(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, _] = rep_to_new.emplace(merge.find(i), static_cast<ElemId>(rep_to_new.size()));
    node_images[i] = it->second;
  }
  std::size_t merged = rep_to_new.size();
  std::size_t fresh_nodes = pick(rng, 3);
  FinSet cod_nodes = FinSet::range(merged + fresh_nodes);
  FinFn node_map(g.graph.nodes, cod_nodes, std::move(node_images));

  // Mapped edges keep their relative order, then fresh edges follow.
  std::vector<Word> srcs, tgts;
  for (std::size_t i = 0; i < g.graph.edges.size(); ++i) {
    srcs.push_back(node_map.map_word(g.graph.srcs[i]));
    tgts.push_back(node_map.map_word(g.graph.tgts[i]));
  }
  std::size_t fresh_edges = pick(rng, 3);
  for (std::size_t i = 0; i < fresh_edges && cod_nodes.size() > 0; ++i) {
    auto random_word = [&](std::size_t max_len, bool single) {
      Word w;
      std::size_t len = single ? 1 : pick(rng, max_len + 1);
      for (std::size_t j = 0; j < len; ++j)
        w.push_back(cod_nodes.at(pick(rng, cod_nodes.size())));
      return w;
    };
    srcs.push_back(random_word(b.max_arity, false));
    tgts.push_back(random_word(1, pick(rng, 5) != 0));
  }
  std::size_t ecount = srcs.size();
  FinSet cod_edges = FinSet::range(ecount);
  std::vector<ElemId> edge_images;
  for (std::size_t i = 0; i < g.graph.edges.size(); ++i)
    edge_images.push_back(static_cast<ElemId>(i));
  FinFn edge_map(g.graph.edges, cod_edges, std::move(edge_images));
  Hypergraph cod_graph(cod_edges, cod_nodes, std::move(srcs), std::move(tgts));

  // Class structure: push the old classes through the merge and coarsen a bit.
  UnionFind cls(cod_nodes.size());
  {
    std::map<ElemId, std::size_t> first_in_class;
    for (ElemId v : g.graph.nodes) {
      std::size_t img = cod_nodes.index_of(node_map(v));
      auto [it, fresh] = first_in_class.emplace(g.quotient(v), img);
      if (!fresh) cls.unite(it->second, img);
    }
  }
  for (std::size_t i = 1; i < cod_nodes.size(); ++i)
    if (pick(rng, 2) == 0) cls.unite(pick(rng, i), i);
  std::map<std::size_t, ElemId> rep_to_cls;
  std::vector<ElemId> q_images(cod_nodes.size());
  for (std::size_t i = 0; i < cod_nodes.size(); ++i) {
    auto [it, _] = rep_to_cls.emplace(cls.find(i), static_cast<ElemId>(rep_to_cls.size()));
    q_images[i] = it->second;
  }
  FinSet cod_classes = FinSet::range(rep_to_cls.size());
  EqHypergraph cod(std::move(cod_graph), cod_classes,
                   FinFn(cod_nodes, cod_classes, std::move(q_images)));
  auto class_map = induced_class_map(node_map, g, cod);
  if (!class_map) throw Error("random_out_morphism: induced class map missing");
  EqMorphism m{std::move(edge_map), std::move(node_map), std::move(*class_map)};
  assert(validate_eq_morphism(m, g, cod));
  return OutMorphism{std::move(cod), std::move(m)};
}

std::optional<EqHypergraph> close_eqhyp(const EqHypergraph& g) {
  const Hypergraph& h = g.graph;
  UnionFind uf(h.nodes.size());
  {
    std::map<ElemId, std::size_t> first_in_class;
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      auto [it, fresh] = first_in_class.emplace(g.quotient(h.nodes.at(i)), i);
      if (!fresh) uf.unite(it->second, i);
    }
  }
  auto canon_word = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (ElemId v : w)
      out.push_back(static_cast<ElemId>(uf.find(h.nodes.index_of(v))));
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Word, std::size_t> groups;  // canonical src word -> edge index
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      auto [it, fresh] = groups.emplace(canon_word(h.srcs[i]), i);
      if (fresh) continue;
      const Word& t1 = h.tgts[it->second];
      const Word& t2 = h.tgts[i];
      if (t1.size() != t2.size()) return std::nullopt;
      for (std::size_t j = 0; j < t1.size(); ++j)
        if (uf.unite(h.nodes.index_of(t1[j]), h.nodes.index_of(t2[j])))
          changed = true;
    }
  }
  std::map<std::size_t, ElemId> rep_to_cls;
  std::vector<ElemId> q_images(h.nodes.size());
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    auto [it, _] = rep_to_cls.emplace(uf.find(i), static_cast<ElemId>(rep_to_cls.size()));
    q_images[i] = it->second;
  }
  FinSet classes = FinSet::range(rep_to_cls.size());
  return EqHypergraph(h, classes, FinFn(h.nodes, classes, std::move(q_images)));
}

// ---------------------------------------------------------------------------
// Campaign plumbing
// ---------------------------------------------------------------------------

namespace {

EqMorphism eq_pullback_mediator(const EqPullback& pb, const EqHypergraph& x,
                                const EqMorphism& u1, const EqMorphism& u2) {
  FinFn ue = span_mediator(pb.left.edge_map, pb.right.edge_map, u1.edge_map,
                           u2.edge_map);
  FinFn uv = span_mediator(pb.left.node_map, pb.right.node_map, u1.node_map,
                           u2.node_map);
  auto uq = induced_class_map(uv, x, pb.apex);
  if (!uq) throw Error("eq_pullback_mediator: no induced class map");
  return EqMorphism{std::move(ue), std::move(uv), std::move(*uq)};
}

EqMorphism eq_pushout_mediator(const EqPushout& po, const EqMorphism& u1,
                               const EqMorphism& u2) {
  auto ue = cospan_mediator(po.left.edge_map, po.right.edge_map, u1.edge_map,
                            u2.edge_map);
  auto uv = cospan_mediator(po.left.node_map, po.right.node_map, u1.node_map,
                            u2.node_map);
  auto uq = cospan_mediator(po.left.class_map, po.right.class_map, u1.class_map,
                            u2.class_map);
  if (!ue || !uv || !uq) throw Error("eq_pushout_mediator: cocone does not factor");
  return EqMorphism{std::move(*ue), std::move(*uv), std::move(*uq)};
}

// Sub-object on an explicit node set (all induced edges kept).
SubObject subobject_on_nodes(const EqHypergraph& g, std::vector<ElemId> nodes) {
  return subobject_from_nodes(g, std::move(nodes), true, nullptr);
}

// Builds the standard cube over a pushout bottom by pulling everything back
// along a vertical into the pushout object. All four side faces end up as
// pullbacks and the verticals as regular monos.
EqCube cube_over_bottom(const EqSquare& bottom, const SubObject& dsub) {
  const EqHypergraph& dprime = dsub.sub;
  const EqMorphism& vd = dsub.incl;
  EqPullback bp = pullback_eqhyp(bottom.b, dprime, bottom.d, bottom.h, vd);
  EqPullback cp = pullback_eqhyp(bottom.c, dprime, bottom.d, bottom.k, vd);
  EqMorphism a_to_d = compose(bottom.h, bottom.f);
  EqPullback ap = pullback_eqhyp(bottom.a, dprime, bottom.d, a_to_d, vd);

  // top arrows by the universal property
  EqMorphism fprime = eq_pullback_mediator(
      bp, ap.apex, compose(bottom.f, ap.left), ap.right);
  EqMorphism gprime = eq_pullback_mediator(
      cp, ap.apex, compose(bottom.g, ap.left), ap.right);
  EqCube cube;
  cube.bottom = bottom;
  cube.top = EqSquare{ap.apex, bp.apex, cp.apex, dprime,
                      fprime, gprime, bp.right, cp.right};
  cube.va = ap.left;
  cube.vb = bp.left;
  cube.vc = cp.left;
  cube.vd = vd;
  return cube;
}

}  // namespace

CampaignReport check_pb_stability(std::uint64_t trials, const GenBounds& b,
                                  std::uint64_t seed, MonoClass bottom_class) {
  CampaignReport report;
  report.kind = bottom_class == MonoClass::Pb ? "pb-stability" : "regular-stability";
  report.trials = trials;
  report.seed = seed;
  report.bounds = b;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    EqHypergraph g3 = random_eqhyp(rng, b);
    SubObject sub = bottom_class == MonoClass::Pb ? random_pb_subobject(rng, g3)
                                                  : random_subobject(rng, g3);
    OutMorphism out = random_out_morphism(rng, sub.sub, b);
    EqPushout po = pushout_eqhyp(sub.sub, out.cod, g3, out.map, sub.incl);
    EqSquare bottom{sub.sub, out.cod, g3, po.apex, out.map, sub.incl, po.left,
                    po.right};
    SubObject dsub = random_subobject(rng, po.apex);
    EqCube cube = cube_over_bottom(bottom, dsub);
    ++report.performed;
    if (!certify_pushout(cube.top)) {
      CampaignFailure f;
      f.trial = t;
      f.detail = "top face of the stability cube is not a pushout";
      f.original_size = dsub.sub.graph.nodes.size();
      // shrink the vertical subobject while the failure persists
      std::vector<ElemId> kept(dsub.sub.graph.nodes.elems());
      bool shrunk = true;
      while (shrunk && kept.size() > 1) {
        shrunk = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
          std::vector<ElemId> smaller = kept;
          smaller.erase(smaller.begin() + static_cast<long>(i));
          SubObject cand = subobject_on_nodes(po.apex, smaller);
          if (!certify_pushout(cube_over_bottom(bottom, cand).top)) {
            kept = std::move(smaller);
            shrunk = true;
            break;
          }
        }
      }
      f.witness_size = kept.size();
      std::string nodes;
      for (ElemId v : kept) nodes += (nodes.empty() ? "" : ",") + std::to_string(v);
      f.witness = "vertical subobject on pushout nodes {" + nodes + "}";
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

CampaignReport check_vk_campaign(std::uint64_t trials, const GenBounds& b,
                                 std::uint64_t seed) {
  CampaignReport report;
  report.kind = "reg-van-kampen";
  report.trials = trials;
  report.seed = seed;
  report.bounds = b;
  Rng rng(seed);
  std::uint64_t attempts = 0;
  for (std::uint64_t t = 0; report.performed < trials && attempts < trials * 64;
       ++t) {
    ++attempts;
    EqHypergraph g3 = random_eqhyp(rng, b);
    SubObject sub = random_pb_subobject(rng, g3);
    OutMorphism out = random_out_morphism(rng, sub.sub, b);
    EqPushout po = pushout_eqhyp(sub.sub, out.cod, g3, out.map, sub.incl);
    EqSquare bottom{sub.sub, out.cod, g3, po.apex, out.map, sub.incl, po.left,
                    po.right};
    SubObject dsub = random_subobject(rng, po.apex);
    EqCube cube = cube_over_bottom(bottom, dsub);

    // Direction 1: all side faces are pullbacks, so the biconditional forces
    // a pushout on top.
    VkVerdict v1 = check_vk_cube(cube, MonoClass::Pb);
    if (!v1.preconditions_ok) continue;  // degenerate draw
    ++report.performed;
    if (!v1.biconditional_holds || !v1.top_pushout) {
      CampaignFailure f1;
      f1.trial = t;
      f1.detail = "stability direction failed: top face is not a pushout";
      report.failures.push_back(std::move(f1));
      continue;
    }

    // Direction 2: replace the top by the canonical pushout; the
    // biconditional then forces pullbacks on the front and right faces.
    EqPushout tpo = pushout_eqhyp(cube.top.a, cube.top.b, cube.top.c,
                                  cube.top.f, cube.top.g);
    EqMorphism vd2 = eq_pushout_mediator(tpo, compose(cube.bottom.h, cube.vb),
                                         compose(cube.bottom.k, cube.vc));
    EqCube cube2;
    cube2.bottom = cube.bottom;
    cube2.top = EqSquare{cube.top.a, cube.top.b, cube.top.c, tpo.apex,
                         cube.top.f, cube.top.g, tpo.left, tpo.right};
    cube2.va = cube.va;
    cube2.vb = cube.vb;
    cube2.vc = cube.vc;
    cube2.vd = vd2;
    VkVerdict v2 = check_vk_cube(cube2, MonoClass::Pb);
    if (!v2.preconditions_ok) continue;  // mediator need not be a regular mono
    if (!v2.biconditional_holds || !v2.front_pullback || !v2.right_pullback) {
      CampaignFailure f2;
      f2.trial = t;
      f2.detail =
          "converse direction failed: side faces of a pushout top are not pullbacks";
      report.failures.push_back(std::move(f2));
    }
  }
  return report;
}

CampaignReport check_kernel_pair_lemmas(std::uint64_t trials, std::uint64_t seed) {
  CampaignReport report;
  report.kind = "kernel-pairs";
  report.trials = trials;
  report.seed = seed;
  Rng rng(seed);
  auto fail = [&](std::uint64_t t, const std::string& d) {
    CampaignFailure f;
    f.trial = t;
    f.detail = d;
    report.failures.push_back(std::move(f));
  };

  for (std::uint64_t t = 0; t < trials; ++t) {
    // A commuting square f,t vs h,g with X in the top-left corner:
    //   X --h--> Z
    //   f|       |g
    //   Y --t--> W
    FinSet w = FinSet::range(1 + pick(rng, 4));
    FinSet z = random_finset(rng, 4);
    FinSet y = FinSet::range(1 + pick(rng, 4));
    FinFn g = random_fn(rng, z, w);
    FinFn tt = random_fn(rng, y, w);
    FinSet x;
    FinFn h, f;
    bool as_pullback = pick(rng, 3) == 0;
    if (as_pullback) {
      SpanResult pb = pullback(tt, g);
      x = pb.apex;
      f = pb.left;
      h = pb.right;
    } else {
      x = random_finset(rng, 4);
      std::vector<ElemId> himg, fimg;
      bool ok = true;
      for (std::size_t i = 0; i < x.size() && ok; ++i) {
        ElemId zi = z.empty() ? 0 : z.at(pick(rng, z.size()));
        if (z.empty()) {
          ok = false;
          break;
        }
        // pick an element of the fiber of t over g(zi)
        std::vector<ElemId> fiber;
        for (ElemId yy : y)
          if (tt(yy) == g(zi)) fiber.push_back(yy);
        if (fiber.empty()) {
          ok = false;
          break;
        }
        himg.push_back(zi);
        fimg.push_back(fiber[pick(rng, fiber.size())]);
      }
      if (!ok) x = FinSet{};
      if (x.empty()) {
        himg.clear();
        fimg.clear();
      }
      h = FinFn(x, z, himg);
      f = FinFn(x, y, fimg);
    }
    ++report.performed;

    SpanResult kf = kernel_pair(f), kg = kernel_pair(g);
    // induced arrow
    std::vector<ElemId> kh_img;
    bool ok = true;
    for (ElemId p : kf.apex) {
      ElemId x1 = kf.left(p), x2 = kf.right(p);
      bool found = false;
      for (ElemId q : kg.apex)
        if (kg.left(q) == h(x1) && kg.right(q) == h(x2)) {
          kh_img.push_back(q);
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      fail(t, "induced arrow between kernel pairs does not exist");
      continue;
    }
    FinFn kh(kf.apex, kg.apex, kh_img);
    if (compose(kg.left, kh) != compose(h, kf.left) ||
        compose(kg.right, kh) != compose(h, kf.right)) {
      fail(t, "induced arrow does not commute with the projections");
      continue;
    }
    if (h.is_injective() && !kh.is_injective())
      fail(t, "mono h did not induce a mono between kernel pairs");
    FinSquare outer{x, z, y, w, h, f, g, tt};
    if (certify_pullback(outer)) {
      FinSquare c1{kf.apex, kg.apex, x, z, kh, kf.left, kg.left, h};
      FinSquare c2{kf.apex, kg.apex, x, z, kh, kf.right, kg.right, h};
      if (!certify_pullback(c1) || !certify_pullback(c2))
        fail(t, "pullback square did not transfer to the kernel-pair squares");
      if (h.is_injective()) {
        ProductResult xx = product(x, x), zz = product(z, z);
        FinFn pair_f = span_mediator(xx.proj1, xx.proj2, kf.left, kf.right);
        FinFn pair_g = span_mediator(zz.proj1, zz.proj2, kg.left, kg.right);
        std::vector<ElemId> hh_img;
        for (ElemId p : xx.apex) {
          ElemId want1 = h(xx.proj1(p)), want2 = h(xx.proj2(p));
          for (ElemId q : zz.apex)
            if (zz.proj1(q) == want1 && zz.proj2(q) == want2) {
              hh_img.push_back(q);
              break;
            }
        }
        FinFn hxh(xx.apex, zz.apex, hh_img);
        FinSquare c3{kf.apex, kg.apex, xx.apex, zz.apex, kh, pair_f, pair_g, hxh};
        if (!certify_pullback(c3))
          fail(t, "pairing square is not a pullback for mono h");
      }
    }

    // Cube instance: bottom a pushout along a mono (hence also a pullback
    // with an injective parallel leg), pullback left face, pushout top face;
    // then the right face must be a pullback and the kernel pairs of the
    // verticals must form a pushout.
    {
      FinSet aa = random_finset(rng, 3);
      FinSet bb = FinSet::range(aa.size() + pick(rng, 3));
      FinFn ff = aa.empty() ? FinFn(aa, bb, {}) : random_fn(rng, aa, bb);
      FinSet cc = FinSet::range(aa.size() + pick(rng, 3));
      std::vector<ElemId> minj(cc.elems().begin(), cc.elems().begin() + aa.size());
      FinFn mm(aa, cc, minj);  // injection
      CospanResult bpo = pushout(ff, mm);
      const FinSet& db = bpo.apex;
      FinFn n = bpo.left;   // B -> D, mono since m is
      FinFn gg = bpo.right; // C -> D

      FinSet cprime = random_finset(rng, 4);
      FinFn cvert = cc.empty() && !cprime.empty() ? FinFn() : random_fn(rng, cprime, cc);
      if (cc.empty() && !cprime.empty()) {
        cprime = FinSet{};
        cvert = FinFn(cprime, cc, {});
      }
      SpanResult lf = pullback(mm, cvert);
      const FinSet& aprime = lf.apex;
      FinFn avert = lf.left, mprime = lf.right;

      // top-right corner: choose b-vertical and f' with b . f' = f . a
      FinSet bprime = FinSet::range(1 + pick(rng, 4));
      FinFn bvert = bb.empty() ? FinFn(FinSet{}, bb, {}) : random_fn(rng, bprime, bb);
      if (bb.empty()) bprime = FinSet{};
      std::vector<ElemId> fpimg;
      bool built = true;
      for (ElemId ap : aprime) {
        ElemId want = ff(avert(ap));
        std::vector<ElemId> fiber;
        for (ElemId bp : bprime)
          if (bvert(bp) == want) fiber.push_back(bp);
        if (fiber.empty()) {
          built = false;
          break;
        }
        fpimg.push_back(fiber[pick(rng, fiber.size())]);
      }
      if (!built) continue;  // resample next trial
      FinFn fprime(aprime, bprime, fpimg);

      CospanResult top = pushout(fprime, mprime);
      const FinSet& dprime = top.apex;
      FinFn nprime = top.left, gprime = top.right;
      auto dvert = cospan_mediator(nprime, gprime, compose(n, bvert),
                                   compose(gg, cvert));
      if (!dvert) {
        fail(t, "cube mediator did not exist");
        continue;
      }

      FinSquare rightf{bprime, dprime, bb, db, nprime, bvert, *dvert, n};
      if (!certify_pullback(rightf)) {
        fail(t, "right face of the kernel cube is not a pullback");
        continue;
      }
      SpanResult ka = kernel_pair(avert), kb = kernel_pair(bvert),
                 kc = kernel_pair(cvert), kd = kernel_pair(*dvert);
      auto induced = [&](const SpanResult& src, const SpanResult& dst,
                         const FinFn& along) -> std::optional<FinFn> {
        std::vector<ElemId> img;
        for (ElemId p : src.apex) {
          ElemId u1 = along(src.left(p)), u2 = along(src.right(p));
          bool found = false;
          for (ElemId q : dst.apex)
            if (dst.left(q) == u1 && dst.right(q) == u2) {
              img.push_back(q);
              found = true;
              break;
            }
          if (!found) return std::nullopt;
        }
        return FinFn(src.apex, dst.apex, img);
      };
      auto kfp = induced(ka, kb, fprime);
      auto kmp = induced(ka, kc, mprime);
      auto knp = induced(kb, kd, nprime);
      auto kgp = induced(kc, kd, gprime);
      if (!kfp || !kmp || !knp || !kgp) {
        fail(t, "kernel-pair square arrows missing");
        continue;
      }
      FinSquare ksq{ka.apex, kb.apex, kc.apex, kd.apex, *kfp, *kmp, *knp, *kgp};
      if (!certify_pushout(ksq))
        fail(t, "kernel-pair square of the cube is not a pushout");
    }
  }
  return report;
}

CampaignReport check_e_closure_preservation(std::uint64_t trials, const GenBounds& b,
                                            std::uint64_t seed) {
  CampaignReport report;
  report.kind = "e-closure-preservation";
  report.trials = trials;
  report.seed = seed;
  report.bounds = b;
  Rng rng(seed);
  std::uint64_t attempts = 0;
  for (std::uint64_t t = 0; report.performed < trials && attempts < trials * 64;
       ++t) {
    ++attempts;
    std::optional<EqHypergraph> g3;
    for (int attempt = 0; attempt < 32 && !g3; ++attempt)
      g3 = close_eqhyp(random_eqhyp(rng, b));
    if (!g3) continue;
    SubObject sub = random_closed_pb_subobject(rng, *g3);
    OutMorphism out = random_out_morphism(rng, sub.sub, b);
    auto g2 = close_eqhyp(out.cod);
    if (!g2) continue;
    auto hq = induced_class_map(out.map.node_map, sub.sub, *g2);
    if (!hq) continue;
    EqMorphism h{out.map.edge_map, out.map.node_map, *hq};
    ++report.performed;
    EqPushout po = pushout_eqhyp(sub.sub, *g2, *g3, h, sub.incl);
    if (!is_e_hypergraph(po.apex)) {
      CampaignFailure f;
      f.trial = t;
      f.detail = "pushout along a closed Pb mono broke the closure";
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

EqCube counterexample_cube() {
  auto disc = [](std::vector<ElemId> node_ids) {
    Hypergraph h = Hypergraph::discrete(FinSet(std::move(node_ids)));
    return indiscrete_eq(std::move(h));
  };
  EqHypergraph a = disc({0});
  EqHypergraph bm = disc({0, 1});
  EqHypergraph c = disc({0, 2});
  EqHypergraph d = disc({0, 1, 2});
  EqHypergraph ap = disc({});
  EqHypergraph bp = disc({1});
  EqHypergraph cp = disc({2});
  EqHypergraph dp = disc({1, 2});

  auto incl = [](const EqHypergraph& sub, const EqHypergraph& super) {
    std::vector<ElemId> imgs;
    for (ElemId v : sub.graph.nodes) imgs.push_back(v);
    FinFn node(sub.graph.nodes, super.graph.nodes, imgs);
    FinFn cls = sub.classes.empty()
                    ? FinFn(FinSet{}, super.classes, {})
                    : FinFn::constant(sub.classes, super.classes, 0);
    return EqMorphism{FinFn(FinSet{}, super.graph.edges, {}), node, cls};
  };

  EqCube cube;
  cube.bottom = EqSquare{a, bm, c, d, incl(a, bm), incl(a, c), incl(bm, d), incl(c, d)};
  cube.top = EqSquare{ap, bp, cp, dp, incl(ap, bp), incl(ap, cp), incl(bp, dp),
                      incl(cp, dp)};
  cube.va = incl(ap, a);
  cube.vb = incl(bp, bm);
  cube.vc = incl(cp, c);
  cube.vd = incl(dp, d);
  return cube;
}

std::vector<FinFn> enumerate_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<FinFn> out;
  if (dom.empty()) {
    out.push_back(FinFn(dom, cod, {}));
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> odo(dom.size(), 0);
  while (true) {
    std::vector<ElemId> images;
    images.reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) images.push_back(cod.at(odo[i]));
    out.push_back(FinFn(dom, cod, std::move(images)));
    std::size_t i = 0;
    while (i < odo.size()) {
      if (++odo[i] < cod.size()) break;
      odo[i] = 0;
      ++i;
    }
    if (i == odo.size()) break;
  }
  return out;
}

std::size_t count_pushout_mediators(const CospanResult& po, const FinFn& h,
                                    const FinFn& k, const FinSet& d) {
  std::size_t count = 0;
  for (const FinFn& u : enumerate_functions(po.apex, d))
    if (compose(u, po.left) == h && compose(u, po.right) == k) ++count;
  return count;
}

std::size_t count_pullback_mediators(const SpanResult& pb, const FinFn& f,
                                     const FinFn& g, const FinSet& x) {
  std::size_t count = 0;
  for (const FinFn& u : enumerate_functions(x, pb.apex))
    if (compose(pb.left, u) == f && compose(pb.right, u) == g) ++count;
  return count;
}

}  // namespace aegg
