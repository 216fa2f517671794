#include <doctest.h>

#include "adhesion.hpp"
#include "hypergraph.hpp"

using namespace aegg;

namespace {

// The four-edge example graph: two source-less edges feeding v0 and v1, a
// binary edge (v0,v1) -> v2 and a binary edge (v2,v1) -> v3.
Hypergraph example_graph() {
  return Hypergraph(FinSet::range(4), FinSet::range(4),
                    {{}, {}, {0, 1}, {2, 1}}, {{0}, {1}, {2}, {3}});
}

// All hypergraph morphisms G -> H, by brute force over component functions.
std::vector<HypMorphism> all_morphisms(const Hypergraph& g, const Hypergraph& h) {
  std::vector<HypMorphism> out;
  for (const FinFn& fe : enumerate_functions(g.edges, h.edges))
    for (const FinFn& fv : enumerate_functions(g.nodes, h.nodes)) {
      HypMorphism m{fe, fv};
      if (validate_morphism(m, g, h)) out.push_back(m);
    }
  return out;
}

// Categorical mono test: no two distinct parallel maps into g are merged by
// m. Witness objects: a single dot and one generic edge per incidence shape
// occurring in g.
bool is_mono_categorical(const HypMorphism& m, const Hypergraph& g) {
  std::vector<Hypergraph> witnesses;
  witnesses.push_back(Hypergraph::discrete(FinSet::range(1)));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    std::size_t ar = g.srcs[i].size(), tl = g.tgts[i].size();
    FinSet nodes = FinSet::range(ar + tl);
    Word src, tgt;
    for (std::size_t k = 0; k < ar; ++k) src.push_back(static_cast<ElemId>(k));
    for (std::size_t k = 0; k < tl; ++k) tgt.push_back(static_cast<ElemId>(ar + k));
    witnesses.push_back(Hypergraph(FinSet::range(1), nodes, {src}, {tgt}));
  }
  for (const Hypergraph& x : witnesses)
    for (const HypMorphism& a : all_morphisms(x, g))
      for (const HypMorphism& b : all_morphisms(x, g))
        if (!(a == b) && compose(m, a) == compose(m, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("morphism validation") {
  Hypergraph g = example_graph();
  SUBCASE("identity validates") {
    CHECK(validate_morphism(identity_morphism(g), g, g));
  }
  SUBCASE("node swap breaks an incidence square") {
    HypMorphism swap{FinFn::identity(g.edges),
                     FinFn(g.nodes, g.nodes, {1, 0, 2, 3})};
    CHECK_FALSE(validate_morphism(swap, g, g));
  }
  SUBCASE("the sub-hypergraph on edge 2 and nodes v0..v2 includes") {
    Hypergraph sub(FinSet({2}), FinSet({0, 1, 2}), {{0, 1}}, {{2}});
    HypMorphism incl{FinFn::inclusion(sub.edges, g.edges),
                     FinFn::inclusion(sub.nodes, g.nodes)};
    CHECK(validate_morphism(incl, sub, g));
  }
  SUBCASE("carrier mismatch throws") {
    Hypergraph d = Hypergraph::discrete(FinSet::range(2));
    CHECK_THROWS_AS(validate_morphism(identity_morphism(d), d, g), Error);
  }
  SUBCASE("composition of valid morphisms is valid") {
    Hypergraph sub(FinSet({2}), FinSet({0, 1, 2}), {{0, 1}}, {{2}});
    HypMorphism i{FinFn::inclusion(sub.edges, g.edges),
                  FinFn::inclusion(sub.nodes, g.nodes)};
    CHECK(validate_morphism(compose(identity_morphism(g), i), sub, g));
  }
}

TEST_CASE("mono characterization in Hyp") {
  Hypergraph g = example_graph();
  CHECK(is_mono_hyp(identity_morphism(g)));
  SUBCASE("collapsing two isolated nodes is not mono") {
    Hypergraph d2 = Hypergraph::discrete(FinSet::range(2));
    Hypergraph d1 = Hypergraph::discrete(FinSet::range(1));
    HypMorphism c{FinFn(d2.edges, d1.edges, {}),
                  FinFn::constant(d2.nodes, d1.nodes, 0)};
    CHECK(validate_morphism(c, d2, d1));
    CHECK_FALSE(is_mono_hyp(c));
  }
  SUBCASE("edge collapse between parallel constant edges fails cancellation") {
    Hypergraph two(FinSet::range(2), FinSet::range(1), {{}, {}}, {{0}, {0}});
    Hypergraph one(FinSet::range(1), FinSet::range(1), {{}}, {{0}});
    HypMorphism c{FinFn::constant(two.edges, one.edges, 0),
                  FinFn::identity(two.nodes)};
    REQUIRE(validate_morphism(c, two, one));
    CHECK_FALSE(is_mono_hyp(c));
    CHECK_FALSE(is_mono_categorical(c, two));
  }
  SUBCASE("component predicate agrees with categorical cancellation") {
    Rng rng(21);
    GenBounds b{3, 2, 2};
    int done = 0;
    while (done < 40) {
      EqHypergraph ge = random_eqhyp(rng, b);
      EqHypergraph he = random_eqhyp(rng, b);
      for (const HypMorphism& m : all_morphisms(ge.graph, he.graph)) {
        CHECK(is_mono_hyp(m) == is_mono_categorical(m, ge.graph));
        ++done;
      }
    }
  }
}

TEST_CASE("hypergraph pushouts") {
  SUBCASE("pushout over the empty graph is the disjoint union") {
    Hypergraph e;
    Hypergraph g1(FinSet::range(1), FinSet::range(1), {{}}, {{0}});
    Hypergraph g2(FinSet::range(1), FinSet::range(2), {{0}}, {{1}});
    HypMorphism f{FinFn(e.edges, g1.edges, {}), FinFn(e.nodes, g1.nodes, {})};
    HypMorphism g{FinFn(e.edges, g2.edges, {}), FinFn(e.nodes, g2.nodes, {})};
    HypPushout po = pushout_hyp(e, g1, g2, f, g);
    CHECK(po.apex.edges.size() == 2);
    CHECK(po.apex.nodes.size() == 3);
  }
  SUBCASE("pushout along the identity is the other codomain") {
    Hypergraph g = example_graph();
    Hypergraph d = Hypergraph::discrete(FinSet({0, 1}));
    HypMorphism incl{FinFn(d.edges, g.edges, {}),
                     FinFn::inclusion(d.nodes, g.nodes)};
    HypPushout po = pushout_hyp(d, d, g, identity_morphism(d), incl);
    CHECK(po.apex.edges.size() == g.edges.size());
    CHECK(po.apex.nodes.size() == g.nodes.size());
    CHECK(is_mono_hyp(po.right));
  }
  SUBCASE("gluing two single-edge graphs along a shared node") {
    Hypergraph shared = Hypergraph::discrete(FinSet::range(1));
    Hypergraph g1(FinSet::range(1), FinSet::range(2), {{0}}, {{1}});
    Hypergraph g2(FinSet::range(1), FinSet::range(2), {{}}, {{0}});
    HypMorphism f{FinFn(shared.edges, g1.edges, {}),
                  FinFn(shared.nodes, g1.nodes, {0})};
    HypMorphism g{FinFn(shared.edges, g2.edges, {}),
                  FinFn(shared.nodes, g2.nodes, {0})};
    HypPushout po = pushout_hyp(shared, g1, g2, f, g);
    CHECK(po.apex.edges.size() == 2);
    CHECK(po.apex.nodes.size() == 3);
    CHECK(validate_morphism(po.left, g1, po.apex));
    CHECK(validate_morphism(po.right, g2, po.apex));
    CHECK(compose(po.left, f) == compose(po.right, g));
  }
  SUBCASE("universal property against small cocones") {
    Hypergraph shared = Hypergraph::discrete(FinSet::range(1));
    Hypergraph g1(FinSet::range(1), FinSet::range(2), {{0}}, {{1}});
    Hypergraph g2(FinSet::range(1), FinSet::range(2), {{}}, {{0}});
    HypMorphism f{FinFn(shared.edges, g1.edges, {}),
                  FinFn(shared.nodes, g1.nodes, {0})};
    HypMorphism g{FinFn(shared.edges, g2.edges, {}),
                  FinFn(shared.nodes, g2.nodes, {0})};
    HypPushout po = pushout_hyp(shared, g1, g2, f, g);

    std::vector<Hypergraph> targets;
    targets.push_back(example_graph());
    targets.push_back(
        Hypergraph(FinSet::range(2), FinSet::range(2), {{0}, {}}, {{1}, {0}}));
    targets.push_back(Hypergraph::discrete(FinSet::range(3)));
    for (const Hypergraph& d : targets) {
      for (const HypMorphism& u1 : all_morphisms(g1, d))
        for (const HypMorphism& u2 : all_morphisms(g2, d)) {
          if (!(compose(u1, f) == compose(u2, g))) continue;
          std::size_t mediators = 0;
          for (const HypMorphism& u : all_morphisms(po.apex, d))
            if (compose(u, po.left) == u1 && compose(u, po.right) == u2)
              ++mediators;
          CHECK(mediators == 1);
        }
    }
  }
  SUBCASE("pushouts along monos are pullbacks") {
    Rng rng(22);
    GenBounds b{3, 2, 2};
    for (int t = 0; t < 60; ++t) {
      EqHypergraph host = random_eqhyp(rng, b);
      SubObject sub = random_subobject(rng, host);
      OutMorphism out = random_out_morphism(rng, sub.sub, b);
      HypMorphism m{sub.incl.edge_map, sub.incl.node_map};
      HypMorphism h{out.map.edge_map, out.map.node_map};
      HypPushout po = pushout_hyp(sub.sub.graph, out.cod.graph, host.graph, h, m);
      HypSquare sq{sub.sub.graph, out.cod.graph, host.graph, po.apex, h, m,
                   po.left, po.right};
      CHECK(certify_pullback(sq));
    }
  }
}

TEST_CASE("hypergraph pullbacks") {
  Hypergraph g = example_graph();
  SUBCASE("pullback along the identity") {
    Hypergraph sub(FinSet({2}), FinSet({0, 1, 2}), {{0, 1}}, {{2}});
    HypMorphism incl{FinFn::inclusion(sub.edges, g.edges),
                     FinFn::inclusion(sub.nodes, g.nodes)};
    HypPullback pb = pullback_hyp(sub, g, g, incl, identity_morphism(g));
    CHECK(pb.apex.edges.size() == sub.edges.size());
    CHECK(pb.apex.nodes.size() == sub.nodes.size());
  }
  SUBCASE("disjoint node inclusions pull back to the empty graph") {
    Hypergraph d2 = Hypergraph::discrete(FinSet::range(2));
    Hypergraph one = Hypergraph::discrete(FinSet::range(1));
    HypMorphism i0{FinFn(one.edges, d2.edges, {}), FinFn(one.nodes, d2.nodes, {0})};
    HypMorphism i1{FinFn(one.edges, d2.edges, {}), FinFn(one.nodes, d2.nodes, {1})};
    HypPullback pb = pullback_hyp(one, one, d2, i0, i1);
    CHECK(pb.apex.nodes.empty());
    CHECK(pb.apex.edges.empty());
  }
  SUBCASE("kernel pair of an edge collapse lists the identified pairs") {
    Hypergraph two(FinSet::range(2), FinSet::range(1), {{}, {}}, {{0}, {0}});
    Hypergraph one(FinSet::range(1), FinSet::range(1), {{}}, {{0}});
    HypMorphism c{FinFn::constant(two.edges, one.edges, 0),
                  FinFn::identity(two.nodes)};
    HypPullback kp = pullback_hyp(two, two, one, c, c);
    std::size_t expected = 0;
    for (ElemId e1 : two.edges)
      for (ElemId e2 : two.edges)
        if (c.edge_map(e1) == c.edge_map(e2)) ++expected;
    CHECK(kp.apex.edges.size() == expected);
    CHECK(expected == 4);
  }
}

TEST_CASE("discrete graphs and the node adjunction") {
  CHECK(Hypergraph::discrete(FinSet{}).nodes.empty());
  Hypergraph dv = Hypergraph::discrete(FinSet::range(1));
  CHECK(dv.nodes.size() == 1);
  CHECK(dv.edges.empty());
  // morphisms discrete(X) -> H are exactly the node functions X -> V_H
  Hypergraph h = example_graph();
  Hypergraph dx = Hypergraph::discrete(FinSet::range(2));
  std::size_t count = all_morphisms(dx, h).size();
  std::size_t expected = 1;
  for (std::size_t i = 0; i < dx.nodes.size(); ++i) expected *= h.nodes.size();
  CHECK(count == expected);
}
