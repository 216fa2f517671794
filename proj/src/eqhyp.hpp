#ifndef AEGG_EQHYP_HPP
#define AEGG_EQHYP_HPP

#include <optional>

#include "termgraph.hpp"

namespace aegg {

// Hypergraph with equivalence: a hypergraph plus a surjective quotient map
// from nodes onto a class set.
struct EqHypergraph {
  Hypergraph graph;
  FinSet classes;
  FinFn quotient;  // nodes -> classes, surjective

  EqHypergraph() = default;
  EqHypergraph(Hypergraph graph, FinSet classes, FinFn quotient);

  ElemId class_of(ElemId node) const { return quotient(node); }
  Word classes_of(const Word& w) const { return quotient.map_word(w); }

  bool operator==(const EqHypergraph&) const = default;
};

// Left adjoint to the underlying-hypergraph functor: identity quotient.
EqHypergraph free_eq(Hypergraph h);
// Right adjoint: everything in one class (empty class set for the empty
// node set, since quotient maps must stay surjective).
EqHypergraph indiscrete_eq(Hypergraph h);

struct EqMorphism {
  FinFn edge_map;
  FinFn node_map;
  FinFn class_map;

  bool operator==(const EqMorphism&) const = default;
};

EqMorphism identity_eq(const EqHypergraph& g);
EqMorphism compose(const EqMorphism& g, const EqMorphism& f);

// True iff the two hypergraph squares and the quotient square all commute.
bool validate_eq_morphism(const EqMorphism& m, const EqHypergraph& g,
                          const EqHypergraph& h);

// The unique class component compatible with a node component, when one
// exists (morphisms are determined by their first two components).
std::optional<FinFn> induced_class_map(const FinFn& node_map,
                                       const EqHypergraph& g,
                                       const EqHypergraph& h);

struct EqPushout {
  EqHypergraph apex;
  EqMorphism left, right;
};

EqPushout pushout_eqhyp(const EqHypergraph& g0, const EqHypergraph& g1,
                        const EqHypergraph& g2, const EqMorphism& f,
                        const EqMorphism& g);

struct EqPullback {
  EqHypergraph apex;
  EqMorphism left, right;
};

// Componentwise on edges and nodes; the class set is the image of the node
// apex inside the class pullback, so the quotient stays surjective.
EqPullback pullback_eqhyp(const EqHypergraph& g1, const EqHypergraph& g2,
                          const EqHypergraph& g3, const EqMorphism& f,
                          const EqMorphism& g);

bool is_mono_eq(const EqMorphism& m);
bool is_regular_mono_eq(const EqMorphism& m);

// Regular mono whose node/class square is a pullback: the image of the node
// component is a union of full classes of the classes hit by the class
// component.
bool is_pb_mono(const EqMorphism& m, const EqHypergraph& g,
                const EqHypergraph& h);

// A labelled hypergraph with equivalence.
struct LabelledEqHypergraph {
  EqHypergraph eq;
  std::vector<std::string> labels;  // aligned with sorted edge order
  Signature sig;

  LabelledEqHypergraph() = default;
  LabelledEqHypergraph(EqHypergraph eq, std::vector<std::string> labels,
                       Signature sig);

  Labelling labelling() const { return Labelling(eq.graph, labels, sig); }
  const std::string& label(ElemId e) const {
    return labels[eq.graph.edges.index_of(e)];
  }

  bool operator==(const LabelledEqHypergraph&) const = default;
};

bool labels_compatible(const EqMorphism& m, const LabelledEqHypergraph& g,
                       const LabelledEqHypergraph& h);

// Class T: componentwise injective with a pullback node/class square, and
// input-node preserving on the underlying term graphs.
bool is_T_morphism(const EqMorphism& m, const LabelledEqHypergraph& g,
                   const LabelledEqHypergraph& h);

struct LabelledEqPushout {
  LabelledEqHypergraph apex;
  EqMorphism left, right;
};

LabelledEqPushout pushout_labelled_eq(const LabelledEqHypergraph& g0,
                                      const LabelledEqHypergraph& g1,
                                      const LabelledEqHypergraph& g2,
                                      const EqMorphism& f, const EqMorphism& g);

}  // namespace aegg

#endif
