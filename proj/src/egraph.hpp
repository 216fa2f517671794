#ifndef AEGG_EGRAPH_HPP
#define AEGG_EGRAPH_HPP

#include "eqhyp.hpp"
#include "sexpr.hpp"

namespace aegg {

// Closure condition on a bare hypergraph with equivalence: any two edges
// with classwise-equal source words have classwise-equal target words.
bool is_e_hypergraph(const EqHypergraph& g);

// Closure condition for labelled objects: the kernel pair is taken over
// (label, classwise source word), so only equally-labelled edges are
// compared. This is the operator-closure of e-graphs; constants with
// distinct symbols stay independent.
bool is_e_hypergraph(const LabelledEqHypergraph& g);

// E-term graph: a term graph whose equivalence is closed under the
// operators.
bool is_egg(const LabelledEqHypergraph& g);

// True iff the defined-by relation (a node depends on the sources of its
// defining edge) has no cycle.
bool is_acyclic(const LabelledEqHypergraph& g);

struct EGraph {
  LabelledEqHypergraph base;
  bool acyclic = true;

  EGraph() = default;
  // Validates is_egg; computes the acyclicity cache.
  explicit EGraph(LabelledEqHypergraph base);

  const Signature& sig() const { return base.sig; }
  bool operator==(const EGraph& o) const { return base == o.base; }
};

// One edge and one node per term position (depth-first, root first), classes
// the finest operator-closed equivalence (congruence closure from
// singletons).
EGraph term_to_egg(const Term& t, const Signature& sig);

// Smallest coarsening of the quotient restoring closure. Only the class
// structure changes; edges, nodes and incidences stay fixed. Classes are
// renumbered canonically.
LabelledEqHypergraph rebuild(const LabelledEqHypergraph& g);

// Repeatedly fuses nodes defined by edges with equal label and pointwise
// equal source words, together with their defining edges. Rejects cyclic
// input.
EGraph maximally_share(const EGraph& g);

// Renumbers edges and nodes to dense ids 0..n-1 (keeping relative order) and
// classes canonically by minimal member node.
LabelledEqHypergraph canonicalize(const LabelledEqHypergraph& g);

}  // namespace aegg

#endif
