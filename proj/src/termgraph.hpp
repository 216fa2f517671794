#ifndef AEGG_TERMGRAPH_HPP
#define AEGG_TERMGRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypergraph.hpp"

namespace aegg {

// Algebraic signature: operation symbols with arities. Symbols are interned
// strings; numeric constants are just symbols of arity 0.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<std::pair<std::string, unsigned>> ops);

  // Text format: one "op NAME ARITY" line per symbol. Blank lines and lines
  // starting with '#' are ignored.
  static Signature parse(const std::string& text);
  std::string to_text() const;

  std::optional<unsigned> arity(const std::string& name) const;
  bool contains(const std::string& name) const { return arity(name).has_value(); }
  const std::vector<std::pair<std::string, unsigned>>& ops() const { return ops_; }
  // Index of a symbol in the sorted op order (the edge id in the signature
  // hypergraph).
  std::size_t index_of(const std::string& name) const;

  bool operator==(const Signature&) const = default;

private:
  std::vector<std::pair<std::string, unsigned>> ops_;  // sorted by name
};

// The hypergraph associated with a signature: one node, one edge per symbol
// (edge ids follow the sorted symbol order), source arity-many copies of the
// node, single-node target.
Hypergraph sigma_graph(const Signature& sig);

// A hypergraph labelled over a signature. Stored as a direct edge -> symbol
// table; the morphism into the signature hypergraph is materialized only on
// demand (to_sigma_morphism). The constructor enforces the labelling laws:
// every source word has the symbol's arity and every target is a single node.
struct Labelling {
  Hypergraph graph;
  std::vector<std::string> labels;  // aligned with sorted edge order
  Signature sig;

  Labelling() = default;
  Labelling(Hypergraph graph, std::vector<std::string> labels, Signature sig);

  const std::string& label(ElemId e) const { return labels[graph.edges.index_of(e)]; }
  // The corestricted target: edge -> its single target node.
  ElemId tau(ElemId e) const { return graph.tgt(e)[0]; }

  bool operator==(const Labelling&) const = default;
};

HypMorphism to_sigma_morphism(const Labelling& l);

// True iff the induced target-node map is injective (single targets are
// already enforced by construction).
bool is_term_graph(const Labelling& l);

// Nodes not in the image of the target map.
FinSet input_nodes(const Labelling& l);

bool labels_compatible(const HypMorphism& m, const Labelling& g,
                       const Labelling& h);

// Regular monos between term graphs are exactly the input-node preserving
// monos. Throws if m is not a label-compatible mono between term graphs.
bool is_regular_mono_tg(const HypMorphism& m, const Labelling& g,
                        const Labelling& h);

struct LabelledPushout {
  Labelling apex;
  HypMorphism left, right;
};

// Pushout in the slice over the signature hypergraph: the base pushout with
// the induced labelling.
LabelledPushout pushout_labelled(const Labelling& g0, const Labelling& g1,
                                 const Labelling& g2, const HypMorphism& f,
                                 const HypMorphism& g);

}  // namespace aegg

#endif
