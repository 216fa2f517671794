#ifndef AEGG_HYPERGRAPH_HPP
#define AEGG_HYPERGRAPH_HPP

#include "finset.hpp"

namespace aegg {

// Hypergraph with word-valued source and target incidences, stored as
// explicit tables aligned with the sorted edge order.
struct Hypergraph {
  FinSet edges;
  FinSet nodes;
  std::vector<Word> srcs;
  std::vector<Word> tgts;

  Hypergraph() = default;
  Hypergraph(FinSet edges, FinSet nodes, std::vector<Word> srcs,
             std::vector<Word> tgts);

  static Hypergraph discrete(FinSet nodes);

  const Word& src(ElemId e) const { return srcs[edges.index_of(e)]; }
  const Word& tgt(ElemId e) const { return tgts[edges.index_of(e)]; }

  bool operator==(const Hypergraph&) const = default;
};

// Morphism components; carriers are carried by the FinFns themselves.
struct HypMorphism {
  FinFn edge_map;
  FinFn node_map;

  bool operator==(const HypMorphism&) const = default;
};

HypMorphism identity_morphism(const Hypergraph& g);
HypMorphism compose(const HypMorphism& g, const HypMorphism& f);

// True iff both naturality squares commute. Throws on carrier mismatch.
bool validate_morphism(const HypMorphism& m, const Hypergraph& g,
                       const Hypergraph& h);

bool is_mono_hyp(const HypMorphism& m);

struct HypPushout {
  Hypergraph apex;
  HypMorphism left;   // G1 -> apex
  HypMorphism right;  // G2 -> apex
};

// Pushout of f : G0 -> G1 and g : G0 -> G2, computed componentwise with the
// apex incidences induced along the colimit legs.
HypPushout pushout_hyp(const Hypergraph& g0, const Hypergraph& g1,
                       const Hypergraph& g2, const HypMorphism& f,
                       const HypMorphism& g);

struct HypPullback {
  Hypergraph apex;
  HypMorphism left;   // apex -> G1
  HypMorphism right;  // apex -> G2
};

// Pullback of f : G1 -> G3 and g : G2 -> G3, componentwise; the apex
// incidences are the unique words projecting to both sides.
HypPullback pullback_hyp(const Hypergraph& g1, const Hypergraph& g2,
                         const Hypergraph& g3, const HypMorphism& f,
                         const HypMorphism& g);

}  // namespace aegg

#endif
