#ifndef AEGG_ADHESION_HPP
#define AEGG_ADHESION_HPP

#include <cstdint>
#include <random>

#include "egraph.hpp"

namespace aegg {

// ---------------------------------------------------------------------------
// Squares and cubes
// ---------------------------------------------------------------------------

// Commuting square
//
//        f
//    A ----> B
//    |       |
//  g |       | h
//    v       v
//    C ----> D
//        k
struct FinSquare {
  FinSet a, b, c, d;
  FinFn f, g, h, k;
};

struct HypSquare {
  Hypergraph a, b, c, d;
  HypMorphism f, g, h, k;
};

struct EqSquare {
  EqHypergraph a, b, c, d;
  EqMorphism f, g, h, k;
};

bool square_commutes(const FinSquare& s);
bool square_commutes(const EqSquare& s);

// Pushout certification: computes the canonical pushout of (f, g) and checks
// that the induced mediating map onto d is an isomorphism. Throws on
// non-commuting input.
bool certify_pushout(const FinSquare& s);
bool certify_pushout(const HypSquare& s);
bool certify_pushout(const EqSquare& s);

// Pullback certification, dually: the mediator from a into the canonical
// pullback of (h, k) must be an isomorphism.
bool certify_pullback(const FinSquare& s);
bool certify_pullback(const HypSquare& s);
bool certify_pullback(const EqSquare& s);

// A cube over a bottom square; primed objects on top.
//
//        top:  a' -> b', a' -> c', b' -> d', c' -> d'
//   verticals: va : a' -> a, ... vd : d' -> d
//      bottom: as in EqSquare
struct EqCube {
  EqSquare bottom;
  EqSquare top;
  EqMorphism va, vb, vc, vd;

  EqSquare back() const;   // a', b', a, b
  EqSquare left() const;   // a', c', a, c
  EqSquare front() const;  // c', d', c, d
  EqSquare right() const;  // b', d', b, d
};

enum class MonoClass { Mono, Regular, Pb };

bool morphism_in_class(const EqMorphism& m, const EqHypergraph& dom,
                       const EqHypergraph& cod, MonoClass cls);

struct VkVerdict {
  bool preconditions_ok = false;
  std::string precondition_failure;
  bool top_pushout = false;
  bool front_pullback = false;
  bool right_pullback = false;
  bool biconditional_holds = false;
};

// Checks the Van Kampen biconditional on a cube whose bottom is a pushout
// along the g leg (required to lie in `cls`), with pullbacks as back and
// left faces and vertical arrows in Reg.
VkVerdict check_vk_cube(const EqCube& cube, MonoClass cls);

// ---------------------------------------------------------------------------
// Random generation (all deterministic from the engine state)
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

struct GenBounds {
  std::size_t max_nodes = 3;
  std::size_t max_edges = 3;
  std::size_t max_arity = 2;
};

FinSet random_finset(Rng& rng, std::size_t max_size);
FinFn random_fn(Rng& rng, const FinSet& dom, const FinSet& cod);
EqHypergraph random_eqhyp(Rng& rng, const GenBounds& b);

// Random sub-object (induced on a random node subset); a regular mono.
struct SubObject {
  EqHypergraph sub;
  EqMorphism incl;
};
SubObject random_subobject(Rng& rng, const EqHypergraph& g);
// Random full-class sub-object; a Pb mono.
SubObject random_pb_subobject(Rng& rng, const EqHypergraph& g);
// Full-class sub-object additionally closed under edge sources: every edge
// whose source classes all lie in the chosen classes is included together
// with its target classes. Used by the closure-preservation campaign.
SubObject random_closed_pb_subobject(Rng& rng, const EqHypergraph& g);

// Random morphism out of g: merges some nodes, adds fresh nodes and edges,
// coarsens classes.
struct OutMorphism {
  EqHypergraph cod;
  EqMorphism map;
};
OutMorphism random_out_morphism(Rng& rng, const EqHypergraph& g, const GenBounds& b);

// Coarsens the quotient until the label-blind closure condition holds
// (smallest such coarsening); nullopt when impossible (equal-source edges
// whose target words differ in length).
std::optional<EqHypergraph> close_eqhyp(const EqHypergraph& g);

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

struct CampaignFailure {
  std::uint64_t trial = 0;
  std::string detail;
  // witness sizes (nodes of the shrunk vertical subobject vs the original
  // draw), when the campaign minimizes its counterexamples
  std::size_t witness_size = 0;
  std::size_t original_size = 0;
  std::string witness;
};

struct CampaignReport {
  std::string kind;
  std::uint64_t trials = 0;
  std::uint64_t performed = 0;  // trials that met the generation preconditions
  std::uint64_t seed = 0;
  GenBounds bounds;
  std::vector<CampaignFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Pb-pushout stability: generates cubes with all side faces pullbacks,
// regular-mono verticals and a pushout bottom along a Pb (or, when relaxed,
// merely regular-mono) leg, then certifies the top face as a pushout.
CampaignReport check_pb_stability(std::uint64_t trials, const GenBounds& b,
                                  std::uint64_t seed, MonoClass bottom_class);

// Reg-Van-Kampen biconditional on Pb-pushouts, both directions.
CampaignReport check_vk_campaign(std::uint64_t trials, const GenBounds& b,
                                 std::uint64_t seed);

// Kernel-pair lemmas in finite sets: induced arrow between kernel pairs
// (existence, uniqueness, mono and pullback transfer) and the kernel-pair
// pushout square of a suitable cube.
CampaignReport check_kernel_pair_lemmas(std::uint64_t trials, std::uint64_t seed);

// Pushouts of closure-closed e-hypergraph sub-objects preserve the closure
// condition without any rebuild.
CampaignReport check_e_closure_preservation(std::uint64_t trials, const GenBounds& b,
                                            std::uint64_t seed);

// The fixed stability counterexample: one-class discrete graphs glued over a
// shared node; bottom a pushout, side faces pullbacks, top not a pushout.
EqCube counterexample_cube();

// ---------------------------------------------------------------------------
// Small exhaustive helpers shared with the test suites
// ---------------------------------------------------------------------------

std::vector<FinFn> enumerate_functions(const FinSet& dom, const FinSet& cod);

// Number of mediating maps u : apex -> d with u . left = h and u . right = k.
std::size_t count_pushout_mediators(const CospanResult& po, const FinFn& h,
                                    const FinFn& k, const FinSet& d);
// Number of mediating maps u : x -> apex with left . u = f and right . u = g.
std::size_t count_pullback_mediators(const SpanResult& pb, const FinFn& f,
                                     const FinFn& g, const FinSet& x);

}  // namespace aegg

#endif
