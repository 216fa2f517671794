#ifndef AEGG_DPO_HPP
#define AEGG_DPO_HPP

#include <map>

#include "adhesion.hpp"
#include "egraph.hpp"

namespace aegg {

class DanglingCondition : public Error {
  using Error::Error;
};
class IdentificationCondition : public Error {
  using Error::Error;
};

// A rule is a span L <- L -> R with identity left leg. The right leg embeds
// L in R edge- and node-injectively and preserves input nodes; its class
// component merges classes exactly when the right-hand side is a subterm of
// the left-hand side (the pure linking rules).
struct Rule {
  std::string name;
  EGraph lhs;
  EGraph rhs;
  EqMorphism embed;  // L -> R
  // Negative application conditions; a match is admissible only if it does
  // not factor through any of them.
  struct Nac {
    EGraph graph;
    EqMorphism embed;  // L -> N
  };
  std::vector<Nac> nacs;
  bool nacs_declared = false;  // false: the single NAC is the synthesized RHS
};

// Compiles a rule from patterns. Pattern variables are leaf symbols outside
// the signature; every occurrence becomes its own input node and occurrences
// of one variable share a class. Operator arguments are read through port
// nodes classed with the argument's root, so matching works up to the
// equivalence. When no NAC is declared, the right-hand side itself is
// installed as one.
Rule compile_rule(const RuleSpec& spec, const Signature& sig);

std::vector<Rule> compile_rules(const std::string& rules_text, const Signature& sig);

// Match admissibility classes. `Mono` asks for injectivity on equivalence
// classes, `Pb` additionally for the image classes to be fully covered by
// matched nodes. Node components may identify nodes of a shared class.
enum class MatchClass { Any, Mono, Pb };

MatchClass match_class_from_string(const std::string& s);
std::string to_string(MatchClass c);

struct DpoMatch {
  EqMorphism map;  // L -> G
};

// All label-, incidence- and class-compatible morphisms from the pattern
// into the target, with optional pre-assignments (pattern item -> target
// item) on edges and nodes.
std::vector<EqMorphism> enumerate_morphisms(
    const LabelledEqHypergraph& pattern, const LabelledEqHypergraph& target,
    const std::map<ElemId, ElemId>& edge_pins = {},
    const std::map<ElemId, ElemId>& node_pins = {}, bool first_only = false);

// Matches of the requested class in canonical order, NAC-filtered.
std::vector<DpoMatch> find_matches(const Rule& rule, const EGraph& g,
                                   MatchClass cls);

// True if the rule's right-hand side already embeds in g extending the
// match, i.e. the rewrite would add nothing.
bool effect_present(const Rule& rule, const DpoMatch& match, const EGraph& g);

struct ComplementResult {
  LabelledEqHypergraph context;
  EqMorphism embed;    // C -> G
  EqMorphism restrict; // K -> C
};

// Pushout complement of K >-l-> L -m-> G for a left leg in Pb. Throws
// DanglingCondition / IdentificationCondition when no complement exists;
// the completed square is certified as a pushout.
ComplementResult pushout_complement(const LabelledEqHypergraph& k,
                                    const LabelledEqHypergraph& l,
                                    const LabelledEqHypergraph& g,
                                    const EqMorphism& leg, const EqMorphism& m);

struct RewriteResult {
  EGraph result;
  EqMorphism tracking;  // G -> H
  bool closure_repaired = false;
};

RewriteResult apply_rule(const Rule& rule, const DpoMatch& match, const EGraph& g);

struct SaturationLimits {
  std::uint64_t max_iters = 64;
  std::uint64_t max_classes = 10000;
  std::uint64_t max_edges = 10000;
};

struct SaturationReport {
  std::uint64_t iterations = 0;
  std::uint64_t applications = 0;
  std::uint64_t rebuilds = 0;
  bool fixpoint = false;
  std::string limit;  // empty, "max-iters", "max-classes" or "max-edges"
  std::map<std::string, std::uint64_t> per_rule;
};

struct SaturationOutcome {
  EGraph graph;
  EqMorphism tracking;  // original graph -> saturated graph
  SaturationReport report;
};

SaturationOutcome saturate(const EGraph& g, const std::vector<Rule>& rules,
                           const SaturationLimits& limits,
                           MatchClass cls = MatchClass::Any);

// Per-symbol extraction costs; symbols default to cost 1. Costs must be
// positive so minimal derivations are well-founded.
struct CostTable {
  std::map<std::string, long long> costs;
  long long of(const std::string& sym) const {
    auto it = costs.find(sym);
    return it == costs.end() ? 1 : it->second;
  }
};

// The unique class none of whose nodes feeds any edge; errors when that
// class is not unique.
ElemId default_root_class(const EGraph& g);

// Minimum-cost term derivable from the root class. Ties break on the symbol
// first, then on the rendered child terms.
Term extract(const EGraph& g, ElemId root_class, const CostTable& cost = {});

}  // namespace aegg

#endif
