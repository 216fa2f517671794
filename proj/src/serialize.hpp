#ifndef AEGG_SERIALIZE_HPP
#define AEGG_SERIALIZE_HPP

#include <json.hpp>

#include "adhesion.hpp"
#include "dpo.hpp"

namespace aegg {

using nlohmann::json;

json finset_to_json(const FinSet& s);
FinSet finset_from_json(const json& j);

json finfn_to_json(const FinFn& f);
FinFn finfn_from_json(const json& j);

// {nodes, edges:[{id, src, tgt, label?}], classes, q, root?}
json graph_to_json(const LabelledEqHypergraph& g,
                   std::optional<ElemId> root = std::nullopt);
LabelledEqHypergraph graph_from_json(const json& j, const Signature& sig,
                                     std::optional<ElemId>* root = nullptr);

// Morphism components as pair lists keyed by "edges", "nodes", "classes";
// the class component may be omitted, in which case the unique induced one
// is used.
json morphism_to_json(const EqMorphism& m);
EqMorphism morphism_from_json(const json& j, const EqHypergraph& g,
                              const EqHypergraph& h);

// Deterministic DOT rendering: dots for nodes, labelled boxes for edges,
// dashed clusters for classes.
std::string to_dot(const LabelledEqHypergraph& g);

json report_to_json(const SaturationReport& r);
json report_to_json(const CampaignReport& r);

CostTable cost_table_from_json(const json& j);

}  // namespace aegg

#endif
