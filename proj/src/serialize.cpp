#include "serialize.hpp"

#include <sstream>

namespace aegg {

json finset_to_json(const FinSet& s) { return json(s.elems()); }

FinSet finset_from_json(const json& j) {
  if (!j.is_array()) throw Error("finset: expected an array of ids");
  return FinSet(j.get<std::vector<ElemId>>());
}

json finfn_to_json(const FinFn& f) {
  json map = json::array();
  for (ElemId x : f.dom()) map.push_back(json::array({x, f(x)}));
  return json{{"dom", finset_to_json(f.dom())},
              {"cod", finset_to_json(f.cod())},
              {"map", map}};
}

FinFn finfn_from_json(const json& j) {
  FinSet dom = finset_from_json(j.at("dom"));
  FinSet cod = finset_from_json(j.at("cod"));
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (const json& p : j.at("map"))
    pairs.emplace_back(p.at(0).get<ElemId>(), p.at(1).get<ElemId>());
  return FinFn::from_pairs(std::move(dom), std::move(cod), pairs);
}

json graph_to_json(const LabelledEqHypergraph& g, std::optional<ElemId> root) {
  json edges = json::array();
  for (std::size_t i = 0; i < g.eq.graph.edges.size(); ++i)
    edges.push_back(json{{"id", g.eq.graph.edges.at(i)},
                         {"label", g.labels[i]},
                         {"src", json(g.eq.graph.srcs[i])},
                         {"tgt", json(g.eq.graph.tgts[i])}});
  json q = json::array();
  for (ElemId v : g.eq.graph.nodes)
    q.push_back(json::array({v, g.eq.quotient(v)}));
  json out{{"nodes", finset_to_json(g.eq.graph.nodes)},
           {"edges", edges},
           {"classes", finset_to_json(g.eq.classes)},
           {"q", q}};
  if (root) out["root"] = *root;
  return out;
}

LabelledEqHypergraph graph_from_json(const json& j, const Signature& sig,
                                     std::optional<ElemId>* root) {
  FinSet nodes = finset_from_json(j.at("nodes"));
  std::vector<std::pair<ElemId, std::pair<Word, Word>>> rows;
  std::vector<std::pair<ElemId, std::string>> label_rows;
  for (const json& e : j.at("edges")) {
    ElemId id = e.at("id").get<ElemId>();
    rows.push_back({id, {e.at("src").get<Word>(), e.at("tgt").get<Word>()}});
    label_rows.push_back({id, e.at("label").get<std::string>()});
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::sort(label_rows.begin(), label_rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ElemId> edge_ids;
  std::vector<Word> srcs, tgts;
  std::vector<std::string> labels;
  for (auto& [id, words] : rows) {
    edge_ids.push_back(id);
    srcs.push_back(std::move(words.first));
    tgts.push_back(std::move(words.second));
  }
  for (auto& [id, l] : label_rows) labels.push_back(l);
  Hypergraph h(FinSet(edge_ids), nodes, std::move(srcs), std::move(tgts));

  FinSet classes = finset_from_json(j.at("classes"));
  std::vector<std::pair<ElemId, ElemId>> q_pairs;
  for (const json& p : j.at("q"))
    q_pairs.emplace_back(p.at(0).get<ElemId>(), p.at(1).get<ElemId>());
  FinFn q = FinFn::from_pairs(h.nodes, classes, q_pairs);
  EqHypergraph eq(std::move(h), std::move(classes), std::move(q));
  if (root) {
    *root = std::nullopt;
    if (j.contains("root")) *root = j.at("root").get<ElemId>();
  }
  return LabelledEqHypergraph(std::move(eq), std::move(labels), sig);
}

json morphism_to_json(const EqMorphism& m) {
  auto pairs = [](const FinFn& f) {
    json out = json::array();
    for (ElemId x : f.dom()) out.push_back(json::array({x, f(x)}));
    return out;
  };
  return json{{"edges", pairs(m.edge_map)},
              {"nodes", pairs(m.node_map)},
              {"classes", pairs(m.class_map)}};
}

EqMorphism morphism_from_json(const json& j, const EqHypergraph& g,
                              const EqHypergraph& h) {
  auto read = [&](const char* key, const FinSet& dom, const FinSet& cod) {
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (const json& p : j.at(key))
      pairs.emplace_back(p.at(0).get<ElemId>(), p.at(1).get<ElemId>());
    return FinFn::from_pairs(dom, cod, pairs);
  };
  FinFn edge = read("edges", g.graph.edges, h.graph.edges);
  FinFn node = read("nodes", g.graph.nodes, h.graph.nodes);
  if (j.contains("classes")) {
    FinFn cls = read("classes", g.classes, h.classes);
    return EqMorphism{std::move(edge), std::move(node), std::move(cls)};
  }
  auto cls = induced_class_map(node, g, h);
  if (!cls)
    throw Error("morphism: node component induces no class component");
  return EqMorphism{std::move(edge), std::move(node), std::move(*cls)};
}

std::string to_dot(const LabelledEqHypergraph& g) {
  std::ostringstream out;
  out << "digraph egg {\n  rankdir=LR;\n";
  // dashed class clusters, ordered by class id; node dots inside by id
  for (ElemId c : g.eq.classes) {
    out << "  subgraph cluster_q" << c << " {\n    style=dashed;\n";
    for (ElemId v : g.eq.graph.nodes)
      if (g.eq.quotient(v) == c)
        out << "    n" << v << " [shape=point, xlabel=\"v" << v << "\"];\n";
    out << "  }\n";
  }
  for (std::size_t i = 0; i < g.eq.graph.edges.size(); ++i) {
    ElemId e = g.eq.graph.edges.at(i);
    out << "  e" << e << " [shape=box, label=\"" << g.labels[i] << "\"];\n";
  }
  for (std::size_t i = 0; i < g.eq.graph.edges.size(); ++i) {
    ElemId e = g.eq.graph.edges.at(i);
    const Word& s = g.eq.graph.srcs[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      out << "  n" << s[k] << " -> e" << e;
      if (s.size() > 1) out << " [label=\"" << (k + 1) << "\"]";
      out << ";\n";
    }
    for (ElemId v : g.eq.graph.tgts[i]) out << "  e" << e << " -> n" << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

json report_to_json(const SaturationReport& r) {
  json per_rule = json::object();
  for (const auto& [name, n] : r.per_rule) per_rule[name] = n;
  return json{{"iterations", r.iterations}, {"applications", r.applications},
              {"rebuilds", r.rebuilds},     {"fixpoint", r.fixpoint},
              {"limit", r.limit},           {"rules", per_rule}};
}

json report_to_json(const CampaignReport& r) {
  json failures = json::array();
  for (const CampaignFailure& f : r.failures) {
    json row{{"trial", f.trial}, {"detail", f.detail}};
    if (!f.witness.empty()) {
      row["witness"] = f.witness;
      row["witness_size"] = f.witness_size;
      row["original_size"] = f.original_size;
    }
    failures.push_back(row);
  }
  return json{{"kind", r.kind},
              {"trials", r.trials},
              {"performed", r.performed},
              {"seed", r.seed},
              {"bounds", json{{"max_nodes", r.bounds.max_nodes},
                              {"max_edges", r.bounds.max_edges},
                              {"max_arity", r.bounds.max_arity}}},
              {"failures", failures},
              {"ok", r.ok()}};
}

CostTable cost_table_from_json(const json& j) {
  CostTable t;
  for (auto it = j.begin(); it != j.end(); ++it)
    t.costs[it.key()] = it.value().get<long long>();
  return t;
}

}  // namespace aegg
