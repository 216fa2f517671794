#include "termgraph.hpp"

#include <algorithm>
#include <sstream>

namespace aegg {

Signature::Signature(std::vector<std::pair<std::string, unsigned>> ops)
    : ops_(std::move(ops)) {
  std::sort(ops_.begin(), ops_.end());
  for (std::size_t i = 1; i < ops_.size(); ++i)
    if (ops_[i - 1].first == ops_[i].first)
      throw Error("Signature: duplicate symbol " + ops_[i].first);
}

Signature Signature::parse(const std::string& text) {
  std::vector<std::pair<std::string, unsigned>> ops;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    std::string name;
    long arity = -1;
    if (kw != "op" || !(ls >> name >> arity) || arity < 0)
      throw Error("Signature: bad line " + std::to_string(lineno) + ": " + line);
    ops.emplace_back(name, static_cast<unsigned>(arity));
  }
  return Signature(std::move(ops));
}

std::string Signature::to_text() const {
  std::string out;
  for (const auto& [name, ar] : ops_)
    out += "op " + name + " " + std::to_string(ar) + "\n";
  return out;
}

std::optional<unsigned> Signature::arity(const std::string& name) const {
  auto it = std::lower_bound(
      ops_.begin(), ops_.end(), name,
      [](const auto& op, const std::string& n) { return op.first < n; });
  if (it == ops_.end() || it->first != name) return std::nullopt;
  return it->second;
}

std::size_t Signature::index_of(const std::string& name) const {
  auto it = std::lower_bound(
      ops_.begin(), ops_.end(), name,
      [](const auto& op, const std::string& n) { return op.first < n; });
  if (it == ops_.end() || it->first != name)
    throw Error("Signature: unknown symbol " + name);
  return static_cast<std::size_t>(it - ops_.begin());
}

Hypergraph sigma_graph(const Signature& sig) {
  FinSet edges = FinSet::range(sig.ops().size());
  FinSet nodes = FinSet::range(1);
  std::vector<Word> srcs, tgts;
  for (const auto& [name, ar] : sig.ops()) {
    (void)name;
    srcs.push_back(Word(ar, 0));
    tgts.push_back(Word{0});
  }
  return Hypergraph(std::move(edges), std::move(nodes), std::move(srcs),
                    std::move(tgts));
}

Labelling::Labelling(Hypergraph graph_in, std::vector<std::string> labels_in,
                     Signature sig_in)
    : graph(std::move(graph_in)), labels(std::move(labels_in)), sig(std::move(sig_in)) {
  if (labels.size() != graph.edges.size())
    throw Error("Labelling: label table must cover exactly the edge set");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto ar = sig.arity(labels[i]);
    if (!ar) throw Error("Labelling: unknown symbol " + labels[i]);
    if (graph.srcs[i].size() != *ar)
      throw Error("Labelling: arity mismatch for symbol " + labels[i]);
    if (graph.tgts[i].size() != 1)
      throw Error("Labelling: every labelled hyperedge needs a single target");
  }
}

HypMorphism to_sigma_morphism(const Labelling& l) {
  Hypergraph gs = sigma_graph(l.sig);
  std::vector<ElemId> edge_images;
  edge_images.reserve(l.labels.size());
  for (const std::string& s : l.labels)
    edge_images.push_back(static_cast<ElemId>(l.sig.index_of(s)));
  return HypMorphism{FinFn(l.graph.edges, gs.edges, std::move(edge_images)),
                     FinFn::constant(l.graph.nodes, gs.nodes, 0)};
}

bool is_term_graph(const Labelling& l) {
  std::vector<ElemId> targets;
  targets.reserve(l.graph.edges.size());
  for (const Word& t : l.graph.tgts) {
    if (t.size() != 1) return false;
    targets.push_back(t[0]);
  }
  std::sort(targets.begin(), targets.end());
  return std::adjacent_find(targets.begin(), targets.end()) == targets.end();
}

FinSet input_nodes(const Labelling& l) {
  std::vector<ElemId> in;
  for (ElemId v : l.graph.nodes) {
    bool targeted = false;
    for (const Word& t : l.graph.tgts)
      if (t.size() == 1 && t[0] == v) {
        targeted = true;
        break;
      }
    if (!targeted) in.push_back(v);
  }
  return FinSet(std::move(in));
}

bool labels_compatible(const HypMorphism& m, const Labelling& g,
                       const Labelling& h) {
  for (ElemId e : g.graph.edges)
    if (g.label(e) != h.label(m.edge_map(e))) return false;
  return true;
}

bool is_regular_mono_tg(const HypMorphism& m, const Labelling& g,
                        const Labelling& h) {
  if (!validate_morphism(m, g.graph, h.graph))
    throw Error("is_regular_mono_tg: not a hypergraph morphism");
  if (!labels_compatible(m, g, h))
    throw Error("is_regular_mono_tg: labels not preserved");
  if (!is_term_graph(g) || !is_term_graph(h))
    throw Error("is_regular_mono_tg: endpoints must be term graphs");
  if (!is_mono_hyp(m)) throw Error("is_regular_mono_tg: morphism is not mono");
  FinSet gin = input_nodes(g), hin = input_nodes(h);
  for (ElemId v : gin)
    if (!hin.contains(m.node_map(v))) return false;
  return true;
}

LabelledPushout pushout_labelled(const Labelling& g0, const Labelling& g1,
                                 const Labelling& g2, const HypMorphism& f,
                                 const HypMorphism& g) {
  if (g0.sig != g1.sig || g0.sig != g2.sig)
    throw Error("pushout_labelled: mixed signatures");
  if (!labels_compatible(f, g0, g1) || !labels_compatible(g, g0, g2))
    throw Error("pushout_labelled: legs do not preserve labels");
  HypPushout base = pushout_hyp(g0.graph, g1.graph, g2.graph, f, g);

  std::vector<std::string> labels(base.apex.edges.size());
  std::vector<bool> filled(labels.size(), false);
  auto fill = [&](const Labelling& gi, const FinFn& leg) {
    for (ElemId e : gi.graph.edges) {
      std::size_t idx = base.apex.edges.index_of(leg(e));
      if (filled[idx]) {
        if (labels[idx] != gi.label(e))
          throw Error("pushout_labelled: label clash in apex");
      } else {
        labels[idx] = gi.label(e);
        filled[idx] = true;
      }
    }
  };
  fill(g1, base.left.edge_map);
  fill(g2, base.right.edge_map);

  return LabelledPushout{Labelling(base.apex, std::move(labels), g0.sig),
                         base.left, base.right};
}

}  // namespace aegg
