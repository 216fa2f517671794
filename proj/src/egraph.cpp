#include "egraph.hpp"

#include <algorithm>
#include <map>

#include "unionfind.hpp"

namespace aegg {
namespace {

// Canonical quotient from a union-find over node indices: classes dense,
// ordered by minimal member.
FinFn quotient_from_uf(const FinSet& nodes, const UnionFind& uf, FinSet* out_classes) {
  std::vector<ElemId> images(nodes.size());
  std::map<std::size_t, ElemId> rep_to_class;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t r = uf.find(i);
    auto [it, _] = rep_to_class.emplace(r, static_cast<ElemId>(rep_to_class.size()));
    images[i] = it->second;
  }
  *out_classes = FinSet::range(rep_to_class.size());
  return FinFn(nodes, *out_classes, std::move(images));
}

}  // namespace

bool is_e_hypergraph(const EqHypergraph& g) {
  const std::size_t n = g.graph.edges.size();
  std::vector<Word> src_cls(n), tgt_cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    src_cls[i] = g.classes_of(g.graph.srcs[i]);
    tgt_cls[i] = g.classes_of(g.graph.tgts[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (src_cls[i] == src_cls[j] && tgt_cls[i] != tgt_cls[j]) return false;
  return true;
}

bool is_e_hypergraph(const LabelledEqHypergraph& g) {
  const std::size_t n = g.eq.graph.edges.size();
  std::vector<Word> src_cls(n), tgt_cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    src_cls[i] = g.eq.classes_of(g.eq.graph.srcs[i]);
    tgt_cls[i] = g.eq.classes_of(g.eq.graph.tgts[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.labels[i] == g.labels[j] && src_cls[i] == src_cls[j] &&
          tgt_cls[i] != tgt_cls[j])
        return false;
  return true;
}

bool is_egg(const LabelledEqHypergraph& g) {
  return is_term_graph(g.labelling()) && is_e_hypergraph(g);
}

bool is_acyclic(const LabelledEqHypergraph& g) {
  const Hypergraph& h = g.eq.graph;
  // defining edge index per node, if any
  std::vector<int> def(h.nodes.size(), -1);
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    def[h.nodes.index_of(h.tgts[i][0])] = static_cast<int>(i);

  enum State { White, Grey, Black };
  std::vector<State> state(h.nodes.size(), White);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < h.nodes.size(); ++start) {
    if (state[start] != White) continue;
    stack.push_back(start);
    std::vector<std::size_t> order;
    // iterative DFS with explicit finish states
    while (!stack.empty()) {
      std::size_t v = stack.back();
      if (state[v] == White) {
        state[v] = Grey;
        if (def[v] >= 0)
          for (ElemId u : h.srcs[static_cast<std::size_t>(def[v])]) {
            std::size_t ui = h.nodes.index_of(u);
            if (state[ui] == Grey) return false;
            if (state[ui] == White) stack.push_back(ui);
          }
      } else {
        state[v] = Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

EGraph::EGraph(LabelledEqHypergraph base_in) : base(std::move(base_in)) {
  if (!is_term_graph(base.labelling()))
    throw Error("EGraph: underlying labelling is not a term graph");
  if (!is_e_hypergraph(base))
    throw Error("EGraph: equivalence is not closed under the operators");
  acyclic = is_acyclic(base);
}

EGraph term_to_egg(const Term& t, const Signature& sig) {
  std::vector<std::string> labels;
  std::vector<Word> srcs, tgts;

  // Depth-first, root position first; returns the node of the position.
  auto build = [&](auto&& self, const Term& term) -> ElemId {
    auto ar = sig.arity(term.symbol);
    if (!ar) throw Error("term_to_egg: unknown symbol " + term.symbol);
    if (*ar != term.children.size())
      throw Error("term_to_egg: arity mismatch for " + term.symbol + " (expected " +
                  std::to_string(*ar) + ", got " +
                  std::to_string(term.children.size()) + ")");
    ElemId id = static_cast<ElemId>(labels.size());
    labels.push_back(term.symbol);
    srcs.emplace_back();
    tgts.push_back(Word{id});
    Word children;
    for (const Term& child : term.children) children.push_back(self(self, child));
    srcs[id] = std::move(children);
    return id;
  };
  build(build, t);

  FinSet edges = FinSet::range(labels.size());
  FinSet nodes = FinSet::range(labels.size());
  Hypergraph h(edges, nodes, std::move(srcs), std::move(tgts));
  LabelledEqHypergraph start(free_eq(std::move(h)), std::move(labels), sig);
  return EGraph(rebuild(start));
}

LabelledEqHypergraph rebuild(const LabelledEqHypergraph& g) {
  if (!is_term_graph(g.labelling()))
    throw Error("rebuild: underlying labelling is not a term graph");
  const Hypergraph& h = g.eq.graph;
  // Work over node indices; classes are tracked by uniting nodes that share
  // a class, then coarsening under the operator congruence.
  UnionFind uf(h.nodes.size());
  {
    std::map<ElemId, std::size_t> first_in_class;
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      ElemId c = g.eq.quotient(h.nodes.at(i));
      auto [it, fresh] = first_in_class.emplace(c, i);
      if (!fresh) uf.unite(it->second, i);
    }
  }

  auto canon_word = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (ElemId v : w)
      out.push_back(static_cast<ElemId>(uf.find(h.nodes.index_of(v))));
    return out;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::string, Word>, std::size_t> groups;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      auto key = std::make_pair(g.labels[i], canon_word(h.srcs[i]));
      std::size_t tgt = h.nodes.index_of(h.tgts[i][0]);
      auto [it, fresh] = groups.emplace(std::move(key), tgt);
      if (!fresh && uf.unite(it->second, tgt)) changed = true;
    }
  }

  FinSet classes;
  FinFn q = quotient_from_uf(h.nodes, uf, &classes);
  return LabelledEqHypergraph(EqHypergraph(h, classes, q), g.labels, g.sig);
}

EGraph maximally_share(const EGraph& g) {
  if (!g.acyclic) throw Error("maximally_share: cyclic input");
  LabelledEqHypergraph cur = g.base;
  while (true) {
    const Hypergraph& h = cur.eq.graph;
    // Find two edges with equal label and pointwise equal sources.
    std::size_t fuse_a = 0, fuse_b = 0;
    bool found = false;
    for (std::size_t i = 0; i < h.edges.size() && !found; ++i)
      for (std::size_t j = i + 1; j < h.edges.size() && !found; ++j)
        if (cur.labels[i] == cur.labels[j] && h.srcs[i] == h.srcs[j]) {
          fuse_a = i;
          fuse_b = j;
          found = true;
        }
    if (!found) break;

    // Drop edge b, redirect its target node onto a's target node.
    ElemId keep_node = h.tgts[fuse_a][0], drop_node = h.tgts[fuse_b][0];
    ElemId drop_edge = h.edges.at(fuse_b);

    std::vector<ElemId> new_edge_ids, new_node_ids;
    for (ElemId e : h.edges)
      if (e != drop_edge) new_edge_ids.push_back(e);
    for (ElemId v : h.nodes)
      if (v != drop_node) new_node_ids.push_back(v);
    FinSet edges(new_edge_ids), nodes(new_node_ids);

    auto redirect = [&](const Word& w) {
      Word out = w;
      for (ElemId& v : out)
        if (v == drop_node) v = keep_node;
      return out;
    };
    std::vector<Word> srcs, tgts;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      if (i == fuse_b) continue;
      srcs.push_back(redirect(h.srcs[i]));
      tgts.push_back(redirect(h.tgts[i]));
      labels.push_back(cur.labels[i]);
    }
    Hypergraph nh(edges, nodes, std::move(srcs), std::move(tgts));

    // Classes follow the node fusion.
    UnionFind uf(nodes.size());
    {
      std::map<ElemId, std::size_t> first_in_class;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        ElemId v = nodes.at(i);
        ElemId c = cur.eq.quotient(v == keep_node ? keep_node : v);
        auto [it, fresh] = first_in_class.emplace(c, i);
        if (!fresh) uf.unite(it->second, i);
      }
      // drop_node's class collapses onto keep_node's class
      ElemId dropped_cls = cur.eq.quotient(drop_node);
      ElemId kept_cls = cur.eq.quotient(keep_node);
      if (dropped_cls != kept_cls) {
        std::size_t anchor = nodes.index_of(keep_node);
        for (std::size_t i = 0; i < nodes.size(); ++i)
          if (cur.eq.quotient(nodes.at(i)) == dropped_cls) uf.unite(anchor, i);
      }
    }
    FinSet classes;
    FinFn q = quotient_from_uf(nodes, uf, &classes);
    cur = LabelledEqHypergraph(EqHypergraph(std::move(nh), classes, q),
                               std::move(labels), cur.sig);
  }
  return EGraph(canonicalize(rebuild(cur)));
}

LabelledEqHypergraph canonicalize(const LabelledEqHypergraph& g) {
  const Hypergraph& h = g.eq.graph;
  FinSet edges = FinSet::range(h.edges.size());
  FinSet nodes = FinSet::range(h.nodes.size());
  auto renumber = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (ElemId v : w) out.push_back(static_cast<ElemId>(h.nodes.index_of(v)));
    return out;
  };
  std::vector<Word> srcs, tgts;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    srcs.push_back(renumber(h.srcs[i]));
    tgts.push_back(renumber(h.tgts[i]));
  }
  Hypergraph nh(edges, nodes, std::move(srcs), std::move(tgts));

  // Classes ordered by minimal member node.
  std::vector<ElemId> images(nodes.size());
  std::map<ElemId, ElemId> old_to_new;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    ElemId oc = g.eq.quotient(h.nodes.at(i));
    auto [it, _] = old_to_new.emplace(oc, static_cast<ElemId>(old_to_new.size()));
    images[i] = it->second;
  }
  FinSet classes = FinSet::range(old_to_new.size());
  FinFn q(nodes, classes, std::move(images));
  return LabelledEqHypergraph(EqHypergraph(std::move(nh), std::move(classes), std::move(q)),
                              g.labels, g.sig);
}

}  // namespace aegg
