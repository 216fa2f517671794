#include "aegg.h"

#include <cstring>

#include "serialize.hpp"

using namespace aegg;

struct aegg_graph {
  Signature sig;
  LabelledEqHypergraph graph;
  std::optional<ElemId> root;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

aegg_status fail(const std::string& message) {
  g_last_error = message;
  return AEGG_ERROR;
}

template <typename F>
aegg_status guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return fail(e.what());
  } catch (...) {
    return fail("unknown error");
  }
}

json check_verdict(const aegg_graph& g, const std::string& predicate,
                   bool* holds) {
  if (predicate == "term-graph") {
    *holds = is_term_graph(g.graph.labelling());
  } else if (predicate == "e-hypergraph") {
    *holds = is_e_hypergraph(g.graph);
  } else if (predicate == "egg") {
    *holds = is_egg(g.graph);
  } else if (predicate == "acyclic") {
    *holds = is_acyclic(g.graph);
  } else {
    throw Error("unknown predicate " + predicate +
                " (expected term-graph, e-hypergraph, egg or acyclic)");
  }
  return json{{"predicate", predicate}, {"holds", *holds}};
}

}  // namespace

extern "C" {

const char* aegg_last_error(void) { return g_last_error.c_str(); }

void aegg_string_free(char* s) { delete[] s; }

void aegg_graph_free(aegg_graph* g) { delete g; }

aegg_status aegg_parse_term(const char* signature_text, const char* term_text,
                            int max_share, aegg_graph** out) {
  return guarded([&]() -> aegg_status {
    if (!signature_text || !term_text || !out)
      return fail("null argument");
    Signature sig = Signature::parse(signature_text);
    EGraph g = term_to_egg(parse_term(term_text), sig);
    if (max_share) g = maximally_share(g);
    ElemId root = default_root_class(g);
    *out = new aegg_graph{std::move(sig), std::move(g.base), root};
    return AEGG_OK;
  });
}

aegg_status aegg_graph_from_json(const char* signature_text,
                                 const char* json_text, aegg_graph** out) {
  return guarded([&]() -> aegg_status {
    if (!signature_text || !json_text || !out) return fail("null argument");
    Signature sig = Signature::parse(signature_text);
    std::optional<ElemId> root;
    LabelledEqHypergraph g =
        graph_from_json(json::parse(json_text), sig, &root);
    *out = new aegg_graph{std::move(sig), std::move(g), root};
    return AEGG_OK;
  });
}

aegg_status aegg_graph_to_json(const aegg_graph* g, char** json_out) {
  return guarded([&]() -> aegg_status {
    if (!g || !json_out) return fail("null argument");
    *json_out = dup_string(graph_to_json(g->graph, g->root).dump(2) + "\n");
    return AEGG_OK;
  });
}

aegg_status aegg_graph_to_dot(const aegg_graph* g, char** dot_out) {
  return guarded([&]() -> aegg_status {
    if (!g || !dot_out) return fail("null argument");
    *dot_out = dup_string(to_dot(g->graph));
    return AEGG_OK;
  });
}

aegg_status aegg_check(const aegg_graph* g, const char* predicate,
                       char** verdict_json_out) {
  return guarded([&]() -> aegg_status {
    if (!g || !predicate || !verdict_json_out) return fail("null argument");
    bool holds = false;
    json verdict = check_verdict(*g, predicate, &holds);
    *verdict_json_out = dup_string(verdict.dump(2) + "\n");
    return holds ? AEGG_OK : AEGG_FAIL;
  });
}

aegg_status aegg_check_morphism(const aegg_graph* dom, const aegg_graph* cod,
                                const char* morphism_json, const char* cls,
                                char** verdict_json_out) {
  return guarded([&]() -> aegg_status {
    if (!dom || !cod || !morphism_json || !cls || !verdict_json_out)
      return fail("null argument");
    EqMorphism m =
        morphism_from_json(json::parse(morphism_json), dom->graph.eq,
                           cod->graph.eq);
    std::string klass = cls;
    if (!validate_eq_morphism(m, dom->graph.eq, cod->graph.eq))
      throw Error("the component maps do not form a morphism");
    bool holds = false;
    if (klass == "mono") {
      holds = is_mono_eq(m);
    } else if (klass == "regular") {
      holds = is_regular_mono_eq(m);
    } else if (klass == "pb") {
      holds = is_pb_mono(m, dom->graph.eq, cod->graph.eq);
    } else if (klass == "T") {
      holds = is_T_morphism(m, dom->graph, cod->graph);
    } else {
      throw Error("unknown morphism class " + klass +
                  " (expected mono, regular, pb or T)");
    }
    json verdict{{"class", klass}, {"holds", holds}};
    *verdict_json_out = dup_string(verdict.dump(2) + "\n");
    return holds ? AEGG_OK : AEGG_FAIL;
  });
}

aegg_status aegg_saturate(aegg_graph* g, const char* rules_text,
                          uint64_t max_iters, uint64_t max_classes,
                          uint64_t max_edges, const char* match_class,
                          char** report_json_out) {
  return guarded([&]() -> aegg_status {
    if (!g || !rules_text || !report_json_out) return fail("null argument");
    std::vector<Rule> rules = compile_rules(rules_text, g->sig);
    SaturationLimits limits;
    limits.max_iters = max_iters;
    limits.max_classes = max_classes;
    limits.max_edges = max_edges;
    MatchClass cls = match_class ? match_class_from_string(match_class)
                                 : MatchClass::Any;
    SaturationOutcome out = saturate(EGraph(g->graph), rules, limits, cls);
    if (g->root) g->root = out.tracking.class_map(*g->root);
    g->graph = std::move(out.graph.base);
    *report_json_out = dup_string(report_to_json(out.report).dump(2) + "\n");
    return out.report.fixpoint ? AEGG_OK : AEGG_LIMIT;
  });
}

aegg_status aegg_extract(const aegg_graph* g, int64_t root_class,
                         const char* cost_json, char** term_out) {
  return guarded([&]() -> aegg_status {
    if (!g || !term_out) return fail("null argument");
    EGraph e(g->graph);
    ElemId root;
    if (root_class >= 0) {
      root = static_cast<ElemId>(root_class);
      if (!g->graph.eq.classes.contains(root))
        throw Error("unknown class " + std::to_string(root_class));
    } else if (g->root) {
      root = *g->root;
    } else {
      root = default_root_class(e);
    }
    CostTable cost;
    if (cost_json) cost = cost_table_from_json(json::parse(cost_json));
    Term t = extract(e, root, cost);
    *term_out = dup_string(term_to_string(t) + "\n");
    return AEGG_OK;
  });
}

aegg_status aegg_lab(const char* kind, uint64_t trials, uint64_t seed,
                     uint32_t max_size, char** report_json_out) {
  return guarded([&]() -> aegg_status {
    if (!kind || !report_json_out) return fail("null argument");
    std::string k = kind;
    GenBounds bounds;
    bounds.max_nodes = max_size;
    bounds.max_edges = max_size;
    bounds.max_arity = 2;
    if (k == "counterexample") {
      EqCube cube = counterexample_cube();
      bool bottom = certify_pushout(cube.bottom);
      bool sides = certify_pullback(cube.back()) && certify_pullback(cube.left()) &&
                   certify_pullback(cube.front()) && certify_pullback(cube.right());
      bool top = certify_pushout(cube.top);
      bool as_expected = bottom && sides && !top;
      json report{{"kind", "counterexample"},
                  {"bottom_pushout", bottom},
                  {"side_pullbacks", sides},
                  {"top_pushout", top},
                  {"ok", as_expected}};
      *report_json_out = dup_string(report.dump(2) + "\n");
      return as_expected ? AEGG_OK : AEGG_FAIL;
    }
    CampaignReport report;
    if (k == "stability") {
      report = check_pb_stability(trials, bounds, seed, MonoClass::Pb);
    } else if (k == "stability-regular") {
      report = check_pb_stability(trials, bounds, seed, MonoClass::Regular);
    } else if (k == "vk") {
      report = check_vk_campaign(trials, bounds, seed);
    } else if (k == "kernel") {
      report = check_kernel_pair_lemmas(trials, seed);
    } else if (k == "closure") {
      report = check_e_closure_preservation(trials, bounds, seed);
    } else {
      throw Error("unknown lab kind " + k);
    }
    *report_json_out = dup_string(report_to_json(report).dump(2) + "\n");
    return report.ok() ? AEGG_OK : AEGG_FAIL;
  });
}

}  // extern "C"
