// Command-line front end. Everything goes through the public C API; this
// translation unit deliberately includes no library internals.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <aegg.h>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& out_path, const char* text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { aegg_string_free(s); }
};

struct GraphGuard {
  aegg_graph* g = nullptr;
  ~GraphGuard() { aegg_graph_free(g); }
};

int report_error(aegg_status status) {
  if (status == AEGG_ERROR) {
    std::cerr << "error: " << aegg_last_error() << "\n";
    return 1;
  }
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"e-graph saturation and adhesivity checks"};
  app.require_subcommand(1);

  std::string sig_path, term_path, graph_path, rules_path, out_path;
  std::string report_path, cost_path, predicate, morphism_path, dom_path,
      cod_path;
  std::string match_class = "any", morph_class = "mono", lab_class = "pb";
  bool max_share = false, lab_json = false;
  std::uint64_t max_iters = 64, max_classes = 10000, max_edges = 10000;
  std::uint64_t trials = 500, seed = 1;
  std::int64_t root = -1;
  std::uint32_t max_size = 3;

  auto* parse = app.add_subcommand("parse", "term file -> e-graph JSON");
  parse->add_option("term", term_path)->required();
  parse->add_option("--sig", sig_path)->required();
  parse->add_flag("--max-share", max_share);
  parse->add_option("--out", out_path);

  auto* saturate = app.add_subcommand("saturate", "run equality saturation");
  saturate->add_option("egraph", graph_path)->required();
  saturate->add_option("--sig", sig_path)->required();
  saturate->add_option("--rules", rules_path)->required();
  saturate->add_option("--max-iters", max_iters);
  saturate->add_option("--max-classes", max_classes);
  saturate->add_option("--max-edges", max_edges);
  saturate->add_option("--class", match_class)
      ->check(CLI::IsMember({"any", "mono", "pb"}));
  saturate->add_option("--out", out_path);
  saturate->add_option("--report", report_path);

  auto* extract = app.add_subcommand("extract", "minimum-cost term of a class");
  extract->add_option("egraph", graph_path)->required();
  extract->add_option("--sig", sig_path)->required();
  extract->add_option("--root", root);
  extract->add_option("--cost", cost_path);

  auto* check = app.add_subcommand("check", "structural predicates");
  check->add_option("egraph", graph_path)->required();
  check->add_option("--sig", sig_path)->required();
  check->add_option("--predicate", predicate)
      ->required()
      ->check(CLI::IsMember({"term-graph", "e-hypergraph", "egg", "acyclic"}));

  auto* checkm = app.add_subcommand("check-morphism", "morphism classes");
  checkm->add_option("--dom", dom_path)->required();
  checkm->add_option("--cod", cod_path)->required();
  checkm->add_option("--morphism", morphism_path)->required();
  checkm->add_option("--sig", sig_path)->required();
  checkm->add_option("--class", morph_class)
      ->required()
      ->check(CLI::IsMember({"mono", "regular", "pb", "T"}));

  auto* dot = app.add_subcommand("export-dot", "e-graph JSON -> DOT");
  dot->add_option("egraph", graph_path)->required();
  dot->add_option("--sig", sig_path)->required();
  dot->add_option("--out", out_path);

  auto* lab = app.add_subcommand("lab", "property-checking campaigns");
  lab->require_subcommand(1);
  auto* lab_stability = lab->add_subcommand("stability", "Pb-pushout stability");
  lab_stability->add_option("--class", lab_class)
      ->check(CLI::IsMember({"pb", "regular"}));
  auto* lab_vk = lab->add_subcommand("vk", "Van Kampen biconditional");
  auto* lab_kernel = lab->add_subcommand("kernel", "kernel-pair lemmas");
  auto* lab_closure = lab->add_subcommand("closure", "e-closure preservation");
  auto* lab_counter = lab->add_subcommand("counterexample",
                                          "the fixed instability cube");
  for (CLI::App* sub : {lab_stability, lab_vk, lab_kernel, lab_closure,
                        lab_counter}) {
    sub->add_option("--trials", trials);
    sub->add_option("--seed", seed);
    sub->add_option("--max-size", max_size);
    sub->add_flag("--json", lab_json);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) {
      GraphGuard g;
      aegg_status st = aegg_parse_term(read_file(sig_path).c_str(),
                                       read_file(term_path).c_str(),
                                       max_share ? 1 : 0, &g.g);
      if (st != AEGG_OK) return report_error(st);
      StringGuard json;
      st = aegg_graph_to_json(g.g, &json.s);
      if (st != AEGG_OK) return report_error(st);
      write_output(out_path, json.s);
      return 0;
    }

    if (*saturate) {
      GraphGuard g;
      aegg_status st = aegg_graph_from_json(read_file(sig_path).c_str(),
                                            read_file(graph_path).c_str(), &g.g);
      if (st != AEGG_OK) return report_error(st);
      StringGuard report;
      st = aegg_saturate(g.g, read_file(rules_path).c_str(), max_iters,
                         max_classes, max_edges, match_class.c_str(), &report.s);
      if (st == AEGG_ERROR) return report_error(st);
      StringGuard json;
      aegg_status jst = aegg_graph_to_json(g.g, &json.s);
      if (jst != AEGG_OK) return report_error(jst);
      write_output(out_path, json.s);
      if (report_path.empty()) {
        std::cerr << report.s;
      } else {
        std::ofstream out(report_path, std::ios::binary);
        out << report.s;
      }
      return static_cast<int>(st);
    }

    if (*extract) {
      GraphGuard g;
      aegg_status st = aegg_graph_from_json(read_file(sig_path).c_str(),
                                            read_file(graph_path).c_str(), &g.g);
      if (st != AEGG_OK) return report_error(st);
      StringGuard term;
      std::string cost;
      if (!cost_path.empty()) cost = read_file(cost_path);
      st = aegg_extract(g.g, root, cost_path.empty() ? nullptr : cost.c_str(),
                        &term.s);
      if (st != AEGG_OK) return report_error(st);
      std::cout << term.s;
      return 0;
    }

    if (*check) {
      GraphGuard g;
      aegg_status st = aegg_graph_from_json(read_file(sig_path).c_str(),
                                            read_file(graph_path).c_str(), &g.g);
      if (st != AEGG_OK) return report_error(st);
      StringGuard verdict;
      st = aegg_check(g.g, predicate.c_str(), &verdict.s);
      if (st == AEGG_ERROR) return report_error(st);
      std::cout << verdict.s;
      return static_cast<int>(st);
    }

    if (*checkm) {
      std::string sig = read_file(sig_path);
      GraphGuard dom, cod;
      aegg_status st =
          aegg_graph_from_json(sig.c_str(), read_file(dom_path).c_str(), &dom.g);
      if (st != AEGG_OK) return report_error(st);
      st = aegg_graph_from_json(sig.c_str(), read_file(cod_path).c_str(), &cod.g);
      if (st != AEGG_OK) return report_error(st);
      StringGuard verdict;
      st = aegg_check_morphism(dom.g, cod.g, read_file(morphism_path).c_str(),
                               morph_class.c_str(), &verdict.s);
      if (st == AEGG_ERROR) return report_error(st);
      std::cout << verdict.s;
      return static_cast<int>(st);
    }

    if (*dot) {
      GraphGuard g;
      aegg_status st = aegg_graph_from_json(read_file(sig_path).c_str(),
                                            read_file(graph_path).c_str(), &g.g);
      if (st != AEGG_OK) return report_error(st);
      StringGuard text;
      st = aegg_graph_to_dot(g.g, &text.s);
      if (st != AEGG_OK) return report_error(st);
      write_output(out_path, text.s);
      return 0;
    }

    if (*lab) {
      if (const char* env = std::getenv("ADHESIVE_EGG_SEED"))
        seed = std::strtoull(env, nullptr, 10);
      std::string kind;
      if (*lab_stability)
        kind = lab_class == "regular" ? "stability-regular" : "stability";
      else if (*lab_vk)
        kind = "vk";
      else if (*lab_kernel)
        kind = "kernel";
      else if (*lab_closure)
        kind = "closure";
      else if (*lab_counter)
        kind = "counterexample";
      StringGuard report;
      aegg_status st = aegg_lab(kind.c_str(), trials, seed, max_size, &report.s);
      if (st == AEGG_ERROR) return report_error(st);
      if (lab_json) {
        std::cout << report.s;
      } else {
        std::cout << "campaign " << kind
                  << (st == AEGG_OK ? ": ok" : ": failures found") << "\n"
                  << report.s;
      }
      return static_cast<int>(st);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
