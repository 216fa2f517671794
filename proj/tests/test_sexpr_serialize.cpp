#include <doctest.h>

#include "serialize.hpp"

using namespace aegg;

TEST_CASE("term parsing") {
  CHECK(term_to_string(parse_term("(/ (* a 2) 2)")) == "(/ (* a 2) 2)");
  CHECK(parse_term("a") == Term{"a", {}});
  CHECK(parse_term("  (f x ; comment\n y)").children.size() == 2);
  SUBCASE("position-annotated errors") {
    CHECK_THROWS_WITH_AS(parse_term("(/ a"), "unclosed list at 1:5", ParseError);
    CHECK_THROWS_AS(parse_term("()"), ParseError);
    CHECK_THROWS_AS(parse_term("(f a) b"), ParseError);
    CHECK_THROWS_AS(parse_term(")"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
  }
}

TEST_CASE("rule file parsing") {
  std::vector<RuleSpec> rules = parse_rules(
      "; the optimisation corpus\n"
      "(rule assoc (/ (* x y) z) (* x (/ y z)))\n"
      "(rule div-self (/ x x) 1 :nac (* x x))\n");
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].name == "assoc");
  CHECK(rules[0].nacs.empty());
  CHECK(rules[1].nacs.size() == 1);
  CHECK(term_to_string(rules[1].nacs[0]) == "(* x x)");
  CHECK_THROWS_AS(parse_rules("(rule incomplete (/ x x))"), ParseError);
  CHECK_THROWS_AS(parse_rules("(notarule a b c)"), ParseError);
}

TEST_CASE("finite set and function JSON") {
  FinSet s({3, 1, 2});
  CHECK(finset_from_json(finset_to_json(s)) == s);
  FinFn f(FinSet::range(2), FinSet::range(3), {2, 0});
  CHECK(finfn_from_json(finfn_to_json(f)) == f);
}

TEST_CASE("graph JSON round-trips") {
  Signature sig({{"a", 0}, {"1", 0}, {"2", 0}, {"*", 2}, {"/", 2}});
  EGraph g = term_to_egg(parse_term("(/ (* a 2) 2)"), sig);
  json j = graph_to_json(g.base, 0);
  std::optional<ElemId> root;
  LabelledEqHypergraph back = graph_from_json(j, sig, &root);
  CHECK(back == g.base);
  CHECK(root == ElemId{0});
  SUBCASE("serialization is byte-stable") {
    CHECK(graph_to_json(g.base, 0).dump() == j.dump());
  }
  SUBCASE("schema errors are reported") {
    json bad = j;
    bad.erase("q");
    CHECK_THROWS(graph_from_json(bad, sig, nullptr));
  }
}

TEST_CASE("morphism JSON") {
  Signature sig({{"a", 0}, {"/", 2}});
  EGraph g = term_to_egg(parse_term("(/ a a)"), sig);
  EqMorphism id = identity_eq(g.base.eq);
  json j = morphism_to_json(id);
  EqMorphism back = morphism_from_json(j, g.base.eq, g.base.eq);
  CHECK(back == id);
  SUBCASE("class component is induced when omitted") {
    json partial = j;
    partial.erase("classes");
    CHECK(morphism_from_json(partial, g.base.eq, g.base.eq) == id);
  }
}

TEST_CASE("DOT export") {
  Signature sig({{"a", 0}, {"/", 2}});
  EGraph g = term_to_egg(parse_term("(/ a a)"), sig);
  std::string dot = to_dot(g.base);
  SUBCASE("matches the middle-diagram shape") {
    // 3 boxes, 3 dots, one dashed cluster with the two a-target dots
    CHECK(dot.find("e0 [shape=box, label=\"/\"]") != std::string::npos);
    CHECK(dot.find("subgraph cluster_q1") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') > 10);
  }
  SUBCASE("byte-identical across runs") { CHECK(to_dot(g.base) == dot); }
}

TEST_CASE("report JSON") {
  CampaignReport r;
  r.kind = "pb-stability";
  r.trials = 5;
  r.performed = 5;
  r.seed = 42;
  json j = report_to_json(r);
  CHECK(j["ok"] == true);
  CHECK(j["kind"] == "pb-stability");
  SaturationReport s;
  s.fixpoint = true;
  s.per_rule["assoc"] = 2;
  json js = report_to_json(s);
  CHECK(js["fixpoint"] == true);
  CHECK(js["rules"]["assoc"] == 2);
}

TEST_CASE("cost tables") {
  CostTable t = cost_table_from_json(json::parse(R"({"*": 3, "a": 2})"));
  CHECK(t.of("*") == 3);
  CHECK(t.of("/") == 1);
}
