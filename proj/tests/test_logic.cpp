#include <catch2/catch_amalgamated.hpp>

#include "strand/logic.hpp"
#include "strand/theories.hpp"

using namespace strand;

TEST_CASE("axiom oracle") {
  auto q = [](const std::string& l, const std::string& r) {
    return default_axioms().holds(parse_formula(l), parse_formula(r));
  };
  CHECK(q("x", "x"));
  CHECK(q("x", "top"));
  CHECK(q("bot", "x"));
  CHECK_FALSE(q("top", "bot"));
  CHECK_FALSE(q("x", "y"));
  CHECK(q("(and x y)", "x"));
  CHECK(q("(and x y)", "(and y x)"));
  CHECK(q("x", "(or y x)"));
  CHECK(q("(or x x)", "x"));
  CHECK_FALSE(q("(or x y)", "x"));
  CHECK(q("(cand x y)", "(and x y)"));
  CHECK(q("(cor x ctop)", "top"));
  CHECK(q("(and x (cand x cbot))", "bot"));
  CHECK(q("(or x cbot)", "x"));
  CHECK(q("(cor cbot x)", "x"));
}

TEST_CASE("custom axioms extend the oracle") {
  AxiomSet ax;
  ax.extra.push_back({parse_formula("p"), parse_formula("q")});
  CHECK(ax.holds(parse_formula("p"), parse_formula("q")));
  CHECK_FALSE(ax.holds(parse_formula("q"), parse_formula("p")));
  ProofFile pf = parse_proof_file("(proof p q ax)");
  CHECK_FALSE(check_proof(pf));
  CHECK(check_proof(pf, ax));
}

TEST_CASE("formulas have games") {
  CHECK(formula_to_game(parse_formula("(forall x (exists y (or x y)))")) == "OP");
  CHECK(formula_to_game(parse_formula("top")) == "");
  CHECK(formula_to_game(parse_formula("(exists x (forall y (and x y)))")) == "PO");
}

TEST_CASE("the thirteen definability witnesses") {
  for (auto& g : builtin_theory("G").sig.gens) {
    ProofFile pf = parse_proof_file(definability_witness(g.name));
    INFO(g.name);
    CHECK(check_proof(pf));
    CHECK(interp_proof(pf) == generator_strategy(g.name));
  }
  CHECK_THROWS_AS(definability_witness("zeta"), ProofError);
}

TEST_CASE("there is no proof of top entails bot") {
  CHECK_FALSE(check_proof(parse_proof_file("(proof top bot ax)")));
}

TEST_CASE("invalid proofs are rejected") {
  // wrong rule for the head quantifier
  CHECK_FALSE(check_proof(
      parse_proof_file("(proof (exists x x) top (forall-l ctop ax))")));
  // eigenvariable captured by the conclusion
  CHECK_FALSE(check_proof(parse_proof_file(
      "(proof (forall x x) (forall y (or y x)) (forall-r x ax))")));
  // unbound witness variable
  CHECK_FALSE(check_proof(
      parse_proof_file("(proof top (exists x x) (exists-r q ax))")));
  // axiom leaf with quantifiers remaining
  CHECK_FALSE(check_proof(parse_proof_file("(proof (forall x x) top ax)")));
}

TEST_CASE("independent rule orders give the same strategy") {
  const std::string lhs = "(forall x x)", rhs = "(forall y (exists z z))";
  std::vector<std::string> orders = {
      "(forall-l ctop (forall-r y (exists-r ctop ax)))",
      "(forall-r y (forall-l ctop (exists-r ctop ax)))",
      "(forall-r y (exists-r ctop (forall-l ctop ax)))"};
  CyclicStrategy expected{filiform("O"), filiform("OP"), {}};
  for (auto& o : orders) {
    ProofFile pf = parse_proof_file("(proof " + lhs + " " + rhs + " " + o + ")");
    INFO(o);
    CHECK(interp_proof(pf) == expected);
  }
}

TEST_CASE("dependent witnesses force dependency pairs in every order") {
  const std::string lhs = "(forall x x)", rhs = "(forall y (exists z z))";
  std::vector<std::string> orders = {
      "(forall-r y (forall-l y (exists-r y ax)))",
      "(forall-r y (exists-r y (forall-l y ax)))"};
  CyclicStrategy expected{
      filiform("O"), filiform("OP"),
      {{{1, 0}, {0, 0}}, {{1, 0}, {1, 1}}}};
  for (auto& o : orders) {
    ProofFile pf = parse_proof_file("(proof " + lhs + " " + rhs + " " + o + ")");
    INFO(o);
    CHECK(interp_proof(pf) == expected);
  }
  // the version with the forall-l witness fixed cannot use y before binding it
  CHECK_FALSE(check_proof(parse_proof_file(
      "(proof " + lhs + " " + rhs + " (forall-l y (forall-r y (exists-r y ax))))")));
}

TEST_CASE("cut composes the two sub-strategies") {
  ProofFile pf = parse_proof_file(
      "(proof (exists x x) (exists z z)"
      " (cut (exists y y)"
      "  (exists-l x (exists-r x ax))"
      "  (exists-l y (exists-r y ax))))");
  CHECK(check_proof(pf));
  CHECK(interp_proof(pf) == id_strategy(filiform("P")));
}

TEST_CASE("cut after introductions lands at the right move offsets") {
  ProofFile pf = parse_proof_file(
      "(proof (exists x x) (exists z z)"
      " (exists-l x (cut top ax (exists-r ctop ax))))");
  CHECK(check_proof(pf));
  CyclicStrategy s = interp_proof(pf);
  CHECK(s.A == filiform("P"));
  CHECK(s.B == filiform("P"));
  CHECK(s.pairs.empty());
}

TEST_CASE("cut children may not reach outer binders") {
  ProofFile pf = parse_proof_file(
      "(proof (forall x x) (forall y y)"
      " (forall-r y (cut y (forall-l y ax) ax)))");
  CHECK_FALSE(check_proof(pf));
  CHECK_THROWS_WITH(interp_proof(pf),
                    Catch::Matchers::ContainsSubstring("outside the cut"));
}
