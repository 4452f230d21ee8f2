#include <catch2/catch_amalgamated.hpp>

#include "strand/games.hpp"
#include "strand/multirel.hpp"
#include "strand/theories.hpp"
#include "strand/words_g.hpp"

using namespace strand;

TEST_CASE("builtin presentations have the expected shape") {
  CHECK(builtin_theory("M").relations.size() == 3);
  CHECK(builtin_theory("B").relations.size() == 22);
  CHECK(builtin_theory("R").relations.size() == 23);
  CHECK(builtin_theory("D").relations.size() == 2);
  CHECK(builtin_theory("G").relations.size() == 31);
  CHECK(builtin_theory("G").sig.gens.size() == 13);
  CHECK_THROWS_AS(builtin_theory("X"), TypeError);
}

TEST_CASE("relation sides are parallel") {
  for (const std::string& name : {"M", "B", "R", "D", "G"}) {
    EquationalTheory th = builtin_theory(name);
    for (auto& r : th.relations) {
      auto tl = typecheck(r.lhs, th.sig);
      auto tr = typecheck(r.rhs, th.sig);
      INFO(th.name << " / " << r.name);
      CHECK(tl == tr);
    }
  }
}

TEST_CASE("monoid theory holds for monotone maps") {
  EquationalTheory th = builtin_theory("M");
  CHECK(check_model(th, [](const TermPtr& t) { return interp_mono(t); }).empty());
}

TEST_CASE("bialgebra theory holds in integer matrices") {
  EquationalTheory th = builtin_theory("B");
  CHECK(check_model(th, [](const TermPtr& t) { return interp_B(t); }).empty());
}

TEST_CASE("qualitative theory holds for boolean relations but not matrices") {
  EquationalTheory th = builtin_theory("R");
  CHECK(check_model(th, [](const TermPtr& t) {
          return quotient_to_rel(interp_B(t));
        }).empty());
  auto over_matrices =
      check_model(th, [](const TermPtr& t) { return interp_B(t); });
  CHECK(over_matrices == std::vector<std::string>{"qualitative"});
}

TEST_CASE("dual-pair theory holds in games") {
  EquationalTheory th = builtin_theory("D");
  CHECK(check_model(th, eval_dual_pair).empty());
}

TEST_CASE("two-polarity theory holds in games") {
  EquationalTheory th = builtin_theory("G");
  auto failures = check_model(th, [](const TermPtr& t) { return games_eval(t); });
  CAPTURE(failures);
  CHECK(failures.empty());
}

// The player-side structure is not axiomatized directly; every qualitative
// bialgebra law must nevertheless hold for it in the model.
TEST_CASE("derived player-side qualitative bialgebra laws hold in games") {
  EquationalTheory g = builtin_theory("G");
  EquationalTheory r = builtin_theory("R");
  std::map<std::string, std::string> names = {{"mu", "muP"},
                                              {"eta", "etaP"},
                                              {"delta", "deltaP"},
                                              {"eps", "epsP"},
                                              {"gamma", "gammaP"}};
  auto to_player = [&](std::string s) {
    auto rep = [&](const std::string& from, const std::string& to) {
      for (std::size_t p; (p = s.find(from)) != std::string::npos;)
        s.replace(p, from.size(), to);
    };
    rep("id(2)", "id(PP)");
    rep("id(1)", "id(P)");
    rep("id(0)", "id(I)");
    return strand::detail::subst_tokens(s, names);
  };
  for (auto& rel : r.relations) {
    std::string l = to_player(print_term(rel.lhs, r.sig));
    std::string rr = to_player(print_term(rel.rhs, r.sig));
    INFO(rel.name << ": " << l << " = " << rr);
    CHECK(games_eval(parse_term(l, g.sig)) == games_eval(parse_term(rr, g.sig)));
  }
}

namespace {
// The crossing on two adjacent wires determined by their polarities; the
// remaining combination (O left of P) has no acyclic strategy.
TermPtr cross_at(std::string& w, int p) {
  char x = w[p], y = w[p + 1];
  std::string g;
  if (x == 'P' && y == 'O') g = "gammaOP";
  else if (x == 'P' && y == 'P') g = "gammaP";
  else g = "gammaO";
  TermPtr t = oten(tid(w.substr(0, p)),
                   oten(tgen(g), tid(w.substr(p + 2))));
  std::swap(w[p], w[p + 1]);
  return t;
}
}  // namespace

TEST_CASE("mixed-polarity Yang-Baxter holds in games") {
  EquationalTheory g = builtin_theory("G");
  for (const std::string& start : {"OOO", "POO", "PPO", "PPP"}) {
    std::string wl = start, wr = start;
    TermPtr lhs = cross_at(wl, 0);
    lhs = ocomp(lhs, cross_at(wl, 1));
    lhs = ocomp(lhs, cross_at(wl, 0));
    TermPtr rhs = cross_at(wr, 1);
    rhs = ocomp(rhs, cross_at(wr, 0));
    rhs = ocomp(rhs, cross_at(wr, 1));
    CHECK(wl == wr);
    CHECK(typecheck(lhs, g.sig) == typecheck(rhs, g.sig));
    INFO(start);
    CHECK(games_eval(lhs) == games_eval(rhs));
  }
}

TEST_CASE("naturality of the mixed crossing") {
  EquationalTheory g = builtin_theory("G");
  auto eq = [&](const std::string& a, const std::string& b) {
    INFO(a << " = " << b);
    CHECK(games_eval(parse_term(a, g.sig)) == games_eval(parse_term(b, g.sig)));
  };
  // sliding a player monoid operation through the mixed crossing
  eq("(muP * id(O)) ; gammaOP",
     "(id(P) * gammaOP) ; (gammaOP * id(P)) ; (id(O) * muP)");
  // fresh player moves slide through
  eq("(etaP * id(O)) ; gammaOP", "id(O) * etaP");
  // discarded player moves slide through
  eq("gammaOP ; (id(O) * epsP)", "epsP * id(O)");
}
