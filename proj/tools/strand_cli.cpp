// Command-line front end: normalization, interpretation, strategy
// composition, model checking, proof compilation, axiom queries, rendering
// and bounded confluence checks.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "strand/games.hpp"
#include "strand/logic.hpp"
#include "strand/multirel.hpp"
#include "strand/terms.hpp"
#include "strand/theories.hpp"
#include "strand/words.hpp"
#include "strand/words_g.hpp"

using json = nlohmann::json;
using namespace strand;

namespace {

std::string slurp_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot read file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

json game_to_json(const GameG& g) {
  json order = json::array();
  for (auto& [a, b] : g.order) order.push_back({a, b});
  return {{"moves", (int)g.pol.size()},
          {"order_pairs", order},
          {"polarities", g.pol}};
}

GameG game_from_json(const json& j) {
  if (j.contains("polarity_word")) return filiform(j["polarity_word"].get<std::string>());
  GameG g;
  g.pol = j["polarities"].get<std::string>();
  if (j.contains("order_pairs"))
    for (auto& p : j["order_pairs"]) g.order.insert({p[0].get<int>(), p[1].get<int>()});
  close_transitively(g.order);
  return g;
}

json move_to_json(Move m) {
  return json::array({m.side == 0 ? "dom" : "cod", m.idx});
}

Move move_from_json(const json& j) {
  std::string side = j[0].get<std::string>();
  if (side != "dom" && side != "cod") throw std::runtime_error("bad move side: " + side);
  return {side == "dom" ? 0 : 1, j[1].get<int>()};
}

json strategy_to_json(const CyclicStrategy& s) {
  json pairs = json::array();
  for (auto& [u, v] : s.pairs)
    pairs.push_back(json::array({move_to_json(u), move_to_json(v)}));
  return {{"A", game_to_json(s.A)},
          {"B", game_to_json(s.B)},
          {"cyclic", !is_strategy(s)},
          {"pairs", pairs}};
}

CyclicStrategy strategy_from_json(const json& j) {
  CyclicStrategy s;
  s.A = game_from_json(j["A"]);
  s.B = game_from_json(j["B"]);
  for (auto& p : j["pairs"]) s.pairs.insert({move_from_json(p[0]), move_from_json(p[1])});
  return s;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Wire-graph rendering of a term: one node per generator occurrence,
// solid edges along the wires.
std::string term_dot(const TermPtr& t, const Signature& sig) {
  auto [src, tgt] = typecheck(t, sig);
  std::ostringstream os;
  os << "digraph term {\n  rankdir=TB;\n";
  std::vector<std::string> wire(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    wire[i] = "in" + std::to_string(i);
    os << "  " << wire[i] << " [shape=point,label=\"\"];\n";
  }
  int node = 0;
  for (const Slice& s : slices(t, sig)) {
    const auto* g = sig.find(s.gen);
    std::string id = "g" + std::to_string(node++);
    os << "  " << id << " [shape=box,label=\"" << s.gen << "\"];\n";
    for (std::size_t k = 0; k < g->src.size(); ++k)
      os << "  " << wire[s.left + k] << " -> " << id << ";\n";
    std::vector<std::string> next(wire.begin(), wire.begin() + s.left);
    for (std::size_t k = 0; k < g->tgt.size(); ++k) next.push_back(id);
    next.insert(next.end(), wire.begin() + s.left + g->src.size(), wire.end());
    wire = std::move(next);
  }
  for (std::size_t i = 0; i < wire.size(); ++i) {
    os << "  out" << i << " [shape=point,label=\"\"];\n";
    os << "  " << wire[i] << " -> out" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string term_ascii(const TermPtr& t, const Signature& sig) {
  auto [src, tgt] = typecheck(t, sig);
  std::ostringstream os;
  os << "source: " << (src.empty() ? "I" : src) << "\n";
  for (const Slice& s : slices(t, sig))
    os << "  [" << s.left << "] " << s.gen << " [" << s.right << "]\n";
  os << "target: " << (tgt.empty() ? "I" : tgt) << "\n";
  return os.str();
}

std::string move_name(const CyclicStrategy& s, Move m) {
  std::ostringstream os;
  os << (m.side == 0 ? "dom" : "cod") << m.idx;
  return os.str();
}

std::string strategy_dot(const CyclicStrategy& s) {
  std::ostringstream os;
  os << "digraph strategy {\n";
  auto emit_moves = [&](int side, const GameG& g) {
    for (int i = 0; i < (int)g.pol.size(); ++i)
      os << "  " << (side == 0 ? "dom" : "cod") << i << " [label=\""
         << (side == 0 ? "dom" : "cod") << i << ":" << g.pol[i] << "\"];\n";
    for (auto& [a, b] : g.order)
      os << "  " << (side == 0 ? "dom" : "cod") << a << " -> "
         << (side == 0 ? "dom" : "cod") << b << " [style=dotted];\n";
  };
  emit_moves(0, s.A);
  emit_moves(1, s.B);
  for (auto& [u, v] : s.pairs)
    os << "  " << move_name(s, u) << " -> " << move_name(s, v) << ";\n";
  os << "}\n";
  return os.str();
}

std::string strategy_ascii(const CyclicStrategy& s) {
  std::ostringstream os;
  os << "dom: " << (s.A.pol.empty() ? "I" : s.A.pol) << "\n";
  os << "cod: " << (s.B.pol.empty() ? "I" : s.B.pol) << "\n";
  for (auto& [u, v] : s.pairs)
    os << "  " << move_name(s, u) << " -> " << move_name(s, v) << "\n";
  os << (is_strategy(s) ? "schedulable\n" : "cyclic\n");
  return os.str();
}

std::vector<std::string> run_check_model(const std::string& theory) {
  EquationalTheory th = builtin_theory(theory);
  if (theory == "M")
    return check_model(th, [](const TermPtr& t) { return interp_mono(t); });
  if (theory == "B")
    return check_model(th, [](const TermPtr& t) { return interp_B(t); });
  if (theory == "R")
    return check_model(th, [](const TermPtr& t) { return quotient_to_rel(interp_B(t)); });
  if (theory == "D") return check_model(th, eval_dual_pair);
  if (theory == "G")
    return check_model(th, [](const TermPtr& t) { return games_eval(t); });
  throw TypeError("no model registered for theory " + theory);
}

json term_to_json(const TermPtr& t, const Signature& sig) {
  return print_term(t, sig);
}

RewriteSystem system_by_name(const std::string& theory) {
  if (theory == "B") return make_system_B();
  if (theory == "R") return make_system_R();
  if (theory == "G") return make_system_G();
  throw TypeError("no rewriting system for theory " + theory);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strand: presented monoidal categories, canonical words and "
               "causal strategies"};
  app.require_subcommand(1);
  std::string theory = "B", term_text, s1_text, s2_text, fmt = "ascii";
  std::string kind, input_text, proof_path, query_text;
  int bound = 4;

  auto* normalize = app.add_subcommand("normalize", "canonical word of a term");
  normalize->add_option("--theory", theory)->check(CLI::IsMember({"B", "R", "G"}));
  normalize->add_option("term", term_text)->required();

  auto* interp = app.add_subcommand("interp", "matrix denotation of a term");
  interp->add_option("--theory", theory)->check(CLI::IsMember({"B"}));
  interp->add_option("term", term_text)->required();

  auto* compose_cmd = app.add_subcommand("compose", "compose two strategies");
  compose_cmd->add_option("s1", s1_text)->required();
  compose_cmd->add_option("s2", s2_text)->required();

  auto* check = app.add_subcommand("check-model", "verify a builtin model");
  check->add_option("--theory", theory)->required()
      ->check(CLI::IsMember({"M", "B", "R", "D", "G"}));

  auto* compile = app.add_subcommand("compile-proof", "proof to strategy");
  compile->add_option("file", proof_path)->required();

  auto* axioms = app.add_subcommand("axioms", "axiom oracle");
  auto* axq = axioms->add_subcommand("query", "decide a propositional sequent");
  axq->add_option("sequent", query_text)->required();

  auto* render = app.add_subcommand("render", "draw a term or strategy");
  render->add_option("kind", kind)->required()->check(CLI::IsMember({"term", "strategy"}));
  render->add_option("input", input_text)->required();
  render->add_option("--format", fmt)->check(CLI::IsMember({"ascii", "dot"}));
  render->add_option("--theory", theory)->check(CLI::IsMember({"B", "R", "G"}));

  auto* confl = app.add_subcommand("confluence", "bounded local confluence check");
  confl->add_option("--theory", theory)->required()
      ->check(CLI::IsMember({"B", "R", "G"}));
  confl->add_option("--bound", bound);

  auto* thdump = app.add_subcommand("theory", "theory introspection");
  auto* dump = thdump->add_subcommand("dump", "print a builtin presentation");
  dump->add_option("--theory", theory)->required()
      ->check(CLI::IsMember({"M", "B", "R", "D", "G"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*normalize) {
      EquationalTheory th = builtin_theory(theory);
      TermPtr t = parse_term(slurp_arg(term_text), th.sig);
      typecheck(t, th.sig);
      LWord w = theory == "B"   ? canonicalize_B(t)
                : theory == "R" ? canonicalize_R(t)
                                : normalize_G(t);
      std::cout << print_word(w) << "\n";
    } else if (*interp) {
      EquationalTheory th = builtin_theory("B");
      TermPtr t = parse_term(slurp_arg(term_text), th.sig);
      MultiRel r = interp_B(t);
      json rows = json::array();
      for (int i = 0; i < r.m; ++i) {
        json row = json::array();
        for (int j = 0; j < r.n; ++j) row.push_back(r.at(i, j));
        rows.push_back(row);
      }
      emit({{"entries", rows}, {"m", r.m}, {"n", r.n}});
    } else if (*compose_cmd) {
      CyclicStrategy a = strategy_from_json(json::parse(slurp_arg(s1_text)));
      CyclicStrategy b = strategy_from_json(json::parse(slurp_arg(s2_text)));
      emit(strategy_to_json(compose_strategies(a, b)));
    } else if (*check) {
      auto failures = run_check_model(theory);
      if (failures.empty()) {
        std::cout << "ok: all " << builtin_theory(theory).relations.size()
                  << " relations hold\n";
      } else {
        for (auto& f : failures) std::cout << "failed: " << f << "\n";
        return 1;
      }
    } else if (*compile) {
      ProofFile pf = parse_proof_file(slurp_arg("@" + proof_path));
      emit(strategy_to_json(interp_proof(pf)));
    } else if (*axq) {
      std::string s = slurp_arg(query_text);
      std::size_t p = 0;
      detail::SExpr e = detail::parse_sexpr(s, p);
      if (!e.is_list || e.kids.size() != 3 || e.kids[1].atom != ",")
        throw ProofError("expected \"(P , Q)\"");
      std::vector<std::string> binders;
      FormulaPtr l = detail::sexpr_formula(e.kids[0], binders);
      FormulaPtr r = detail::sexpr_formula(e.kids[2], binders);
      std::cout << (default_axioms().holds(l, r) ? "true" : "false") << "\n";
    } else if (*render) {
      std::string in = slurp_arg(input_text);
      if (kind == "term") {
        EquationalTheory th = builtin_theory(theory);
        TermPtr t = parse_term(in, th.sig);
        std::cout << (fmt == "dot" ? term_dot(t, th.sig) : term_ascii(t, th.sig));
      } else {
        CyclicStrategy s = strategy_from_json(json::parse(in));
        std::cout << (fmt == "dot" ? strategy_dot(s) : strategy_ascii(s));
      }
    } else if (*confl) {
      auto peaks = check_local_confluence(system_by_name(theory), bound);
      std::cout << "peaks: " << peaks.size() << "\n";
      for (auto& p : peaks)
        std::cout << "  " << print_word(p.word) << " => "
                  << print_word(p.left_nf) << " | " << print_word(p.right_nf)
                  << "\n";
      if (!peaks.empty()) return 1;
    } else if (*dump) {
      EquationalTheory th = builtin_theory(theory);
      json gens = json::array();
      for (auto& g : th.sig.gens)
        gens.push_back({{"name", g.name},
                        {"source", g.src.empty() ? "I" : g.src},
                        {"target", g.tgt.empty() ? "I" : g.tgt}});
      json rels = json::array();
      for (auto& r : th.relations)
        rels.push_back({{"lhs", term_to_json(r.lhs, th.sig)},
                        {"name", r.name},
                        {"rhs", term_to_json(r.rhs, th.sig)}});
      emit({{"generators", gens},
            {"name", th.name},
            {"objects", th.sig.objects},
            {"relations", rels}});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
