#pragma once
// A small two-sided sequent calculus for prefix-quantified formulas, an
// axiom oracle on the propositional cores, and the compilation of proofs
// into causal strategies (one move per quantifier, dependencies from the
// free variables of instantiation witnesses).

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "games.hpp"
#include "terms.hpp"

namespace strand {

// First-order terms, locally nameless: bound variables are indices, free
// variables are names. Function symbols: cand/2, cor/2, ctop/0, cbot/0.
struct FTerm {
  enum class K { BVar, FVar, Fun };
  K k = K::FVar;
  int idx = -1;
  std::string name;
  std::vector<FTerm> args;
  bool operator==(const FTerm&) const = default;
};

inline FTerm fvar(std::string n) { return {FTerm::K::FVar, -1, std::move(n), {}}; }
inline FTerm bvar(int i) { return {FTerm::K::BVar, i, "", {}}; }
inline FTerm fun(std::string n, std::vector<FTerm> a) {
  return {FTerm::K::Fun, -1, std::move(n), std::move(a)};
}

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// F ::= forall F | exists F | I(t) | top | bot | F and F | F or F
struct Formula {
  enum class K { Forall, Exists, Atom, Top, Bot, And, Or };
  K k;
  FTerm t;          // Atom
  FormulaPtr a, b;  // quantifiers use a as the body
};

inline FormulaPtr fquant(Formula::K k, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->k = k;
  f->a = std::move(body);
  return f;
}
inline FormulaPtr fatom(FTerm t) {
  auto f = std::make_shared<Formula>();
  f->k = Formula::K::Atom;
  f->t = std::move(t);
  return f;
}
inline FormulaPtr fconst(Formula::K k) {
  auto f = std::make_shared<Formula>();
  f->k = k;
  return f;
}
inline FormulaPtr fbin(Formula::K k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->k = k;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

inline bool formula_eq(const FormulaPtr& x, const FormulaPtr& y) {
  if (x->k != y->k) return false;
  switch (x->k) {
    case Formula::K::Atom: return x->t == y->t;
    case Formula::K::Top:
    case Formula::K::Bot: return true;
    case Formula::K::Forall:
    case Formula::K::Exists: return formula_eq(x->a, y->a);
    default: return formula_eq(x->a, y->a) && formula_eq(x->b, y->b);
  }
}

inline FTerm inst_term(const FTerm& t, int k, const FTerm& u) {
  switch (t.k) {
    case FTerm::K::BVar: return t.idx == k ? u : t;
    case FTerm::K::FVar: return t;
    case FTerm::K::Fun: {
      FTerm r = t;
      for (auto& a : r.args) a = inst_term(a, k, u);
      return r;
    }
  }
  return t;
}

// Replace bound index k (counting binders crossed) by the closed term u.
inline FormulaPtr instantiate(const FormulaPtr& f, int k, const FTerm& u) {
  switch (f->k) {
    case Formula::K::Atom: return fatom(inst_term(f->t, k, u));
    case Formula::K::Top:
    case Formula::K::Bot: return f;
    case Formula::K::Forall:
    case Formula::K::Exists: return fquant(f->k, instantiate(f->a, k + 1, u));
    default: return fbin(f->k, instantiate(f->a, k, u), instantiate(f->b, k, u));
  }
}

inline void fv_term(const FTerm& t, std::set<std::string>& out) {
  if (t.k == FTerm::K::FVar) out.insert(t.name);
  for (auto& a : t.args) fv_term(a, out);
}
inline void fv_formula(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->k) {
    case Formula::K::Atom: fv_term(f->t, out); return;
    case Formula::K::Top:
    case Formula::K::Bot: return;
    case Formula::K::Forall:
    case Formula::K::Exists: fv_formula(f->a, out); return;
    default:
      fv_formula(f->a, out);
      fv_formula(f->b, out);
  }
}

inline bool is_propositional(const FormulaPtr& f) {
  switch (f->k) {
    case Formula::K::Forall:
    case Formula::K::Exists: return false;
    case Formula::K::And:
    case Formula::K::Or:
      return is_propositional(f->a) && is_propositional(f->b);
    default: return true;
  }
}

// ---- the axiom oracle --------------------------------------------------

// I(cand(s,u)) = I(s) and I(u), I(cor(s,u)) = I(s) or I(u),
// I(ctop) = top, I(cbot) = bot.
inline FormulaPtr unfold_atom(const FTerm& t) {
  if (t.k == FTerm::K::Fun) {
    if (t.name == "cand")
      return fbin(Formula::K::And, unfold_atom(t.args[0]), unfold_atom(t.args[1]));
    if (t.name == "cor")
      return fbin(Formula::K::Or, unfold_atom(t.args[0]), unfold_atom(t.args[1]));
    if (t.name == "ctop") return fconst(Formula::K::Top);
    if (t.name == "cbot") return fconst(Formula::K::Bot);
  }
  return fatom(t);
}
inline FormulaPtr unfold(const FormulaPtr& f) {
  switch (f->k) {
    case Formula::K::Atom: return unfold_atom(f->t);
    case Formula::K::And:
    case Formula::K::Or: return fbin(f->k, unfold(f->a), unfold(f->b));
    default: return f;
  }
}

namespace detail {
inline bool mem_rec(const FormulaPtr& l, const FormulaPtr& r) {
  using K = Formula::K;
  if (formula_eq(l, r)) return true;
  if (r->k == K::Top) return true;
  if (l->k == K::Bot) return true;
  if (r->k == K::And) return mem_rec(l, r->a) && mem_rec(l, r->b);
  if (l->k == K::Or) return mem_rec(l->a, r) && mem_rec(l->b, r);
  if (l->k == K::And) return mem_rec(l->a, r) || mem_rec(l->b, r);
  if (r->k == K::Or) return mem_rec(l, r->a) || mem_rec(l, r->b);
  return false;
}
}  // namespace detail

struct AxiomSet {
  std::vector<std::pair<FormulaPtr, FormulaPtr>> extra;
  bool holds(const FormulaPtr& l, const FormulaPtr& r) const {
    if (detail::mem_rec(unfold(l), unfold(r))) return true;
    for (auto& [a, b] : extra)
      if (formula_eq(l, a) && formula_eq(r, b)) return true;
    return false;
  }
};
inline AxiomSet default_axioms() { return {}; }

// ---- proofs ------------------------------------------------------------

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;
struct Proof {
  enum class K { Ax, ForallL, ForallR, ExistsL, ExistsR, Cut };
  K k;
  FTerm t;          // ForallL / ExistsR witness
  std::string var;  // ForallR / ExistsL eigenvariable
  FormulaPtr cut;   // Cut formula
  ProofPtr a, b;
};

struct ProofFile {
  FormulaPtr lhs, rhs;
  ProofPtr tree;
};

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The game of a formula: one move per prefix quantifier, universals are
// opponent moves, existentials are player moves.
inline std::string formula_to_game(FormulaPtr f) {
  std::string w;
  while (f->k == Formula::K::Forall || f->k == Formula::K::Exists) {
    w.push_back(f->k == Formula::K::Forall ? 'O' : 'P');
    f = f->a;
  }
  return w;
}

namespace detail {
struct ProofCtx {
  std::map<std::string, Move> env;
  std::set<std::string> outer;  // names bound outside the current cut segment
  int li = 0, ri = 0;
};

inline void run_proof(FormulaPtr L, FormulaPtr R, const ProofPtr& p,
                      ProofCtx ctx, std::set<std::pair<Move, Move>>& pairs,
                      const AxiomSet& ax);

inline CyclicStrategy interp_segment(const FormulaPtr& L, const FormulaPtr& R,
                                     const ProofPtr& p, const AxiomSet& ax,
                                     std::set<std::string> outer) {
  ProofCtx ctx;
  ctx.outer = std::move(outer);
  std::set<std::pair<Move, Move>> pairs;
  run_proof(L, R, p, std::move(ctx), pairs, ax);
  return {filiform(formula_to_game(L)), filiform(formula_to_game(R)), pairs};
}

inline void witness_pairs(const FTerm& t, Move target, const ProofCtx& ctx,
                          std::set<std::pair<Move, Move>>& pairs) {
  std::set<std::string> vs;
  fv_term(t, vs);
  for (auto& v : vs) {
    auto it = ctx.env.find(v);
    if (it == ctx.env.end()) {
      if (ctx.outer.count(v))
        throw ProofError("witness uses a variable bound outside the cut: " + v);
      throw ProofError("unbound variable in witness: " + v);
    }
    pairs.insert({it->second, target});
  }
}

inline void run_proof(FormulaPtr L, FormulaPtr R, const ProofPtr& p,
                      ProofCtx ctx, std::set<std::pair<Move, Move>>& pairs,
                      const AxiomSet& ax) {
  using K = Proof::K;
  using F = Formula::K;
  switch (p->k) {
    case K::Ax:
      if (!is_propositional(L) || !is_propositional(R))
        throw ProofError("axiom leaf reached with quantifiers remaining");
      if (!ax.holds(L, R)) throw ProofError("sequent is not an axiom");
      return;
    case K::ForallL: {
      if (L->k != F::Forall) throw ProofError("forall-l: head is not a universal");
      witness_pairs(p->t, {0, ctx.li}, ctx, pairs);
      ctx.li++;
      run_proof(instantiate(L->a, 0, p->t), R, p->a, std::move(ctx), pairs, ax);
      return;
    }
    case K::ExistsR: {
      if (R->k != F::Exists) throw ProofError("exists-r: head is not an existential");
      witness_pairs(p->t, {1, ctx.ri}, ctx, pairs);
      ctx.ri++;
      run_proof(L, instantiate(R->a, 0, p->t), p->a, std::move(ctx), pairs, ax);
      return;
    }
    case K::ForallR:
    case K::ExistsL: {
      bool right = p->k == K::ForallR;
      const FormulaPtr& side = right ? R : L;
      if (side->k != (right ? F::Forall : F::Exists))
        throw ProofError(std::string(right ? "forall-r" : "exists-l") +
                         ": head quantifier missing");
      std::set<std::string> used;
      fv_formula(L, used);
      fv_formula(R, used);
      if (used.count(p->var) || ctx.env.count(p->var) || ctx.outer.count(p->var))
        throw ProofError("eigenvariable is not fresh: " + p->var);
      Move m = right ? Move{1, ctx.ri++} : Move{0, ctx.li++};
      ctx.env[p->var] = m;
      FormulaPtr opened = instantiate(side->a, 0, fvar(p->var));
      if (right)
        run_proof(L, opened, p->a, std::move(ctx), pairs, ax);
      else
        run_proof(opened, R, p->a, std::move(ctx), pairs, ax);
      return;
    }
    case K::Cut: {
      std::set<std::string> outer = ctx.outer;
      for (auto& [n, m] : ctx.env) outer.insert(n);
      CyclicStrategy s1 = interp_segment(L, p->cut, p->a, ax, outer);
      CyclicStrategy s2 = interp_segment(p->cut, R, p->b, ax, outer);
      CyclicStrategy c = compose_strategies(s1, s2);
      for (auto [u, v] : c.pairs) {
        u.idx += u.side == 0 ? ctx.li : ctx.ri;
        v.idx += v.side == 0 ? ctx.li : ctx.ri;
        pairs.insert({u, v});
      }
      return;
    }
  }
  throw ProofError("corrupt proof tree");
}
}  // namespace detail

// Checks the proof and returns the strategy of its conclusion.
inline CyclicStrategy interp_proof(const ProofFile& pf,
                                   const AxiomSet& ax = default_axioms()) {
  return detail::interp_segment(pf.lhs, pf.rhs, pf.tree, ax, {});
}

inline bool check_proof(const ProofFile& pf,
                        const AxiomSet& ax = default_axioms()) {
  try {
    interp_proof(pf, ax);
    return true;
  } catch (const ProofError&) {
    return false;
  }
}

// ---- concrete syntax ---------------------------------------------------
//
//   term    ::= NAME | ctop | cbot | (cand term term) | (cor term term)
//   formula ::= top | bot | term
//             | (forall x formula) | (exists x formula)
//             | (and formula formula) | (or formula formula)
//   proof   ::= ax | (ax)
//             | (forall-l term proof) | (forall-r x proof)
//             | (exists-l x proof)    | (exists-r term proof)
//             | (cut formula proof proof)
//   file    ::= (proof formula formula proof)

namespace detail {
struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> kids;
  bool is_list = false;
};

inline SExpr parse_sexpr(const std::string& s, std::size_t& p) {
  auto skip = [&] {
    while (p < s.size()) {
      if (std::isspace((unsigned char)s[p])) {
        ++p;
      } else if (s[p] == '#') {
        while (p < s.size() && s[p] != '\n') ++p;
      } else {
        break;
      }
    }
  };
  skip();
  if (p >= s.size()) throw ProofError("unexpected end of input");
  if (s[p] == '(') {
    ++p;
    SExpr e;
    e.is_list = true;
    for (skip(); p < s.size() && s[p] != ')'; skip())
      e.kids.push_back(parse_sexpr(s, p));
    if (p >= s.size()) throw ProofError("missing ')'");
    ++p;
    return e;
  }
  if (s[p] == ')') throw ProofError("unexpected ')'");
  SExpr e;
  if (s[p] == ',') {
    e.atom = ",";
    ++p;
    return e;
  }
  while (p < s.size() && !std::isspace((unsigned char)s[p]) && s[p] != '(' &&
         s[p] != ')' && s[p] != ',')
    e.atom.push_back(s[p++]);
  return e;
}

inline FTerm sexpr_term(const SExpr& e, const std::vector<std::string>& binders) {
  if (!e.is_list) {
    if (e.atom == "ctop" || e.atom == "cbot") return fun(e.atom, {});
    for (int d = (int)binders.size() - 1; d >= 0; --d)
      if (binders[d] == e.atom) return bvar((int)binders.size() - 1 - d);
    return fvar(e.atom);
  }
  if (e.kids.size() == 3 && !e.kids[0].is_list &&
      (e.kids[0].atom == "cand" || e.kids[0].atom == "cor"))
    return fun(e.kids[0].atom,
               {sexpr_term(e.kids[1], binders), sexpr_term(e.kids[2], binders)});
  throw ProofError("bad term syntax");
}

inline FormulaPtr sexpr_formula(const SExpr& e, std::vector<std::string>& binders) {
  if (!e.is_list) {
    if (e.atom == "top") return fconst(Formula::K::Top);
    if (e.atom == "bot") return fconst(Formula::K::Bot);
    return fatom(sexpr_term(e, binders));
  }
  if (e.kids.empty()) throw ProofError("empty formula");
  const std::string& h = e.kids[0].atom;
  if ((h == "forall" || h == "exists") && e.kids.size() == 3) {
    binders.push_back(e.kids[1].atom);
    FormulaPtr body = sexpr_formula(e.kids[2], binders);
    binders.pop_back();
    return fquant(h == "forall" ? Formula::K::Forall : Formula::K::Exists, body);
  }
  if ((h == "and" || h == "or") && e.kids.size() == 3) {
    return fbin(h == "and" ? Formula::K::And : Formula::K::Or,
                sexpr_formula(e.kids[1], binders),
                sexpr_formula(e.kids[2], binders));
  }
  return fatom(sexpr_term(e, binders));
}

inline ProofPtr sexpr_proof(const SExpr& e) {
  auto mk = [] { return std::make_shared<Proof>(); };
  std::vector<std::string> no_binders;
  if (!e.is_list) {
    if (e.atom == "ax") {
      auto p = mk();
      p->k = Proof::K::Ax;
      return p;
    }
    throw ProofError("bad proof leaf: " + e.atom);
  }
  if (e.kids.empty()) throw ProofError("empty proof node");
  const std::string& h = e.kids[0].atom;
  auto p = mk();
  if (h == "ax" && e.kids.size() == 1) {
    p->k = Proof::K::Ax;
    return p;
  }
  if ((h == "forall-l" || h == "exists-r") && e.kids.size() == 3) {
    p->k = h == "forall-l" ? Proof::K::ForallL : Proof::K::ExistsR;
    p->t = sexpr_term(e.kids[1], no_binders);
    p->a = sexpr_proof(e.kids[2]);
    return p;
  }
  if ((h == "forall-r" || h == "exists-l") && e.kids.size() == 3) {
    p->k = h == "forall-r" ? Proof::K::ForallR : Proof::K::ExistsL;
    p->var = e.kids[1].atom;
    p->a = sexpr_proof(e.kids[2]);
    return p;
  }
  if (h == "cut" && e.kids.size() == 4) {
    std::vector<std::string> binders;
    p->k = Proof::K::Cut;
    p->cut = sexpr_formula(e.kids[1], binders);
    p->a = sexpr_proof(e.kids[2]);
    p->b = sexpr_proof(e.kids[3]);
    return p;
  }
  throw ProofError("bad proof syntax: " + h);
}
}  // namespace detail

inline FormulaPtr parse_formula(const std::string& s) {
  std::size_t p = 0;
  detail::SExpr e = detail::parse_sexpr(s, p);
  std::vector<std::string> binders;
  return detail::sexpr_formula(e, binders);
}

inline ProofFile parse_proof_file(const std::string& s) {
  std::size_t p = 0;
  detail::SExpr e = detail::parse_sexpr(s, p);
  if (!e.is_list || e.kids.size() != 4 || e.kids[0].atom != "proof")
    throw ProofError("expected (proof LHS RHS TREE)");
  std::vector<std::string> binders;
  ProofFile pf;
  pf.lhs = detail::sexpr_formula(e.kids[1], binders);
  pf.rhs = detail::sexpr_formula(e.kids[2], binders);
  pf.tree = detail::sexpr_proof(e.kids[3]);
  return pf;
}

// A proof whose strategy is the named two-polarity generator.
inline std::string definability_witness(const std::string& name) {
  if (name == "muP")
    return "(proof (exists x (exists y (and x y))) (exists z z)"
           " (exists-l x (exists-l y (exists-r (cand x y) ax))))";
  if (name == "etaP")
    return "(proof top (exists x x) (exists-r ctop ax))";
  if (name == "deltaP")
    return "(proof (exists x x) (exists y (exists z (and y z)))"
           " (exists-l x (exists-r x (exists-r x ax))))";
  if (name == "epsP")
    return "(proof (exists x x) top (exists-l x ax))";
  if (name == "gammaP")
    return "(proof (exists x (exists y (and x y))) (exists z (exists t (and t z)))"
           " (exists-l x (exists-l y (exists-r y (exists-r x ax)))))";
  if (name == "muO")
    return "(proof (forall x (forall y (or x y))) (forall z z)"
           " (forall-r z (forall-l z (forall-l z ax))))";
  if (name == "etaO")
    return "(proof bot (forall x x) (forall-r x ax))";
  if (name == "deltaO")
    return "(proof (forall x x) (forall y (forall z (or y z)))"
           " (forall-r y (forall-r z (forall-l (cor y z) ax))))";
  if (name == "epsO")
    return "(proof (forall x x) bot (forall-l cbot ax))";
  if (name == "gammaO")
    return "(proof (forall x (forall y (or x y))) (forall z (forall t (or t z)))"
           " (forall-r z (forall-r t (forall-l t (forall-l z ax)))))";
  if (name == "etaOP")
    return "(proof top (forall x (exists y (or x y)))"
           " (forall-r x (exists-r (cor x ctop) ax)))";
  if (name == "epsOP")
    return "(proof (exists x (forall y (and x y))) bot"
           " (exists-l x (forall-l (cand x cbot) ax)))";
  if (name == "gammaOP")
    return "(proof (exists x (forall y (and x y))) (forall z (exists t (and t z)))"
           " (forall-r z (exists-l x (forall-l z (exists-r x ax)))))";
  throw ProofError("no definability witness for: " + name);
}

}  // namespace strand
