#pragma once
// The built-in presentations (monoid, bicommutative bialgebra, its
// qualitative quotient, dual pairs, and the two-polarity game theory),
// together with a generic relation checker against a model evaluator and a
// small monotone-map model.

#include <map>
#include <vector>

#include "terms.hpp"

namespace strand {

struct Relation {
  std::string name;
  TermPtr lhs, rhs;
};

struct EquationalTheory {
  std::string name;
  Signature sig;
  std::vector<Relation> relations;
};

namespace detail {
// Rename alphabetic tokens in a relation template ("mu" -> "muO", ...).
inline std::string subst_tokens(const std::string& s,
                                const std::map<std::string, std::string>& m) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isalpha((unsigned char)s[i])) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum((unsigned char)s[j])) ++j;
      std::string tok = s.substr(i, j - i);
      auto it = m.find(tok);
      out += it == m.end() ? tok : it->second;
      i = j;
    } else {
      out += s[i++];
    }
  }
  return out;
}

// Relation templates of the bicommutative bialgebra, written for the
// one-object signature; reused for the O-generators of the game theory.
inline std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
bialgebra_templates() {
  return {
      {"sym-invol", {"gamma ; gamma", "id(2)"}},
      {"yang-baxter",
       {"(gamma * id(1)) ; (id(1) * gamma) ; (gamma * id(1))",
        "(id(1) * gamma) ; (gamma * id(1)) ; (id(1) * gamma)"}},
      {"mu-assoc", {"(mu * id(1)) ; mu", "(id(1) * mu) ; mu"}},
      {"mu-unit-l", {"(eta * id(1)) ; mu", "id(1)"}},
      {"mu-unit-r", {"(id(1) * eta) ; mu", "id(1)"}},
      {"mu-comm", {"gamma ; mu", "mu"}},
      {"mu-sym-slide-l",
       {"(mu * id(1)) ; gamma", "(id(1) * gamma) ; (gamma * id(1)) ; (id(1) * mu)"}},
      {"mu-sym-slide-r",
       {"(id(1) * mu) ; gamma", "(gamma * id(1)) ; (id(1) * gamma) ; (mu * id(1))"}},
      {"eta-sym-slide-l", {"(eta * id(1)) ; gamma", "id(1) * eta"}},
      {"eta-sym-slide-r", {"(id(1) * eta) ; gamma", "eta * id(1)"}},
      {"delta-coassoc", {"delta ; (delta * id(1))", "delta ; (id(1) * delta)"}},
      {"delta-counit-l", {"delta ; (eps * id(1))", "id(1)"}},
      {"delta-counit-r", {"delta ; (id(1) * eps)", "id(1)"}},
      {"delta-cocomm", {"delta ; gamma", "delta"}},
      {"delta-sym-slide-l",
       {"(delta * id(1)) ; (id(1) * gamma) ; (gamma * id(1))", "gamma ; (id(1) * delta)"}},
      {"delta-sym-slide-r",
       {"(id(1) * delta) ; (gamma * id(1)) ; (id(1) * gamma)", "gamma ; (delta * id(1))"}},
      {"eps-sym-slide-l", {"gamma ; (eps * id(1))", "id(1) * eps"}},
      {"eps-sym-slide-r", {"gamma ; (id(1) * eps)", "eps * id(1)"}},
      {"bialgebra",
       {"mu ; delta",
        "(delta * delta) ; (id(1) * gamma * id(1)) ; (mu * mu)"}},
      {"eta-eps", {"eta ; eps", "id(0)"}},
      {"mu-eps", {"mu ; eps", "eps * eps"}},
      {"eta-delta", {"eta ; delta", "eta * eta"}},
  };
}
}  // namespace detail

inline EquationalTheory builtin_theory(const std::string& name) {
  using detail::subst_tokens;
  EquationalTheory th;
  th.name = name;
  auto add = [&](const std::string& n, const std::string& l, const std::string& r) {
    th.relations.push_back({n, parse_term(l, th.sig), parse_term(r, th.sig)});
  };
  if (name == "M") {
    th.sig = {{"x"}, {{"mu", "xx", "x"}, {"eta", "", "x"}}};
    add("mu-assoc", "(mu * id(1)) ; mu", "(id(1) * mu) ; mu");
    add("mu-unit-l", "(eta * id(1)) ; mu", "id(1)");
    add("mu-unit-r", "(id(1) * eta) ; mu", "id(1)");
    return th;
  }
  if (name == "B" || name == "R") {
    th.sig = {{"x"},
              {{"mu", "xx", "x"},
               {"eta", "", "x"},
               {"delta", "x", "xx"},
               {"eps", "x", ""},
               {"gamma", "xx", "xx"}}};
    for (auto& [n, lr] : detail::bialgebra_templates()) add(n, lr.first, lr.second);
    if (name == "R") add("qualitative", "delta ; mu", "id(1)");
    return th;
  }
  if (name == "D") {
    th.sig = {{"L", "R"}, {{"eta", "", "RL"}, {"eps", "LR", ""}}};
    add("zigzag-l", "(id(L) * eta) ; (eps * id(L))", "id(L)");
    add("zigzag-r", "(eta * id(R)) ; (id(R) * eps)", "id(R)");
    return th;
  }
  if (name == "G") {
    th.sig = {{"O", "P"},
              {{"muO", "OO", "O"},
               {"muP", "PP", "P"},
               {"etaO", "", "O"},
               {"etaP", "", "P"},
               {"deltaO", "O", "OO"},
               {"deltaP", "P", "PP"},
               {"epsO", "O", ""},
               {"epsP", "P", ""},
               {"gammaO", "OO", "OO"},
               {"gammaP", "PP", "PP"},
               {"etaOP", "", "OP"},
               {"epsOP", "PO", ""},
               {"gammaOP", "PO", "OP"}}};
    std::map<std::string, std::string> oMap = {
        {"mu", "muO"},   {"eta", "etaO"},     {"delta", "deltaO"},
        {"eps", "epsO"}, {"gamma", "gammaO"},
    };
    // subst_tokens only renames alphabetic tokens, so the numeric identity
    // widths are rewritten textually first.
    auto fix_ids = [](std::string s) {
      auto rep = [&](const std::string& from, const std::string& to) {
        for (std::size_t p; (p = s.find(from)) != std::string::npos;)
          s.replace(p, from.size(), to);
      };
      rep("id(2)", "id(OO)");
      rep("id(1)", "id(O)");
      rep("id(0)", "id(I)");
      return s;
    };
    for (auto& [n, lr] : detail::bialgebra_templates())
      add(n + "-O", subst_tokens(fix_ids(lr.first), oMap),
          subst_tokens(fix_ids(lr.second), oMap));
    add("qualitative-O", "deltaO ; muO", "id(O)");
    add("zigzag-O", "(etaOP * id(O)) ; (id(O) * epsOP)", "id(O)");
    add("zigzag-P", "(id(P) * etaOP) ; (epsOP * id(P))", "id(P)");
    // The P-side structure is determined by dualizing through the pairing.
    add("dual-muP",
        "muP",
        "(id(PP) * etaOP) ; (id(PP) * deltaO * id(P)) ; "
        "(id(P) * epsOP * id(OP)) ; (epsOP * id(P))");
    add("dual-deltaP",
        "deltaP",
        "(id(P) * (etaOP ; (id(O) * etaOP * id(P)))) ; "
        "(id(P) * muO * id(PP)) ; (epsOP * id(PP))");
    add("dual-etaP", "etaP", "etaOP ; (epsO * id(P))");
    add("dual-epsP", "epsP", "(id(P) * etaO) ; epsOP");
    add("dual-gammaP",
        "gammaP",
        "(id(PP) * (etaOP ; (id(O) * etaOP * id(P)))) ; "
        "(id(PP) * gammaO * id(PP)) ; "
        "(((id(P) * epsOP * id(O)) ; epsOP) * id(PP))");
    add("dual-gammaOP",
        "gammaOP",
        "(etaOP * id(PO)) ; (id(O) * gammaP * id(O)) ; (id(OP) * epsOP)");
    return th;
  }
  throw TypeError("unknown theory: " + name);
}

// Evaluates both sides of every relation in a model and returns the names of
// those that fail; empty result means the evaluator is a model.
template <class Eval>
std::vector<std::string> check_model(const EquationalTheory& th, Eval&& eval) {
  std::vector<std::string> failures;
  for (auto& r : th.relations)
    if (!(eval(r.lhs) == eval(r.rhs))) failures.push_back(r.name);
  return failures;
}

// ---- monotone maps between finite ordinals -----------------------------

struct MonoMap {
  int m = 0, n = 0;
  std::vector<int> img;  // img[i] < n, weakly increasing
  bool operator==(const MonoMap&) const = default;
};

inline MonoMap mono_id(int n) {
  MonoMap f{n, n, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) f.img[i] = i;
  return f;
}
inline MonoMap mono_compose(const MonoMap& f, const MonoMap& g) {
  if (f.n != g.m) throw TypeError("monotone map composition mismatch");
  MonoMap h{f.m, g.n, std::vector<int>(f.m)};
  for (int i = 0; i < f.m; ++i) h.img[i] = g.img[f.img[i]];
  return h;
}
inline MonoMap mono_tensor(const MonoMap& f, const MonoMap& g) {
  MonoMap h{f.m + g.m, f.n + g.n, f.img};
  for (int v : g.img) h.img.push_back(f.n + v);
  return h;
}

// The free one-element-ordinal model of the monoid theory.
inline MonoMap interp_mono(const TermPtr& t) {
  switch (t->k) {
    case Term::K::Id: return mono_id((int)t->w.size());
    case Term::K::Gen:
      if (t->name == "mu") return {2, 1, {0, 0}};
      if (t->name == "eta") return {0, 1, {}};
      throw TypeError("no monotone map for generator: " + t->name);
    case Term::K::Ten: return mono_tensor(interp_mono(t->a), interp_mono(t->b));
    case Term::K::Comp: return mono_compose(interp_mono(t->a), interp_mono(t->b));
  }
  throw TypeError("corrupt term");
}

}  // namespace strand
