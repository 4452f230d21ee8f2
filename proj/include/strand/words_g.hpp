#pragma once
// Canonical words of the two-polarity theory: their strategy denotation, the
// extraction of a canonical word from a strategy, and the synthesis of a
// presentation term from any acyclic strategy between sequential games.

#include <algorithm>
#include <set>
#include <string>

#include "games.hpp"
#include "terms.hpp"
#include "words.hpp"

namespace strand {

// A well-typed normal word; the check is purely syntactic, so a valid word
// may still denote a pair set that fails the schedule condition.
inline bool validate_canon_G(const LWord& w) {
  RewriteSystem g = make_system_G();
  if (!word_type(w, g)) return false;
  return rewrite_to_normal(w, g) == w;
}

// Letters are read left to right; an E (resp. H) letter creates the next
// domain (resp. codomain) move, and a link letter attaches to the move the
// next E or H to its right will create.
inline CyclicStrategy canon_to_strategy(const LWord& w) {
  auto ty = word_type(w, make_system_G());
  if (!ty) throw TypeError("ill-typed word: " + print_word(w));
  CyclicStrategy s{filiform(ty->dom), filiform(ty->cod), {}};
  int e = 0, h = 0;
  for (const Lt& l : w) {
    switch (l.k) {
      case 'E': ++e; break;
      case 'H': ++h; break;
      case 'W': {
        Move d{0, e}, c{1, h + l.i};
        if (ty->dom[e] == 'P')
          s.pairs.insert({d, c});
        else
          s.pairs.insert({c, d});
        break;
      }
      case 'A': s.pairs.insert({{0, e}, {0, e + l.i}}); break;
      case 'B': s.pairs.insert({{1, h}, {1, h + l.i}}); break;
      default: break;  // Z
    }
  }
  return s;
}

// Emit the letters of each domain move in order, then of each codomain move,
// and normalize. In an acyclic strategy every internal dependency points
// forward in the play order, so every pair is owned by its earlier move.
inline LWord strategy_to_canon(const CyclicStrategy& s) {
  LWord w;
  int na = (int)s.A.pol.size(), nb = (int)s.B.pol.size();
  for (int k = 0; k < na; ++k) {
    std::set<int> dom_targets, cod_links;
    for (auto& [u, v] : s.pairs) {
      if (u.side == 0 && u.idx == k && v.side == 0) dom_targets.insert(v.idx);
      if (u.side == 0 && u.idx == k && v.side == 1) cod_links.insert(v.idx);
      if (v.side == 0 && v.idx == k && u.side == 1) cod_links.insert(u.idx);
      if (v.side == 0 && v.idx == k && u.side == 0 && u.idx > k)
        throw TypeError("backward domain dependency");
    }
    for (int j : dom_targets) w.push_back(lA(j - k));
    for (int c : cod_links) w.push_back(lW(c));
    w.push_back(lE(s.A.pol[k]));
  }
  for (int k = 0; k < nb; ++k) {
    for (auto& [u, v] : s.pairs)
      if (u.side == 1 && u.idx == k && v.side == 1) {
        if (v.idx < k) throw TypeError("backward codomain dependency");
        w.push_back(lB(v.idx - k));
      }
    w.push_back(lH(s.B.pol[k]));
  }
  w.push_back(lZ());
  return rewrite_to_normal(w, make_system_G());
}

// ---- synthesis of a term denoting a given strategy ---------------------

namespace detail {
// One elementary crossing taking the wire at position p one step to the
// right on the object word w (which is updated). P moves right over
// anything and O moves left over anything; the remaining crossing has no
// acyclic strategy and never occurs below.
inline TermPtr cross_step(std::string& w, int p) {
  char x = w[p], y = w[p + 1];
  std::string g;
  if (x == 'P' && y == 'O') g = "gammaOP";
  else if (x == 'P' && y == 'P') g = "gammaP";
  else if (x == 'O' && y == 'O') g = "gammaO";
  else throw TypeError("inexpressible crossing");
  TermPtr t = oten(tid(w.substr(0, p)), oten(tgen(g), tid(w.substr(p + 2))));
  std::swap(w[p], w[p + 1]);
  return t;
}

// Adds the dependency dom0 -> cod i under t : A -> B (dom0 is P): copy the
// head, run t on one copy, walk the other to position i and merge it there.
inline TermPtr wp_gadget(TermPtr t, const std::string& A, const std::string& B,
                         int i) {
  TermPtr r = oten(tgen("deltaP"), tid(A.substr(1)));
  r = ocomp(r, oten(tid("P"), t));
  std::string w = "P" + B;
  for (int k = 0; k < i; ++k) r = ocomp(r, cross_step(w, k));
  r = ocomp(r, oten(tid(B.substr(0, i)),
                    oten(tgen("muP"), tid(B.substr(i + 1)))));
  return r;
}

// Adds dom0 -> dom j (dom0 is P, dom j is O) by precomposition: copy the
// head, walk the copy next to wire j, copy that wire and cancel the pair.
inline TermPtr a_gadget(TermPtr t, const std::string& A, int j) {
  TermPtr r = oten(tgen("deltaP"), tid(A.substr(1)));
  std::string w = "PP" + A.substr(1);
  for (int k = 1; k < j; ++k) r = ocomp(r, cross_step(w, k));
  r = ocomp(r, oten(tid(w.substr(0, j + 1)),
                    oten(tgen("deltaO"), tid(w.substr(j + 2)))));
  std::string w2 = w.substr(0, j + 1) + "O" + w.substr(j + 1);
  r = ocomp(r, oten(tid(w2.substr(0, j)),
                    oten(tgen("epsOP"), tid(w2.substr(j + 2)))));
  return ocomp(r, t);
}

// Adds cod0 -> cod i (cod0 is O, cod i is P) by postcomposition through a
// fresh dual pair merged into both ends.
inline TermPtr b_gadget(TermPtr t, const std::string& B, int i) {
  TermPtr r = oten(tid("O"), oten(tgen("etaOP"), tid(B.substr(1))));
  r = ocomp(r, oten(tgen("muO"), tid("P" + B.substr(1))));
  std::string w = "OP" + B.substr(1);
  for (int k = 1; k < i; ++k) r = ocomp(r, cross_step(w, k));
  r = ocomp(r, oten(tid(w.substr(0, i)),
                    oten(tgen("muP"), tid(w.substr(i + 2)))));
  return ocomp(t, r);
}

// Adds cod0 -> dom j (both O): copy wire j, walk the copy to the front,
// and cancel it against a fresh dual pair merged into the codomain head.
inline TermPtr wo_gadget(TermPtr t, const std::string& A, const std::string& B,
                         int j) {
  TermPtr r = oten(tid(A.substr(0, j)),
                   oten(tgen("deltaO"), tid(A.substr(j + 1))));
  std::string w = A.substr(0, j) + "O" + A.substr(j);
  for (int k = j - 1; k >= 0; --k) r = ocomp(r, cross_step(w, k));
  r = ocomp(r, oten(tid("O"), t));
  r = ocomp(r, oten(tgen("etaOP"), tid("O" + B)));
  r = ocomp(r, oten(tid("O"), oten(tgen("epsOP"), tid(B))));
  r = ocomp(r, oten(tgen("muO"), tid(B.substr(1))));
  return r;
}

inline TermPtr strat_term_rec(const std::string& A, const std::string& B,
                              const std::set<std::pair<Move, Move>>& pairs) {
  if (A.empty() && B.empty()) {
    if (!pairs.empty()) throw TypeError("dangling dependencies");
    return tid("");
  }
  auto touches = [&](int side, int idx) {
    for (auto& [u, v] : pairs)
      if ((u.side == side && u.idx == idx) || (v.side == side && v.idx == idx))
        return true;
    return false;
  };
  auto strip = [&](int side) {
    // drop the head move of the given side and shift its indices down
    std::set<std::pair<Move, Move>> rest;
    for (auto& [u, v] : pairs) {
      if ((u.side == side && u.idx == 0) || (v.side == side && v.idx == 0))
        continue;
      auto sh = [&](Move m) -> Move {
        return {m.side, m.idx - (m.side == side ? 1 : 0)};
      };
      rest.insert({sh(u), sh(v)});
    }
    return rest;
  };
  if (!A.empty() && A[0] == 'P') {
    std::set<int> doms, cods;
    for (auto& [u, v] : pairs)
      if (u.side == 0 && u.idx == 0) (v.side == 0 ? doms : cods).insert(v.idx);
    TermPtr t = ocomp(oten(tgen("epsP"), tid(A.substr(1))),
                      strat_term_rec(A.substr(1), B, strip(0)));
    for (int i : cods) t = wp_gadget(t, A, B, i);
    for (int j : doms) t = a_gadget(t, A, j);
    return t;
  }
  if (!A.empty() && A[0] == 'O' && !touches(0, 0)) {
    return ocomp(oten(tgen("epsO"), tid(A.substr(1))),
                 strat_term_rec(A.substr(1), B, strip(0)));
  }
  if (!B.empty() && B[0] == 'O') {
    std::set<int> doms, cods;
    for (auto& [u, v] : pairs)
      if (u.side == 1 && u.idx == 0) (v.side == 0 ? doms : cods).insert(v.idx);
    TermPtr t = ocomp(strat_term_rec(A, B.substr(1), strip(1)),
                      oten(tgen("etaO"), tid(B.substr(1))));
    for (int i : cods) t = b_gadget(t, B, i);
    for (int j : doms) t = wo_gadget(t, A, B, j);
    return t;
  }
  if (!B.empty() && B[0] == 'P') {
    if (touches(1, 0)) throw TypeError("justified head needs no schedule");
    return ocomp(strat_term_rec(A, B.substr(1), strip(1)),
                 oten(tgen("etaP"), tid(B.substr(1))));
  }
  throw TypeError("no derivation; strategy is cyclic");
}
}  // namespace detail

// Builds a presentation term whose evaluation is the given strategy; the
// games must be the sequential ones on their polarity words.
inline TermPtr term_of_strategy(const CyclicStrategy& s) {
  if (!is_strategy(s)) throw TypeError("cyclic pair set has no term");
  return detail::strat_term_rec(s.A.pol, s.B.pol, s.pairs);
}

inline TermPtr canon_to_term_G(const LWord& w) {
  return term_of_strategy(canon_to_strategy(w));
}

// Normal form of a two-polarity term: evaluate, then extract.
inline LWord normalize_G(const TermPtr& t) {
  return strategy_to_canon(games_eval(t));
}

}  // namespace strand
