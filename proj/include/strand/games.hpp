#pragma once
// Finite polarized games, causal strategies between them, sequential tensor
// and relational composition with hiding, and the strategy interpretation of
// two-polarity terms.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "terms.hpp"

namespace strand {

// A game: one move per character ('O' or 'P') plus a strict play order,
// stored transitively closed.
struct GameG {
  std::string pol;
  std::set<std::pair<int, int>> order;  // (a, b): a is played before b
  bool operator==(const GameG&) const = default;
};

inline void close_transitively(std::set<std::pair<int, int>>& r) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [a, b] : std::set(r))
      for (auto& [c, d] : std::set(r))
        if (b == c && !r.count({a, d})) {
          r.insert({a, d});
          changed = true;
        }
  }
}

inline GameG make_game(std::string pol, std::set<std::pair<int, int>> order) {
  close_transitively(order);
  return {std::move(pol), std::move(order)};
}

// The sequential game of an object word: moves in the given order.
inline GameG filiform(const std::string& pol) {
  GameG g{pol, {}};
  for (int i = 0; i < (int)pol.size(); ++i)
    for (int j = i + 1; j < (int)pol.size(); ++j) g.order.insert({i, j});
  return g;
}

// All moves of a before all moves of b.
inline GameG before_games(const GameG& a, const GameG& b) {
  GameG g{a.pol + b.pol, a.order};
  int off = (int)a.pol.size();
  for (auto& [x, y] : b.order) g.order.insert({x + off, y + off});
  for (int i = 0; i < (int)a.pol.size(); ++i)
    for (int j = 0; j < (int)b.pol.size(); ++j) g.order.insert({i, j + off});
  return g;
}

struct Move {
  int side;  // 0 = domain, 1 = codomain
  int idx;
  auto operator<=>(const Move&) const = default;
};

// A pair set over two games; may or may not satisfy the acyclicity condition
// that makes it an actual strategy.
struct CyclicStrategy {
  GameG A, B;
  std::set<std::pair<Move, Move>> pairs;
  bool operator==(const CyclicStrategy&) const = default;
};
using Strategy = CyclicStrategy;

// A move's role in a dependency: domain moves flip polarity.
// -1 may only appear as a pair source, +1 only as a target.
inline int arrow_pol(const CyclicStrategy& s, Move m) {
  char p = m.side == 0 ? s.A.pol[m.idx] : s.B.pol[m.idx];
  int v = p == 'P' ? 1 : -1;
  return m.side == 0 ? -v : v;
}

inline bool pairs_well_polarized(const CyclicStrategy& s) {
  for (auto& [u, v] : s.pairs) {
    if (u.idx < 0 || v.idx < 0) return false;
    if (u.side == 0 && u.idx >= (int)s.A.pol.size()) return false;
    if (u.side == 1 && u.idx >= (int)s.B.pol.size()) return false;
    if (v.side == 0 && v.idx >= (int)s.A.pol.size()) return false;
    if (v.side == 1 && v.idx >= (int)s.B.pol.size()) return false;
    if (arrow_pol(s, u) != -1 || arrow_pol(s, v) != 1) return false;
  }
  return true;
}

namespace detail {
inline bool digraph_acyclic(int n, const std::set<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto& [a, b] : edges) adj[a].push_back(b);
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (int w : adj[v]) {
          if (state[w] == 1) return false;
          if (state[w] == 0) stack.push_back(w);
        }
      } else {
        if (state[v] == 1) state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

inline int move_node(const CyclicStrategy& s, Move m) {
  return m.side == 0 ? m.idx : (int)s.A.pol.size() + m.idx;
}
}  // namespace detail

// A pair set is a strategy when its dependencies together with both play
// orders admit a schedule.
inline bool is_strategy(const CyclicStrategy& s) {
  if (!pairs_well_polarized(s)) return false;
  int na = (int)s.A.pol.size(), nb = (int)s.B.pol.size();
  std::set<std::pair<int, int>> edges;
  for (auto& [a, b] : s.A.order) edges.insert({a, b});
  for (auto& [a, b] : s.B.order) edges.insert({na + a, na + b});
  for (auto& [u, v] : s.pairs)
    edges.insert({detail::move_node(s, u), detail::move_node(s, v)});
  return detail::digraph_acyclic(na + nb, edges);
}

// Copycat: each move depends on its twin, oriented by polarity.
inline CyclicStrategy id_strategy(const GameG& a) {
  CyclicStrategy s{a, a, {}};
  for (int i = 0; i < (int)a.pol.size(); ++i) {
    if (a.pol[i] == 'P')
      s.pairs.insert({{0, i}, {1, i}});
    else
      s.pairs.insert({{1, i}, {0, i}});
  }
  return s;
}

// Relational composition with hiding: dependencies of the composite are the
// chains through the shared game, i.e. the transitive closure of the two pair
// sets restricted to the outer games. Play orders do not participate; a cycle
// that needs them is caught later by is_strategy.
inline CyclicStrategy compose_strategies(const CyclicStrategy& s,
                                         const CyclicStrategy& t) {
  if (!(s.B == t.A)) throw TypeError("strategy composition: middle games differ");
  int na = (int)s.A.pol.size(), nb = (int)s.B.pol.size(),
      nc = (int)t.B.pol.size();
  int n = na + nb + nc;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  auto node = [&](int seg, int i) { return seg == 0 ? i : seg == 1 ? na + i : na + nb + i; };
  for (auto& [u, v] : s.pairs)
    reach[node(u.side, u.idx)][node(v.side, v.idx)] = true;
  for (auto& [u, v] : t.pairs)
    reach[node(1 + u.side, u.idx)][node(1 + v.side, v.idx)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  CyclicStrategy r{s.A, t.B, {}};
  auto outer = [&](int v) -> Move {
    if (v < na) return {0, v};
    if (v >= na + nb) return {1, v - na - nb};
    return {-1, -1};
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!reach[i][j] || i == j) continue;
      Move u = outer(i), v = outer(j);
      if (u.side >= 0 && v.side >= 0) r.pairs.insert({u, v});
    }
  return r;
}

// Sequential tensor, matching before_games on objects.
inline CyclicStrategy before_strategies(const CyclicStrategy& s,
                                        const CyclicStrategy& t) {
  CyclicStrategy r{before_games(s.A, t.A), before_games(s.B, t.B), s.pairs};
  int da = (int)s.A.pol.size(), db = (int)s.B.pol.size();
  for (auto& [u, v] : t.pairs) {
    auto shift = [&](Move m) -> Move {
      return {m.side, m.idx + (m.side == 0 ? da : db)};
    };
    r.pairs.insert({shift(u), shift(v)});
  }
  return r;
}

inline CyclicStrategy generator_strategy(const std::string& name) {
  auto d = [](int i) -> Move { return {0, i}; };
  auto c = [](int i) -> Move { return {1, i}; };
  auto mk = [](const std::string& dom, const std::string& cod,
               std::set<std::pair<Move, Move>> p) {
    return CyclicStrategy{filiform(dom), filiform(cod), std::move(p)};
  };
  if (name == "muO") return mk("OO", "O", {{c(0), d(0)}, {c(0), d(1)}});
  if (name == "muP") return mk("PP", "P", {{d(0), c(0)}, {d(1), c(0)}});
  if (name == "etaO") return mk("", "O", {});
  if (name == "etaP") return mk("", "P", {});
  if (name == "deltaO") return mk("O", "OO", {{c(0), d(0)}, {c(1), d(0)}});
  if (name == "deltaP") return mk("P", "PP", {{d(0), c(0)}, {d(0), c(1)}});
  if (name == "epsO") return mk("O", "", {});
  if (name == "epsP") return mk("P", "", {});
  if (name == "gammaO") return mk("OO", "OO", {{c(0), d(1)}, {c(1), d(0)}});
  if (name == "gammaP") return mk("PP", "PP", {{d(0), c(1)}, {d(1), c(0)}});
  if (name == "etaOP") return mk("", "OP", {{c(0), c(1)}});
  if (name == "epsOP") return mk("PO", "", {{d(0), d(1)}});
  if (name == "gammaOP") return mk("PO", "OP", {{d(0), c(1)}, {c(0), d(1)}});
  throw TypeError("no strategy for generator: " + name);
}

// The dual-pair theory in games: L is a player move, R an opponent move,
// unit and counit are the dual-pair strategies of the two-polarity theory.
inline CyclicStrategy eval_dual_pair(const TermPtr& t) {
  auto tr = [](const ObjectWord& w) {
    std::string s;
    for (char c : w) s.push_back(c == 'L' ? 'P' : 'O');
    return s;
  };
  switch (t->k) {
    case Term::K::Id: return id_strategy(filiform(tr(t->w)));
    case Term::K::Gen:
      if (t->name == "eta") return generator_strategy("etaOP");
      if (t->name == "eps") return generator_strategy("epsOP");
      throw TypeError("unknown generator: " + t->name);
    case Term::K::Ten:
      return before_strategies(eval_dual_pair(t->a), eval_dual_pair(t->b));
    case Term::K::Comp:
      return compose_strategies(eval_dual_pair(t->a), eval_dual_pair(t->b));
  }
  throw TypeError("corrupt term");
}

inline CyclicStrategy games_eval(const TermPtr& t) {
  switch (t->k) {
    case Term::K::Id: return id_strategy(filiform(t->w));
    case Term::K::Gen: return generator_strategy(t->name);
    case Term::K::Ten: return before_strategies(games_eval(t->a), games_eval(t->b));
    case Term::K::Comp: return compose_strategies(games_eval(t->a), games_eval(t->b));
  }
  throw TypeError("corrupt term");
}

}  // namespace strand
